// Copyright 2026 The esdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "esd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace esd {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double pos(double v) { return v > 0.0 ? v : 0.0; }

double x_state_closed_form(const XStateParams& p, NoiseKind kind, double param) {
  const double z = std::abs(p.z);
  const double a = pos(p.a), b = pos(p.b), c = pos(p.c), d = pos(p.d);
  switch (kind) {
    case NoiseKind::Amplitude: {
      const double eta = param;
      return 2.0 * pos(eta * (z - std::sqrt(pos(a * (b + d - b * eta * eta)))));
    }
    case NoiseKind::Phase: {
      const double gamma = param;
      return 2.0 * pos(gamma * z - std::sqrt(a * d));
    }
    case NoiseKind::Depolarizing: {
      const double p_ = param;
      // |3 - 4p|: the evolved coherence magnitude, also past p = 3/4.
      const double coherence = std::abs(3.0 - 4.0 * p_) * z;
      const double populations = pos((3.0 * a + 2.0 * p_ * (c - a)) * (3.0 * d + 2.0 * p_ * (b - d)));
      return (2.0 / 3.0) * pos(coherence - std::sqrt(populations));
    }
  }
  return 0.0;
}

double pure_state_closed_form(const PureStateParams& p, NoiseKind kind, double tau) {
  const double radical = std::sqrt(detail::pure_radicand(p));
  const double decay = std::exp(-tau / 2.0);
  switch (kind) {
    case NoiseKind::Amplitude:
    case NoiseKind::Phase: return 2.0 * decay * radical;
    case NoiseKind::Depolarizing: return 2.0 * pos(2.0 * decay - 1.0) * radical;
  }
  return 0.0;
}

double isotropic_closed_form(double x, NoiseKind kind, double param) {
  switch (kind) {
    case NoiseKind::Amplitude: {
      const double eta = param;
      return (eta / 3.0) * pos((4.0 * x - 1.0) - std::sqrt(pos(2.0 * (1.0 - x) * (3.0 - (1.0 + 2.0 * x) * eta * eta))));
    }
    case NoiseKind::Phase: return pos((4.0 * x - 1.0) * param - 2.0 * (1.0 - x)) / 3.0;
    case NoiseKind::Depolarizing: return pos(2.0 * param * (1.0 - 4.0 * x) + 6.0 * x - 3.0) / 3.0;
  }
  return 0.0;
}

double werner_closed_form(double x, NoiseKind kind, double param) {
  switch (kind) {
    case NoiseKind::Amplitude: {
      const double eta = param;
      return (eta / 2.0) * pos(2.0 * x - std::sqrt(pos((1.0 - x) * (2.0 - (1.0 + x) * eta * eta))));
    }
    case NoiseKind::Phase: return pos(2.0 * x * param - (1.0 - x)) / 2.0;
    case NoiseKind::Depolarizing:
      return pos(2.0 * (3.0 - 4.0 * param) * x - (3.0 + (4.0 * param - 3.0) * x)) / 6.0;
  }
  return 0.0;
}

void check_tau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    std::ostringstream msg;
    msg << "tau = " << tau << " must be finite and >= 0";
    throw ParameterError(msg.str());
  }
}

void check_grid(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check_tau(grid[i]);
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ParameterError("tau grid must be strictly increasing (index " + std::to_string(i) + ")");
  }
}

EsdResult sudden_death(double tau) { return EsdResult{EsdClass::SuddenDeath, tau, EsdMethod::Analytic, {}, false}; }
EsdResult asymptotic() { return EsdResult{EsdClass::AsymptoticDecay, std::nullopt, EsdMethod::Analytic, {}, false}; }

// tau at which a depolarizing parameter p* in (0, 1) is reached.
double tau_from_p(double p_star) { return -2.0 * std::log1p(-p_star); }

}  // namespace

const char* to_string(EsdClass cls) {
  switch (cls) {
    case EsdClass::SuddenDeath: return "SuddenDeath";
    case EsdClass::AsymptoticDecay: return "AsymptoticDecay";
    case EsdClass::InitiallySeparable: return "InitiallySeparable";
  }
  return "unknown";
}

const char* to_string(EsdMethod method) {
  return method == EsdMethod::Analytic ? "Analytic" : "Bisection";
}

void validate(const Scenario& s) {
  validate(s.noise);
  std::visit([](const auto& st) { validate(st); }, s.state);
}

double noise_param(const NoiseSpec& noise, double tau) {
  check_tau(tau);
  switch (noise.kind) {
    case NoiseKind::Amplitude:
    case NoiseKind::Phase: return std::exp(-tau / 2.0);
    case NoiseKind::Depolarizing: return -std::expm1(-tau / 2.0);
  }
  return 0.0;
}

KrausSet noise_kraus(const NoiseSpec& noise, double tau) {
  const double param = noise_param(noise, tau);
  switch (noise.kind) {
    case NoiseKind::Amplitude: return amplitude_kraus(param);
    case NoiseKind::Phase: return phase_kraus(param);
    case NoiseKind::Depolarizing: return depolarizing_kraus(param);
  }
  throw ParameterError("unknown noise kind");
}

DensityMatrix initial_state(const Scenario& s) {
  return std::visit(Overloaded{
                        [](const XStateParams& p) { return x_state(p); },
                        [](const PureStateParams& p) { return pure_state(p); },
                        [](const FamilyParams& p) { return family_state(p); },
                    },
                    s.state);
}

Concurrence closed_form_concurrence(const Scenario& s, double tau) {
  validate(s);
  const double param = noise_param(s.noise, tau);
  const NoiseKind kind = s.noise.kind;
  const double c = std::visit(
      Overloaded{
          [&](const XStateParams& p) { return x_state_closed_form(p, kind, param); },
          [&](const PureStateParams& p) { return pure_state_closed_form(p, kind, tau); },
          [&](const FamilyParams& p) {
            return p.family == Family::Isotropic ? isotropic_closed_form(p.x, kind, param)
                                                 : werner_closed_form(p.x, kind, param);
          },
      },
      s.state);
  return Concurrence(c);
}

Concurrence numeric_concurrence(const Scenario& s, double tau) {
  validate(s);
  const DensityMatrix rho = apply(initial_state(s), lift_first(noise_kraus(s.noise, tau)));
  return concurrence_wootters(rho);
}

Trajectory closed_form_trajectory(const Scenario& s, std::span<const double> tau_grid) {
  check_grid(tau_grid);
  Trajectory out{{tau_grid.begin(), tau_grid.end()}, {}, TrajectorySource::ClosedForm};
  out.c.reserve(tau_grid.size());
  for (double tau : tau_grid) out.c.push_back(closed_form_concurrence(s, tau).value());
  return out;
}

Trajectory numeric_trajectory(const Scenario& s, std::span<const double> tau_grid) {
  check_grid(tau_grid);
  validate(s);
  const DensityMatrix rho0 = initial_state(s);
  Trajectory out{{tau_grid.begin(), tau_grid.end()}, std::vector<double>(tau_grid.size()),
                 TrajectorySource::Numeric};

  // Points are independent; each worker owns a strided slice of the output.
  const std::size_t n = tau_grid.size();
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, n / 64));
  auto run = [&](std::size_t first) {
    for (std::size_t i = first; i < n; i += workers)
      out.c[i] = concurrence_wootters(apply(rho0, lift_first(noise_kraus(s.noise, tau_grid[i])))).value();
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            run(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<double> uniform_grid(double tau_max, int points) {
  if (!(tau_max > 0.0) || !std::isfinite(tau_max)) throw ParameterError("tau_max must be > 0");
  if (points < 2) throw ParameterError("grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) grid[k] = tau_max * k / (points - 1);
  grid.back() = tau_max;
  return grid;
}

std::optional<EsdResult> esd_time_analytic(const Scenario& s) {
  if (closed_form_concurrence(s, 0.0).value() <= 0.0)
    return EsdResult{EsdClass::InitiallySeparable, std::nullopt, EsdMethod::Analytic, {}, false};
  const NoiseKind kind = s.noise.kind;

  return std::visit(
      Overloaded{
          [&](const XStateParams& p) -> std::optional<EsdResult> {
            const double z2 = std::norm(p.z);
            switch (kind) {
              case NoiseKind::Amplitude: {
                if (p.a <= 0.0) return asymptotic();  // C_a = 2 eta |z| > 0
                const double denom = p.a * (p.b + p.d) - z2;
                if (denom <= 0.0) return asymptotic();
                return sudden_death(std::log(p.a * p.b / denom));
              }
              case NoiseKind::Phase: {
                const double ad = p.a * p.d;
                if (ad <= 0.0) return asymptotic();
                return sudden_death(std::log(z2 / ad));
              }
              case NoiseKind::Depolarizing: return std::nullopt;
            }
            return std::nullopt;
          },
          [&](const PureStateParams&) -> std::optional<EsdResult> {
            if (kind == NoiseKind::Depolarizing) return sudden_death(2.0 * std::log(2.0));
            return asymptotic();
          },
          [&](const FamilyParams& p) -> std::optional<EsdResult> {
            const double x = p.x;
            const bool iso = p.family == Family::Isotropic;
            switch (kind) {
              case NoiseKind::Amplitude: return std::nullopt;
              case NoiseKind::Phase:
                if (x >= 1.0) return asymptotic();
                return sudden_death(iso ? 2.0 * std::log((4.0 * x - 1.0) / (2.0 * (1.0 - x)))
                                        : 2.0 * std::log(2.0 * x / (1.0 - x)));
              case NoiseKind::Depolarizing: {
                const double p_star = iso ? (6.0 * x - 3.0) / (2.0 * (4.0 * x - 1.0)) : (3.0 * x - 1.0) / (4.0 * x);
                return sudden_death(tau_from_p(p_star));
              }
            }
            return std::nullopt;
          },
      },
      s.state);
}

EsdResult esd_time_bisection(const Scenario& s, const BisectionOptions& opts) {
  if (!(opts.tau_max > 0.0) || !std::isfinite(opts.tau_max)) throw ParameterError("bisection: tau_max must be > 0");
  if (!(opts.tol > 0.0)) throw ParameterError("bisection: tol must be > 0");
  if (opts.scan_points < 2) throw ParameterError("bisection: scan needs at least 2 points");
  validate(s);

  std::optional<DensityMatrix> rho0;
  if (opts.source == TrajectorySource::Numeric) rho0 = initial_state(s);
  auto dead = [&](double tau) {
    if (opts.source == TrajectorySource::ClosedForm) return closed_form_concurrence(s, tau).value() <= 0.0;
    const DensityMatrix rho = apply(*rho0, lift_first(noise_kraus(s.noise, tau)));
    return concurrence_wootters(rho).value() < kNumericZero;
  };

  EsdResult out{EsdClass::InitiallySeparable, std::nullopt, EsdMethod::Bisection, {}, false};
  if (dead(0.0)) return out;

  const std::vector<double> grid = uniform_grid(opts.tau_max, opts.scan_points);
  std::size_t first_dead = 0;
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (dead(grid[k])) {
      first_dead = k;
      break;
    }
  if (first_dead == 0) {
    out.classification = EsdClass::AsymptoticDecay;
    out.horizon = opts.tau_max;
    return out;
  }

  double lo = grid[first_dead - 1];
  double hi = grid[first_dead];
  while (hi - lo > opts.tol) {
    const double mid = 0.5 * (lo + hi);
    (dead(mid) ? hi : lo) = mid;
  }
  for (std::size_t k = first_dead + 1; k < grid.size(); ++k)
    if (!dead(grid[k])) {
      out.revived = true;
      break;
    }
  out.classification = EsdClass::SuddenDeath;
  out.tau_death = 0.5 * (lo + hi);
  return out;
}

EsdBoundary esd_boundary(Family family, NoiseKind noise) {
  EsdBoundary b;
  b.family = family;
  b.noise = noise;
  const bool iso = family == Family::Isotropic;
  b.entangled_above = iso ? 0.5 : 1.0 / 3.0;
  b.lower = b.entangled_above;
  std::ostringstream desc;
  desc.precision(12);
  switch (noise) {
    case NoiseKind::Amplitude: {
      // Largest x still dying when eta -> 0:
      // isotropic (4x-1)^2 = 6(1-x)  ->  16x^2 - 2x - 5 = 0,
      // Werner    4x^2 = 2(1-x)      ->   2x^2 +  x - 1 = 0.
      const double qa = iso ? 16.0 : 2.0, qb = iso ? -2.0 : 1.0, qc = iso ? -5.0 : -1.0;
      const double root = (-qb + std::sqrt(qb * qb - 4.0 * qa * qc)) / (2.0 * qa);
      b.critical_x = root;
      b.upper = root;
      b.upper_inclusive = false;
      desc << "sudden death for " << b.lower << " < x < " << root << "; asymptotic decay for x >= " << root;
      break;
    }
    case NoiseKind::Phase:
      b.upper = 1.0;
      b.upper_inclusive = false;
      desc << "sudden death for " << b.lower << " < x < 1; asymptotic decay only at x = 1";
      break;
    case NoiseKind::Depolarizing:
      b.upper = 1.0;
      b.upper_inclusive = true;
      desc << "sudden death for all " << b.lower << " < x <= 1";
      break;
  }
  b.description = desc.str();
  return b;
}

}  // namespace esd
