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

// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "esd/esd.hpp"
#include "esd/sampling.hpp"

using namespace esd;

namespace {

const double kLn2 = std::numbers::ln2;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Scenario xs(double a, double b, double c, double d, double zsq, NoiseKind k) {
  return {XStateParams{a, b, c, d, std::sqrt(zsq)}, {k, 1.0}};
}
Scenario fam(Family f, double x, NoiseKind k) { return {FamilyParams{f, x}, {k, 1.0}}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome fig1_solid() {
  auto t0 = std::chrono::steady_clock::now();
  auto s = xs(0.1, 0.4, 0.4, 0.1, 0.04, NoiseKind::Amplitude);
  auto a = esd_time_analytic(s);
  BisectionOptions opts;
  opts.tol = 1e-9;
  auto b = esd_time_bisection(s, opts);
  double dt = seconds_since(t0);
  Outcome o;
  if (!a || !a->tau_death || !b.tau_death) return {false, "no death time"};
  double ea = std::abs(*a->tau_death - 1.386), eb = std::abs(*b.tau_death - 1.386);
  o.ok = a->classification == EsdClass::SuddenDeath && b.classification == EsdClass::SuddenDeath && ea <= 5e-4 &&
         eb <= 5e-4 && std::abs(*a->tau_death - std::log(4.0)) < 1e-12 && dt < 1.0;
  o.detail = fmt("analytic %.10f, bisection %.10f, %.3f s", *a->tau_death, *b.tau_death, dt);
  return o;
}

Outcome fig1_dashed() {
  auto s = xs(0.1, 0.2, 0.6, 0.1, 0.04, NoiseKind::Amplitude);
  auto a = esd_time_analytic(s);
  auto b = esd_time_bisection(s);
  double min_c = 1.0;
  for (double t : uniform_grid(50.0, 5001))
    if (t > 0.0) min_c = std::min(min_c, closed_form_concurrence(s, t).value());
  // the right end of the range in wide precision, independent of the library
  long double eta = std::exp(-25.0L);
  long double c50 = 2 * eta * (0.2L - std::sqrt(0.1L * (0.2L + 0.1L - 0.2L * eta * eta)));
  bool ok = a && a->classification == EsdClass::AsymptoticDecay && b.classification == EsdClass::AsymptoticDecay &&
            min_c > 0.0 && c50 > 0.0L;
  return {ok, fmt("min C on (0,50] = %.6g, C(50) = %.6g", min_c, double(c50))};
}

Outcome fig2() {
  auto solid = xs(0.2, 0.3, 0.3, 0.2, 0.09, NoiseKind::Phase);
  auto a = esd_time_analytic(solid);
  auto b = esd_time_bisection(solid);
  auto dashed = esd_time_bisection(xs(0.5, 0.1, 0.4, 0.0, 0.01, NoiseKind::Phase));
  auto da = esd_time_analytic(xs(0.5, 0.1, 0.4, 0.0, 0.01, NoiseKind::Phase));
  if (!a || !a->tau_death || !b.tau_death) return {false, "solid case has no death time"};
  bool ok = std::abs(*a->tau_death - std::log(2.25)) < 1e-12 && std::abs(*b.tau_death - *a->tau_death) <= 1e-8 &&
            std::abs(*a->tau_death - 0.81093) < 1e-5 && dashed.classification == EsdClass::AsymptoticDecay && da &&
            da->classification == EsdClass::AsymptoticDecay;
  return {ok, fmt("solid analytic %.10f, |bisection - analytic| = %.3g", *a->tau_death,
                  std::abs(*b.tau_death - *a->tau_death))};
}

Outcome fig3() {
  auto s1 = esd_time_bisection(xs(0.5, 0.1, 0.4, 0.0, 0.01, NoiseKind::Depolarizing));
  auto s2 = esd_time_bisection(xs(0.1, 0.2, 0.6, 0.1, 0.04, NoiseKind::Depolarizing));
  BisectionOptions numeric;
  numeric.source = TrajectorySource::Numeric;
  numeric.scan_points = 512;
  numeric.tau_max = 10.0;
  auto n1 = esd_time_bisection(xs(0.5, 0.1, 0.4, 0.0, 0.01, NoiseKind::Depolarizing), numeric);
  auto n2 = esd_time_bisection(xs(0.1, 0.2, 0.6, 0.1, 0.04, NoiseKind::Depolarizing), numeric);
  bool ok = s1.classification == EsdClass::SuddenDeath && s2.classification == EsdClass::SuddenDeath &&
            n1.classification == EsdClass::SuddenDeath && n2.classification == EsdClass::SuddenDeath;
  if (!ok) return {false, "a caption case does not die"};
  return {std::abs(*s1.tau_death - *n1.tau_death) < 1e-6 && std::abs(*s2.tau_death - *n2.tau_death) < 1e-6,
          fmt("death at %.8f and %.8f", *s1.tau_death, *s2.tau_death)};
}

Outcome bell() {
  Scenario s{XStateParams{0.0, 0.5, 0.5, 0.0, 0.5}, {NoiseKind::Amplitude, 1.0}};
  auto grid = uniform_grid(20.0, 401);
  double worst_a = 0.0, worst_p = 0.0, worst_d = 0.0;
  for (NoiseKind k : {NoiseKind::Amplitude, NoiseKind::Phase, NoiseKind::Depolarizing}) {
    s.noise.kind = k;
    auto tr = numeric_trajectory(s, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double t = grid[i];
      double p = -std::expm1(-t / 2);
      double expect = k == NoiseKind::Depolarizing ? std::max(0.0, 1 - 2 * p) : std::exp(-t / 2);
      double e = std::abs(tr.c[i] - expect);
      (k == NoiseKind::Amplitude ? worst_a : k == NoiseKind::Phase ? worst_p : worst_d) =
          std::max(k == NoiseKind::Amplitude ? worst_a : k == NoiseKind::Phase ? worst_p : worst_d, e);
    }
  }
  s.noise.kind = NoiseKind::Depolarizing;
  auto b = esd_time_bisection(s);
  bool ok = worst_a <= 1e-10 && worst_p <= 1e-10 && worst_d <= 1e-10 && b.tau_death &&
            std::abs(*b.tau_death - 2 * kLn2) <= 1e-8;
  return {ok, fmt("max errors amp %.3g, phase %.3g, depol %.3g", worst_a, worst_p, worst_d)};
}

Outcome pure_universality() {
  sampling::Rng rng(20261014);
  double worst = 0.0;
  int depol_fail = 0, survive_fail = 0;
  for (int i = 0; i < 100; ++i) {
    auto p = sampling::random_entangled_pure_params(rng, 0.05);
    auto d = esd_time_bisection(Scenario{p, {NoiseKind::Depolarizing, 1.0}});
    if (!d.tau_death)
      ++depol_fail;
    else
      worst = std::max(worst, std::abs(*d.tau_death - 2 * kLn2));
    for (NoiseKind k : {NoiseKind::Amplitude, NoiseKind::Phase}) {
      auto r = esd_time_bisection(Scenario{p, {k, 1.0}});
      if (r.classification != EsdClass::AsymptoticDecay) ++survive_fail;
    }
  }
  return {depol_fail == 0 && survive_fail == 0 && worst <= 1e-8,
          fmt("max |tau - 2 ln 2| = %.3g, %g missing deaths, %g spurious deaths", worst, depol_fail, survive_fail)};
}

Outcome families() {
  struct Case {
    Family f;
    NoiseKind k;
    double x;
    EsdClass expect;
  };
  const Case cases[] = {
      {Family::Isotropic, NoiseKind::Amplitude, 0.620, EsdClass::SuddenDeath},
      {Family::Isotropic, NoiseKind::Amplitude, 0.630, EsdClass::AsymptoticDecay},
      {Family::Werner, NoiseKind::Amplitude, 0.49, EsdClass::SuddenDeath},
      {Family::Werner, NoiseKind::Amplitude, 0.51, EsdClass::AsymptoticDecay},
      {Family::Werner, NoiseKind::Depolarizing, 0.4, EsdClass::SuddenDeath},
      {Family::Werner, NoiseKind::Depolarizing, 0.7, EsdClass::SuddenDeath},
      {Family::Werner, NoiseKind::Depolarizing, 1.0, EsdClass::SuddenDeath},
      {Family::Isotropic, NoiseKind::Depolarizing, 0.55, EsdClass::SuddenDeath},
      {Family::Isotropic, NoiseKind::Depolarizing, 0.75, EsdClass::SuddenDeath},
      {Family::Isotropic, NoiseKind::Depolarizing, 1.0, EsdClass::SuddenDeath},
      {Family::Werner, NoiseKind::Phase, 1.0, EsdClass::AsymptoticDecay},
  };
  int bad = 0;
  std::string which;
  for (const Case& c : cases) {
    auto r = esd_time_bisection(fam(c.f, c.x, c.k));
    if (r.classification != c.expect) {
      ++bad;
      which += std::string(" ") + to_string(c.f) + "/" + to_string(c.k) + fmt("@%g", c.x);
    }
  }
  double iso = esd_boundary(Family::Isotropic, NoiseKind::Amplitude).critical_x.value_or(-1);
  double wer = esd_boundary(Family::Werner, NoiseKind::Amplitude).critical_x.value_or(-1);
  bool ok = bad == 0 && std::abs(iso - 0.625) < 1e-12 && std::abs(wer - 0.5) < 1e-12;
  return {ok, fmt("critical x %.6g and %.6g, ", iso, wer) + std::to_string(bad) + " misclassified" + which};
}

Outcome oracle_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  sampling::Rng rng(8);
  double worst = 0.0;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    auto s = sampling::random_scenario(rng);
    double t = rng.uniform(0.0, 10.0);
    worst = std::max(worst, std::abs(closed_form_concurrence(s, t).value() - numeric_concurrence(s, t).value()));
  }
  double dt = seconds_since(t0);
  return {worst <= 1e-8 && dt < 10.0, fmt("%g samples, max error %.3g, %.2f s", n, worst, dt)};
}

Outcome channel_properties() {
  sampling::Rng rng(9);
  double completeness = 0.0, trace_err = 0.0, min_eig = 0.0;
  for (int i = 0; i < 100; ++i) {
    double v = rng.uniform();
    completeness = std::max({completeness, check_completeness(amplitude_kraus(v)), check_completeness(phase_kraus(v)),
                             check_completeness(depolarizing_kraus(v))});
  }
  auto pick = [&](double v) {
    switch (rng.index(3)) {
      case 0: return lift_first(amplitude_kraus(v));
      case 1: return lift_first(phase_kraus(v));
      default: return lift_first(depolarizing_kraus(v));
    }
  };
  for (int i = 0; i < 500; ++i) {
    auto rho = sampling::random_density_matrix(rng);
    auto out = apply(rho, pick(rng.uniform()));
    auto d = measure_state_defects(out.matrix());
    trace_err = std::max(trace_err, d.trace_error);
    min_eig = std::min(min_eig, d.min_eigenvalue);
  }
  int closure_fail = 0;
  for (int i = 0; i < 500; ++i) {
    auto x = x_state(sampling::random_x_params(rng));
    try {
      as_x_params(apply(x, pick(rng.uniform())), 1e-10);
    } catch (const Error&) {
      ++closure_fail;
    }
  }
  bool ok = completeness <= 1e-14 && trace_err <= 1e-10 && min_eig >= -1e-10 && closure_fail == 0;
  return {ok, fmt("completeness %.3g, trace %.3g, min eigenvalue %.3g", completeness, trace_err, min_eig) +
                  ", X-form failures " + std::to_string(closure_fail)};
}

Outcome measure_properties() {
  sampling::Rng rng(10);
  double lu = 0.0, xo = 0.0;
  for (int i = 0; i < 100; ++i) {
    auto rho = sampling::random_density_matrix(rng);
    auto u = kron(sampling::random_unitary2(rng), sampling::random_unitary2(rng));
    auto moved = DensityMatrix::from_matrix(hermitian_part(u * rho.matrix() * dagger(u)));
    lu = std::max(lu, std::abs(concurrence_wootters(moved).value() - concurrence_wootters(rho).value()));
  }
  for (int i = 0; i < 1000; ++i) {
    auto p = sampling::random_x_params(rng);
    xo = std::max(xo, std::abs(concurrence_x(p).value() - concurrence_wootters(x_state(p)).value()));
  }
  return {lu <= 1e-9 && xo <= 1e-9, fmt("local unitary %.3g, X closed form %.3g", lu, xo)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"fig1 solid: death at 1.386", fig1_solid},
      {"fig1 dashed: asymptotic decay", fig1_dashed},
      {"fig2: phase thresholds", fig2},
      {"fig3: depolarizing sudden death", fig3},
      {"bell state contrasts", bell},
      {"pure state universality", pure_universality},
      {"family boundaries", families},
      {"oracle equivalence", oracle_equivalence},
      {"channel properties", channel_properties},
      {"entanglement measure properties", measure_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
