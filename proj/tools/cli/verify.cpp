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

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "esd/esd.hpp"
#include "esd/sampling.hpp"
#include "output.hpp"

namespace esd::cli {
namespace {

using sampling::Rng;

std::string describe(const XStateParams& p) {
  std::ostringstream s;
  s << "xstate a=" << format_number(p.a) << " b=" << format_number(p.b) << " c=" << format_number(p.c)
    << " d=" << format_number(p.d) << " zmod=" << format_number(std::abs(p.z))
    << " zarg=" << format_number(std::arg(p.z));
  return s.str();
}

std::string describe(const PureStateParams& p) {
  std::ostringstream s;
  s << "pure a=" << format_number(p.a) << " b=" << format_number(p.b) << " c=" << format_number(p.c)
    << " d=" << format_number(p.d) << " f=" << format_number(p.f) << " g=" << format_number(p.g)
    << " h=" << format_number(p.h);
  return s.str();
}

std::string describe(const FamilyParams& p) {
  return std::string("family ") + to_string(p.family) + " x=" + format_number(p.x);
}

std::string describe(const Scenario& s) {
  return std::visit([](const auto& st) { return describe(st); }, s.state) + " noise=" + to_string(s.noise.kind);
}

std::string describe(const ComplexMat& m) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < m.entries().size(); ++i)
    s << (i ? " " : "") << format_number(m.entries()[i].real()) << "+" << format_number(m.entries()[i].imag()) << "i";
  s << "]";
  return s.str();
}

class Suite {
 public:
  Suite(std::string name, double tol) { report_.name = std::move(name), report_.tolerance = tol; }

  /// Runs one case; `body` returns the observed error and fills `what`.
  void run_case(const std::function<double(std::string&)>& body) {
    std::string what;
    double err = 0.0;
    bool failed = false;
    try {
      err = body(what);
      failed = !(err <= report_.tolerance);
    } catch (const std::exception& e) {
      failed = true;
      what += std::string(" threw: ") + e.what();
    }
    ++report_.total;
    if (std::isfinite(err)) report_.max_error = std::max(report_.max_error, err);
    if (failed) {
      if (report_.first_failure.empty()) report_.first_failure = what + " (error " + format_number(err) + ")";
    } else {
      ++report_.passed;
    }
  }

  SuiteReport report() const { return report_; }

 private:
  SuiteReport report_;
};

double orthonormality_error(const ComplexMat& v) {
  return frobenius_distance(dagger(v) * v, ComplexMat::identity(v.dim()));
}

ComplexMat reconstruct(const EigDecomposition& e) {
  std::vector<Complex> diag(e.eigenvalues.begin(), e.eigenvalues.end());
  return e.eigenvectors * ComplexMat::diagonal(diag) * dagger(e.eigenvectors);
}

DensityMatrix random_state_any(Rng& rng, std::string& what) {
  switch (rng.index(3)) {
    case 0: {
      auto p = sampling::random_x_params(rng);
      what = describe(p);
      return x_state(p);
    }
    case 1: {
      auto p = sampling::random_pure_params(rng);
      what = describe(p);
      return pure_state(p);
    }
    default: {
      auto rho = sampling::random_density_matrix(rng);
      what = "rho=" + describe(rho.matrix());
      return rho;
    }
  }
}

KrausSet random_lifted_channel(Rng& rng, std::string& what) {
  const NoiseKind kind = sampling::random_noise_kind(rng);
  const double param = rng.uniform();
  what += std::string(" channel=") + to_string(kind) + " param=" + format_number(param);
  switch (kind) {
    case NoiseKind::Amplitude: return lift_first(amplitude_kraus(param));
    case NoiseKind::Phase: return lift_first(phase_kraus(param));
    case NoiseKind::Depolarizing: return lift_first(depolarizing_kraus(param));
  }
  throw ParameterError("unknown noise kind");
}

using SuiteFn = std::function<SuiteReport(Rng&, int)>;

SuiteReport hermitian_eig_suite(Rng& rng, int n) {
  Suite s("linalg.hermitian_eig", 1e-10);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const ComplexMat h = sampling::random_hermitian(rng, rng.index(2) == 0 ? 2 : 4);
      what = "h=" + describe(h);
      const EigDecomposition e = hermitian_eig(h);
      double err = std::max(frobenius_distance(reconstruct(e), h), orthonormality_error(e.eigenvectors));
      for (std::size_t k = 1; k < e.eigenvalues.size(); ++k)
        if (e.eigenvalues[k] > e.eigenvalues[k - 1]) err = INFINITY;
      return err;
    });
  return s.report();
}

SuiteReport kron_suite(Rng& rng, int n) {
  Suite s("linalg.kron", 1e-12);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const ComplexMat a = sampling::random_complex(rng, 2), b = sampling::random_complex(rng, 2);
      const ComplexMat c = sampling::random_complex(rng, 2), d = sampling::random_complex(rng, 2);
      what = "a=" + describe(a) + " b=" + describe(b) + " c=" + describe(c) + " d=" + describe(d);
      const double mixed = frobenius_distance(kron(a, b) * kron(c, d), kron(a * c, b * d));
      const double tr = std::abs(trace(kron(a, b)) - trace(a) * trace(b));
      const double bilinear = frobenius_distance(kron(a + c, b), kron(a, b) + kron(c, b));
      return std::max({mixed, tr, bilinear});
    });
  return s.report();
}

SuiteReport psd_sqrt_suite(Rng& rng, int n) {
  Suite s("linalg.psd_sqrt", 1e-9);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const ComplexMat g = sampling::random_complex(rng, 4);
      const ComplexMat h = hermitian_part(dagger(g) * g);
      what = "h=" + describe(h);
      const ComplexMat r = psd_sqrt(h);
      return std::max(frobenius_distance(r * r, h), hermiticity_defect(r));
    });
  return s.report();
}

SuiteReport constructors_suite(Rng& rng, int n) {
  Suite s("states.constructors", 1e-10);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const auto xp = sampling::random_x_params(rng);
      const auto pp = sampling::random_pure_params(rng);
      const auto fp = sampling::random_family_params(rng);
      what = describe(xp) + "; " + describe(pp) + "; " + describe(fp);
      (void)x_state(xp);
      (void)family_state(fp);
      (void)as_x_params(family_state(fp));
      return std::abs(pure_state(pp).purity() - 1.0);
    });
  return s.report();
}

SuiteReport family_invariance_suite(Rng& rng, int n) {
  Suite s("states.family_invariance", 1e-10);
  const ComplexMat to_phi_plus = kron(ComplexMat::identity(2), Complex(0, 1) * pauli_y());
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const double x = rng.uniform();
      const ComplexMat u = sampling::random_unitary2(rng);
      what = "x=" + format_number(x) + " U=" + describe(u);
      const ComplexMat uu = kron(u, u);
      const ComplexMat uuc = kron(u, conjugate(u));
      const ComplexMat w = werner(x).matrix();
      const ComplexMat iso = isotropic(x).matrix();
      const ComplexMat iso_phi = to_phi_plus * iso * dagger(to_phi_plus);
      return std::max({frobenius_distance(uu * w * dagger(uu), w), frobenius_distance(uu * iso * dagger(uu), iso),
                       frobenius_distance(uuc * iso_phi * dagger(uuc), iso_phi)});
    });
  return s.report();
}

SuiteReport completeness_suite(Rng& rng, int n) {
  Suite s("channels.completeness", 1e-14);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const double v = rng.uniform();
      what = "param=" + format_number(v);
      return std::max({check_completeness(amplitude_kraus(v)), check_completeness(phase_kraus(v)),
                       check_completeness(depolarizing_kraus(v)),
                       check_completeness(lift_first(depolarizing_kraus(v)))});
    });
  return s.report();
}

SuiteReport trace_positivity_suite(Rng& rng, int n) {
  Suite s("channels.trace_positivity", 1e-10);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const DensityMatrix rho = random_state_any(rng, what);
      const KrausSet k = random_lifted_channel(rng, what);
      const StateDefects d = measure_state_defects(apply(rho, k).matrix());
      return std::max({d.trace_error, d.hermiticity, -d.min_eigenvalue});
    });
  return s.report();
}

SuiteReport x_form_suite(Rng& rng, int n) {
  Suite s("channels.x_form_closure", 1e-10);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const auto p = sampling::random_x_params(rng);
      what = describe(p);
      const DensityMatrix out = apply(x_state(p), random_lifted_channel(rng, what));
      const XStateParams q = as_x_params(out);
      return frobenius_distance(x_state(q).matrix(), out.matrix());
    });
  return s.report();
}

SuiteReport marginal_suite(Rng& rng, int n) {
  Suite s("channels.second_qubit_marginal", 1e-12);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const ComplexMat r1 = sampling::random_qubit_state(rng), r2 = sampling::random_qubit_state(rng);
      what = "rho1=" + describe(r1) + " rho2=" + describe(r2);
      const DensityMatrix rho = DensityMatrix::from_matrix(kron(r1, r2));
      const DensityMatrix out = apply(rho, random_lifted_channel(rng, what));
      return frobenius_distance(detail::partial_trace_first(out.matrix()), r2);
    });
  return s.report();
}

SuiteReport composition_suite(Rng& rng, int n) {
  Suite s("channels.composition", 1e-10);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const DensityMatrix rho = random_state_any(rng, what);
      const double e1 = rng.uniform(), e2 = rng.uniform();
      what += " e1=" + format_number(e1) + " e2=" + format_number(e2);
      const auto amp = [](double e) { return lift_first(amplitude_kraus(e)); };
      const auto ph = [](double e) { return lift_first(phase_kraus(e)); };
      return std::max(frobenius_distance(apply(apply(rho, amp(e1)), amp(e2)).matrix(), apply(rho, amp(e1 * e2)).matrix()),
                      frobenius_distance(apply(apply(rho, ph(e1)), ph(e2)).matrix(), apply(rho, ph(e1 * e2)).matrix()));
    });
  return s.report();
}

SuiteReport x_oracle_suite(Rng& rng, int n) {
  Suite s("entanglement.x_state_oracle", 1e-9);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const auto p = sampling::random_x_params(rng);
      what = describe(p);
      return std::abs(concurrence_x(p).value() - concurrence_wootters(x_state(p)).value());
    });
  return s.report();
}

SuiteReport pure_oracle_suite(Rng& rng, int n) {
  Suite s("entanglement.pure_state_oracle", 1e-9);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const auto p = sampling::random_pure_params(rng);
      what = describe(p);
      return std::abs(concurrence_pure(p).value() - concurrence_wootters(pure_state(p)).value());
    });
  return s.report();
}

SuiteReport local_unitary_suite(Rng& rng, int n) {
  Suite s("entanglement.local_unitary_invariance", 1e-9);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const DensityMatrix rho = random_state_any(rng, what);
      const ComplexMat u = kron(sampling::random_unitary2(rng), sampling::random_unitary2(rng));
      what += " U=" + describe(u);
      const DensityMatrix rotated = DensityMatrix::from_matrix(hermitian_part(u * rho.matrix() * dagger(u)));
      return std::abs(concurrence_wootters(rotated).value() - concurrence_wootters(rho).value());
    });
  return s.report();
}

SuiteReport closed_vs_numeric_suite(Rng& rng, int n) {
  Suite s("dynamics.closed_form_vs_numeric", 1e-8);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const Scenario sc = sampling::random_scenario(rng);
      const double tau = rng.uniform(0.0, 10.0);
      what = describe(sc) + " tau=" + format_number(tau);
      return std::abs(closed_form_concurrence(sc, tau).value() - numeric_concurrence(sc, tau).value());
    });
  return s.report();
}

SuiteReport analytic_vs_bisection_suite(Rng& rng, int n) {
  Suite s("dynamics.analytic_vs_bisection", 1e-8);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const Scenario sc = sampling::random_scenario(rng);
      what = describe(sc);
      const auto analytic = esd_time_analytic(sc);
      if (!analytic || analytic->classification != EsdClass::SuddenDeath || *analytic->tau_death > 50.0) return 0.0;
      const EsdResult b = esd_time_bisection(sc, BisectionOptions{50.0, 1e-9, 2048, TrajectorySource::ClosedForm});
      if (b.classification != EsdClass::SuddenDeath) return double(INFINITY);
      return std::abs(*b.tau_death - *analytic->tau_death);
    });
  return s.report();
}

SuiteReport monotone_suite(Rng& rng, int n) {
  Suite s("dynamics.monotone_trajectories", 1e-12);
  const std::vector<double> grid = uniform_grid(10.0, 64);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const Scenario sc = sampling::random_scenario(rng);
      what = describe(sc);
      const Trajectory t = closed_form_trajectory(sc, grid);
      double rise = 0.0;
      for (std::size_t k = 1; k < t.c.size(); ++k) rise = std::max(rise, t.c[k] - t.c[k - 1]);
      return rise;
    });
  return s.report();
}

SuiteReport pure_universality_suite(Rng& rng, int n) {
  Suite s("dynamics.pure_state_death_times", 1e-8);
  for (int i = 0; i < n; ++i)
    s.run_case([&](std::string& what) {
      const PureStateParams p = sampling::random_entangled_pure_params(rng, 1e-3);
      what = describe(p);
      const EsdResult dep = esd_time_bisection(Scenario{p, NoiseSpec{NoiseKind::Depolarizing, 1.0}});
      const EsdResult amp = esd_time_bisection(Scenario{p, NoiseSpec{NoiseKind::Amplitude, 1.0}});
      const EsdResult ph = esd_time_bisection(Scenario{p, NoiseSpec{NoiseKind::Phase, 1.0}});
      if (dep.classification != EsdClass::SuddenDeath || amp.classification != EsdClass::AsymptoticDecay ||
          ph.classification != EsdClass::AsymptoticDecay)
        return double(INFINITY);
      return std::abs(*dep.tau_death - 2.0 * std::log(2.0));
    });
  return s.report();
}

}  // namespace

std::vector<SuiteReport> run_verification(std::uint64_t seed, int cases) {
  const std::vector<SuiteFn> suites = {
      hermitian_eig_suite,     kron_suite,          psd_sqrt_suite,         constructors_suite,
      family_invariance_suite, completeness_suite,  trace_positivity_suite, x_form_suite,
      marginal_suite,          composition_suite,   x_oracle_suite,         pure_oracle_suite,
      local_unitary_suite,     closed_vs_numeric_suite, analytic_vs_bisection_suite, monotone_suite,
      pure_universality_suite,
  };
  std::vector<SuiteReport> reports;
  reports.reserve(suites.size());
  for (std::size_t i = 0; i < suites.size(); ++i) {
    Rng rng(seed * 1000003ULL + i);
    reports.push_back(suites[i](rng, cases));
  }
  return reports;
}

void print_reports(std::ostream& out, const std::vector<SuiteReport>& reports) {
  for (const SuiteReport& r : reports) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.total
        << " passed, max error " << format_number(r.max_error) << " (tol " << format_number(r.tolerance) << ")\n";
    if (!r.ok()) out << "  first failure: " << r.first_failure << "\n";
  }
}

}  // namespace esd::cli
