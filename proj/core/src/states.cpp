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

#include "esd/states.hpp"

#include <cmath>
#include <sstream>

namespace esd {
namespace {

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

std::optional<std::string> check_populations(const char* what, double a, double b, double c, double d) {
  for (double v : {a, b, c, d})
    if (!std::isfinite(v)) return std::string(what) + ": parameters must be finite";
  const char* names[] = {"a", "b", "c", "d"};
  const double vals[] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    if (vals[i] < -kParamTol) return std::string(what) + ": " + names[i] + " = " + fmt(vals[i]) + " must be >= 0";
  const double sum = a + b + c + d;
  if (std::abs(sum - 1.0) > kParamTol)
    return std::string(what) + ": a + b + c + d = " + fmt(sum) + " must equal 1";
  return std::nullopt;
}

double clamp0(double v) { return v < 0.0 ? 0.0 : v; }

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

std::optional<std::string> violation(const XStateParams& p) {
  if (auto v = check_populations("x-state", p.a, p.b, p.c, p.d)) return v;
  if (!std::isfinite(p.z.real()) || !std::isfinite(p.z.imag())) return "x-state: z must be finite";
  const double slack = p.b * p.c - std::norm(p.z);
  if (slack < -kParamTol)
    return "x-state: positivity requires b*c >= |z|^2 (b*c = " + fmt(p.b * p.c) + ", |z|^2 = " +
           fmt(std::norm(p.z)) + ")";
  return std::nullopt;
}

std::optional<std::string> violation(const PureStateParams& p) {
  if (auto v = check_populations("pure-state", p.a, p.b, p.c, p.d)) return v;
  for (double ph : {p.f, p.g, p.h})
    if (!std::isfinite(ph)) return "pure-state: phases must be finite";
  return std::nullopt;
}

std::optional<std::string> violation(const FamilyParams& p) {
  if (!(p.x >= 0.0 && p.x <= 1.0))
    return std::string(to_string(p.family)) + ": mixing weight x = " + fmt(p.x) + " must lie in [0, 1]";
  return std::nullopt;
}

void validate(const XStateParams& p) {
  if (auto v = violation(p)) throw ParameterError(*v);
}
void validate(const PureStateParams& p) {
  if (auto v = violation(p)) throw ParameterError(*v);
}
void validate(const FamilyParams& p) {
  if (auto v = violation(p)) throw ParameterError(*v);
}

const char* to_string(Family family) {
  switch (family) {
    case Family::Isotropic: return "isotropic";
    case Family::Werner: return "werner";
  }
  return "unknown";
}

StateDefects measure_state_defects(const ComplexMat& m) {
  StateDefects out;
  out.hermiticity = hermiticity_defect(m);
  out.trace_error = std::abs(trace(m) - 1.0);
  const EigDecomposition eig = hermitian_eig(hermitian_part(m), 1.0);
  out.min_eigenvalue = eig.eigenvalues.back();
  return out;
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMat& m, double tol) {
  if (m.dim() != 4) throw DimensionError("density matrix must be 4x4, got " + std::to_string(m.dim()));
  const double herm = hermiticity_defect(m);
  if (herm > tol) throw NumericalError("density matrix is not Hermitian (||rho - rho^dagger||_F = " + fmt(herm) + ")");
  const double tr = std::abs(trace(m) - 1.0);
  if (tr > tol) throw NumericalError("density matrix trace differs from 1 by " + fmt(tr));
  const EigDecomposition eig = hermitian_eig(hermitian_part(m), tol);
  if (eig.eigenvalues.back() < -tol)
    throw NumericalError("density matrix is not positive semidefinite (min eigenvalue " +
                         fmt(eig.eigenvalues.back()) + ")");
  return DensityMatrix(m);
}

double DensityMatrix::purity() const { return trace(mat_ * mat_).real(); }

DensityMatrix x_state(const XStateParams& p) {
  validate(p);
  ComplexMat m = ComplexMat::generate(4, [&](std::size_t r, std::size_t c) -> Complex {
    if (r == c) {
      const double diag[] = {p.a, p.b, p.c, p.d};
      return clamp0(diag[r]);
    }
    if (r == 1 && c == 2) return p.z;
    if (r == 2 && c == 1) return std::conj(p.z);
    return 0.0;
  });
  return DensityMatrix::from_matrix(m);
}

std::array<Complex, 4> pure_amplitudes(const PureStateParams& p) {
  return {Complex(std::sqrt(clamp0(p.a)), 0.0), std::sqrt(clamp0(p.b)) * std::polar(1.0, p.f),
          std::sqrt(clamp0(p.c)) * std::polar(1.0, p.g), std::sqrt(clamp0(p.d)) * std::polar(1.0, p.h)};
}

namespace {

DensityMatrix projector(const std::array<Complex, 4>& v) {
  ComplexMat m = ComplexMat::generate(4, [&](std::size_t r, std::size_t c) -> Complex {
    if (r == c) return std::norm(v[r]);
    return v[r] * std::conj(v[c]);
  });
  return DensityMatrix::from_matrix(m);
}

// Singlet (|01> - |10>)/sqrt(2) mixed with the identity:
// diag(w, u, u, w) with central coherence s.
DensityMatrix singlet_mixture(double w, double u, double s) {
  ComplexMat m = ComplexMat::generate(4, [&](std::size_t r, std::size_t c) -> Complex {
    if (r == c) return (r == 0 || r == 3) ? w : u;
    if ((r == 1 && c == 2) || (r == 2 && c == 1)) return s;
    return 0.0;
  });
  return DensityMatrix::from_matrix(m);
}

}  // namespace

DensityMatrix pure_state(const PureStateParams& p) {
  validate(p);
  return projector(pure_amplitudes(p));
}

DensityMatrix bell_state(BellState which) {
  const double k = kInvSqrt2;
  switch (which) {
    case BellState::PhiPlus: return projector({k, 0.0, 0.0, k});
    case BellState::PhiMinus: return projector({k, 0.0, 0.0, -k});
    case BellState::PsiPlus: return projector({0.0, k, k, 0.0});
    case BellState::PsiMinus: return projector({0.0, k, -k, 0.0});
  }
  throw ParameterError("unknown Bell state");
}

DensityMatrix isotropic(double x) {
  validate(FamilyParams{Family::Isotropic, x});
  return singlet_mixture((1.0 - x) / 3.0, (2.0 * x + 1.0) / 6.0, (1.0 - 4.0 * x) / 6.0);
}

DensityMatrix werner(double x) {
  validate(FamilyParams{Family::Werner, x});
  return singlet_mixture((1.0 - x) / 4.0, (1.0 + x) / 4.0, -x / 2.0);
}

DensityMatrix family_state(const FamilyParams& p) {
  return p.family == Family::Isotropic ? isotropic(p.x) : werner(p.x);
}

XStateParams as_x_params(const DensityMatrix& rho, double tol) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      if (r == c || (r == 1 && c == 2) || (r == 2 && c == 1)) continue;
      const double mag = std::abs(rho(r, c));
      if (mag > tol) {
        std::ostringstream msg;
        msg << "as_x_params: entry (" << r << "," << c << ") has magnitude " << fmt(mag)
            << " outside the X pattern (tol " << tol << ")";
        throw ParameterError(msg.str());
      }
    }
  const Complex z = rho(1, 2);
  if (std::abs(rho(2, 1) - std::conj(z)) > tol)
    throw ParameterError("as_x_params: central block is not Hermitian");
  return XStateParams{rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(), rho(3, 3).real(), z};
}

}  // namespace esd
