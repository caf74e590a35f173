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

#include "esd/entanglement.hpp"

#include <cmath>
#include <sstream>

#include "jacobi.hpp"

namespace esd {
namespace {

using detail::WideReal;
using WideMat = detail::SmallMat<WideReal>;

// Rank-deficient states put eigenvalues of sqrt(rho) rho~ sqrt(rho) at the
// rounding floor, and the final square root amplifies that floor to
// sqrt(eps). The chain therefore runs in extended precision.
constexpr double kWideOffDiagonalTol = 1e-30;

detail::JacobiResult<WideReal> wide_eig(const WideMat& h, const char* stage) {
  auto eig = detail::jacobi_eigen(h, static_cast<WideReal>(kWideOffDiagonalTol), kJacobiMaxSweeps);
  if (!eig.converged) {
    std::ostringstream msg;
    msg << "concurrence_wootters: Jacobi did not converge at " << stage << " (off-diagonal norm "
        << static_cast<double>(eig.off_norm) << ")";
    throw NumericalError(msg.str());
  }
  return eig;
}

void require_psd(const detail::JacobiResult<WideReal>& eig, const char* stage) {
  const double smallest = static_cast<double>(eig.values[eig.vectors.dim - 1]);
  if (smallest < -kPsdClampTol) {
    std::ostringstream msg;
    msg << "concurrence_wootters: " << stage << " is not positive semidefinite (eigenvalue " << smallest << ")";
    throw NumericalError(msg.str());
  }
}

WideReal clamped_sqrt(WideReal v) { return v > 0 ? detail::real_sqrt(v) : WideReal(0); }

// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y); sigma_y (x) sigma_y is
// antidiagonal (-1, 1, 1, -1).
WideMat spin_flip(const WideMat& rho) {
  constexpr int sign[4] = {-1, 1, 1, -1};
  WideMat out{4, {}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const WideReal s = static_cast<WideReal>(sign[r] * sign[c]);
      out.at(r, c) = s * rho.at(3 - r, 3 - c).conj();
    }
  return out;
}

}  // namespace

Concurrence::Concurrence(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0 + 1e-10)) {
    std::ostringstream msg;
    msg << "concurrence " << value << " outside [0, 1]";
    throw NumericalError(msg.str());
  }
}

std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
  const WideMat r = detail::hermitize(detail::widen<WideReal>(rho.matrix()));

  const auto rho_eig = wide_eig(r, "sqrt(rho)");
  require_psd(rho_eig, "rho");
  const WideMat sqrt_rho = detail::spectral_map(rho_eig, clamped_sqrt);

  const WideMat m = detail::hermitize(detail::mul(detail::mul(sqrt_rho, spin_flip(r)), sqrt_rho));
  const auto m_eig = wide_eig(m, "sqrt(rho) rho~ sqrt(rho)");
  require_psd(m_eig, "sqrt(rho) rho~ sqrt(rho)");

  // The eigenvalues of psd_sqrt(m) are the clamped square roots of m's,
  // already in descending order.
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = static_cast<double>(clamped_sqrt(m_eig.values[k]));
  return out;
}

Concurrence concurrence_wootters(const DensityMatrix& rho) {
  const auto l = wootters_lambdas(rho);
  const double c = l[0] - l[1] - l[2] - l[3];
  return Concurrence(c > 0.0 ? c : 0.0);
}

Concurrence concurrence_x(const XStateParams& p) {
  validate(p);
  const double ad = std::max(p.a, 0.0) * std::max(p.d, 0.0);
  const double c = 2.0 * (std::abs(p.z) - std::sqrt(ad));
  return Concurrence(c > 0.0 ? c : 0.0);
}

namespace detail {

double pure_radicand(const PureStateParams& p) {
  const double a = std::max(p.a, 0.0), b = std::max(p.b, 0.0);
  const double c = std::max(p.c, 0.0), d = std::max(p.d, 0.0);
  const double v = a * d + b * c - 2.0 * std::sqrt(a * b * c * d) * std::cos(p.f + p.g - p.h);
  if (v < -kRadicandTol) {
    std::ostringstream msg;
    msg << "pure-state concurrence radicand " << v << " is negative";
    throw NumericalError(msg.str());
  }
  return v > 0.0 ? v : 0.0;
}

}  // namespace detail

Concurrence concurrence_pure(const PureStateParams& p) {
  validate(p);
  return Concurrence(2.0 * std::sqrt(detail::pure_radicand(p)));
}

}  // namespace esd
