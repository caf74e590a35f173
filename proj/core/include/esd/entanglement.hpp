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

#pragma once

#include <array>

#include "esd/states.hpp"

namespace esd {

/// Radicands in [-kRadicandTol, 0) count as zero at separability boundaries.
inline constexpr double kRadicandTol = 1e-12;

/// Two-qubit concurrence, a value in [0, 1].
class Concurrence {
 public:
  /// Throws NumericalError outside [0, 1 + 1e-10].
  explicit Concurrence(double value);
  double value() const noexcept { return value_; }
  explicit operator double() const noexcept { return value_; }

 private:
  double value_;
};

/// Square roots of the eigenvalues of rho * rho_tilde, descending.
std::array<double, 4> wootters_lambdas(const DensityMatrix& rho);

/// max(0, l1 - l2 - l3 - l4) via the Hermitian chain
/// sqrt(rho) -> sqrt(rho) rho_tilde sqrt(rho) -> PSD square root.
Concurrence concurrence_wootters(const DensityMatrix& rho);

/// 2 max(0, |z| - sqrt(a d))
Concurrence concurrence_x(const XStateParams& p);

/// 2 sqrt(ad + bc - 2 sqrt(abcd) cos(f + g - h)), clamped at zero.
Concurrence concurrence_pure(const PureStateParams& p);

namespace detail {
/// ad + bc - 2 sqrt(abcd) cos(f + g - h), clamped per kRadicandTol; throws
/// NumericalError if more negative than that.
double pure_radicand(const PureStateParams& p);
}  // namespace detail

}  // namespace esd
