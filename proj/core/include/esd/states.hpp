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

#include <optional>
#include <string>

#include "esd/linalg.hpp"

namespace esd {

/// Tolerance for Hermiticity, trace and positivity of density matrices.
inline constexpr double kStateTol = 1e-10;
/// Tolerance for the probability constraints on parameter records.
inline constexpr double kParamTol = 1e-12;

/// Two-qubit X state with populations (a, b, c, d) in the basis
/// |00>, |01>, |10>, |11> and central coherence z = <01|rho|10>.
struct XStateParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  Complex z = 0.0;
};

/// sqrt(a)|00> + sqrt(b) e^{if}|01> + sqrt(c) e^{ig}|10> + sqrt(d) e^{ih}|11>
struct PureStateParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
};

enum class Family { Isotropic, Werner };

struct FamilyParams {
  Family family = Family::Werner;
  double x = 0.0;
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// First violated constraint, or nullopt when the record is valid.
std::optional<std::string> violation(const XStateParams& p);
std::optional<std::string> violation(const PureStateParams& p);
std::optional<std::string> violation(const FamilyParams& p);

/// Throw ParameterError naming the first violated constraint.
void validate(const XStateParams& p);
void validate(const PureStateParams& p);
void validate(const FamilyParams& p);

const char* to_string(Family family);

/// Validated two-qubit density matrix: Hermitian, unit trace and positive
/// semidefinite, each within kStateTol.
class DensityMatrix {
 public:
  /// Throws NumericalError describing the failed check.
  static DensityMatrix from_matrix(const ComplexMat& m, double tol = kStateTol);

  const ComplexMat& matrix() const noexcept { return mat_; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept { return mat_(r, c); }
  /// trace(rho^2)
  double purity() const;

 private:
  explicit DensityMatrix(ComplexMat m) : mat_(m) {}
  ComplexMat mat_;
};

struct StateDefects {
  double hermiticity = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
};

/// Raw validation measurements; no tolerance applied.
StateDefects measure_state_defects(const ComplexMat& m);

DensityMatrix x_state(const XStateParams& p);
DensityMatrix pure_state(const PureStateParams& p);
DensityMatrix bell_state(BellState which);
/// Two-qubit isotropic state built on the singlet (|01> - |10>)/sqrt(2).
DensityMatrix isotropic(double x);
/// (1 - x) I/4 + x |singlet><singlet|
DensityMatrix werner(double x);
DensityMatrix family_state(const FamilyParams& p);

/// Amplitude vector of the pure family, for tests and tools.
std::array<Complex, 4> pure_amplitudes(const PureStateParams& p);

/// Reads (a, b, c, d, z) back from an X-shaped matrix. Any entry outside the
/// diagonal and the central (1,2)/(2,1) pair larger than `tol` raises
/// ParameterError naming the entry.
XStateParams as_x_params(const DensityMatrix& rho, double tol = kStateTol);

}  // namespace esd
