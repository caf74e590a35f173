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

#include <string>
#include <vector>

#include "esd/linalg.hpp"
#include "esd/states.hpp"

namespace esd {

inline constexpr double kCompletenessTol = 1e-10;

enum class ChannelLabel { Amplitude, Phase, Depolarizing, Custom };

enum class NoiseKind { Amplitude, Phase, Depolarizing };

const char* to_string(ChannelLabel label);
const char* to_string(NoiseKind kind);

/// Ordered Kraus operators of a common dimension.
///
/// Construction only checks dimensions; completeness is certified by
/// check_completeness() and enforced by apply(), so custom sets that are
/// not trace preserving can still be inspected.
class KrausSet {
 public:
  KrausSet(std::size_t dim, ChannelLabel label, std::vector<ComplexMat> ops);

  std::size_t dim() const noexcept { return dim_; }
  ChannelLabel label() const noexcept { return label_; }
  const std::vector<ComplexMat>& ops() const noexcept { return ops_; }

 private:
  std::size_t dim_;
  ChannelLabel label_;
  std::vector<ComplexMat> ops_;
};

/// Single local noise with decay rate Gamma (inverse time units).
struct NoiseSpec {
  NoiseKind kind = NoiseKind::Amplitude;
  double rate = 1.0;
};

void validate(const NoiseSpec& noise);

/// E0 = diag(eta, 1), E1 = [[0, 0], [sqrt(1 - eta^2), 0]]
KrausSet amplitude_kraus(double eta);
/// K0 = diag(1, gamma), K1 = diag(0, sqrt(1 - gamma^2))
KrausSet phase_kraus(double gamma);
/// sqrt(1-p) I, sqrt(p/3) sigma_x, sqrt(p/3) [[0, i], [-i, 0]], sqrt(p/3) sigma_z
KrausSet depolarizing_kraus(double p);

/// Noise on the first qubit only: every K becomes K (x) I2.
KrausSet lift_first(const KrausSet& k);

/// ||sum K^dagger K - I||_F. An empty set yields sqrt(dim).
double check_completeness(const KrausSet& k);

/// sum_i K_i rho K_i^dagger. Requires 4x4 operators and completeness within
/// kCompletenessTol; the output is re-validated as a density matrix.
DensityMatrix apply(const DensityMatrix& rho, const KrausSet& k);

namespace detail {
/// Reduced state of qubit 2 (trace over qubit 1).
ComplexMat partial_trace_first(const ComplexMat& rho);
}  // namespace detail

}  // namespace esd
