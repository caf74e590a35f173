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

#include <cstdint>
#include <random>

#include "esd/channels.hpp"
#include "esd/dynamics.hpp"
#include "esd/states.hpp"

namespace esd::sampling {

/// Seeded engine. Draws are built from raw 64-bit outputs so sequences are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();                      ///< [0, 1)
  double uniform(double lo, double hi);  ///< [lo, hi)
  double normal();
  int index(int n);  ///< {0, ..., n-1}

 private:
  std::mt19937_64 engine_;
};

/// Populations ~ Dirichlet(1,1,1,1), |z| uniform in [0, sqrt(bc)], uniform phase.
XStateParams random_x_params(Rng& rng);
PureStateParams random_pure_params(Rng& rng);
/// Rejection-samples pure states with initial concurrence >= min_concurrence.
PureStateParams random_entangled_pure_params(Rng& rng, double min_concurrence);
FamilyParams random_family_params(Rng& rng);
NoiseKind random_noise_kind(Rng& rng);
Scenario random_scenario(Rng& rng);

/// Haar-random single-qubit unitary.
ComplexMat random_unitary2(Rng& rng);
/// Complex Gaussian entries.
ComplexMat random_complex(Rng& rng, std::size_t dim);
ComplexMat random_hermitian(Rng& rng, std::size_t dim);
/// G^dagger G / tr(G^dagger G) for Gaussian G.
DensityMatrix random_density_matrix(Rng& rng);
/// Random 2x2 density matrix (Bloch ball).
ComplexMat random_qubit_state(Rng& rng);

}  // namespace esd::sampling
