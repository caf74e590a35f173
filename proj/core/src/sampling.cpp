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

#include "esd/sampling.hpp"

#include <cmath>
#include <numbers>

#include "esd/entanglement.hpp"

namespace esd::sampling {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u = 1.0 - uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

int Rng::index(int n) { return static_cast<int>(uniform() * n) % n; }

namespace {

std::array<double, 4> dirichlet4(Rng& rng) {
  std::array<double, 4> w{};
  double sum = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - rng.uniform());
    sum += v;
  }
  for (double& v : w) v /= sum;
  return w;
}

}  // namespace

XStateParams random_x_params(Rng& rng) {
  const auto w = dirichlet4(rng);
  const double zmod = std::sqrt(w[1] * w[2]) * rng.uniform();
  return XStateParams{w[0], w[1], w[2], w[3], std::polar(zmod, rng.uniform(0.0, 2.0 * std::numbers::pi))};
}

PureStateParams random_pure_params(Rng& rng) {
  const auto w = dirichlet4(rng);
  const double two_pi = 2.0 * std::numbers::pi;
  return PureStateParams{w[0], w[1], w[2], w[3], rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi),
                         rng.uniform(0.0, two_pi)};
}

PureStateParams random_entangled_pure_params(Rng& rng, double min_concurrence) {
  for (;;) {
    PureStateParams p = random_pure_params(rng);
    if (concurrence_pure(p).value() >= min_concurrence) return p;
  }
}

FamilyParams random_family_params(Rng& rng) {
  return FamilyParams{rng.index(2) == 0 ? Family::Isotropic : Family::Werner, rng.uniform()};
}

NoiseKind random_noise_kind(Rng& rng) {
  constexpr NoiseKind kinds[] = {NoiseKind::Amplitude, NoiseKind::Phase, NoiseKind::Depolarizing};
  return kinds[rng.index(3)];
}

Scenario random_scenario(Rng& rng) {
  Scenario s{XStateParams{}, NoiseSpec{random_noise_kind(rng), 1.0}};
  switch (rng.index(3)) {
    case 0: s.state = random_x_params(rng); break;
    case 1: s.state = random_pure_params(rng); break;
    default: s.state = random_family_params(rng); break;
  }
  return s;
}

ComplexMat random_unitary2(Rng& rng) {
  // Haar measure: cos^2(theta) uniform, independent uniform phases.
  const double cos_t = std::sqrt(rng.uniform());
  const double sin_t = std::sqrt(1.0 - cos_t * cos_t);
  const double two_pi = 2.0 * std::numbers::pi;
  const Complex g = std::polar(1.0, rng.uniform(0.0, two_pi));
  const Complex e1 = std::polar(1.0, rng.uniform(0.0, two_pi));
  const Complex e2 = std::polar(1.0, rng.uniform(0.0, two_pi));
  return g * ComplexMat(2, {e1 * cos_t, e2 * sin_t, -std::conj(e2) * sin_t, std::conj(e1) * cos_t});
}

ComplexMat random_complex(Rng& rng, std::size_t dim) {
  return ComplexMat::generate(dim, [&](std::size_t, std::size_t) {
    const double re = rng.normal();
    return Complex(re, rng.normal());
  });
}

ComplexMat random_hermitian(Rng& rng, std::size_t dim) { return hermitian_part(random_complex(rng, dim)); }

DensityMatrix random_density_matrix(Rng& rng) {
  const ComplexMat g = random_complex(rng, 4);
  const ComplexMat p = hermitian_part(dagger(g) * g);
  return DensityMatrix::from_matrix((1.0 / trace(p).real()) * p);
}

ComplexMat random_qubit_state(Rng& rng) {
  double x, y, z;
  do {
    x = rng.uniform(-1.0, 1.0);
    y = rng.uniform(-1.0, 1.0);
    z = rng.uniform(-1.0, 1.0);
  } while (x * x + y * y + z * z > 1.0);
  return 0.5 * (ComplexMat::identity(2) + Complex(x) * pauli_x() + Complex(y) * pauli_y() + Complex(z) * pauli_z());
}

}  // namespace esd::sampling
