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

#include <cmath>
#include <complex>

#include "esd/linalg.hpp"

namespace esd::test {

inline double max_abs_diff(const ComplexMat& a, const ComplexMat& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

// Cofactor expansion, independent of the eigensolver.
inline Complex det(const ComplexMat& m) {
  if (m.dim() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  auto minor3 = [&](std::size_t skip) {
    std::size_t cols[3], k = 0;
    for (std::size_t c = 0; c < 4; ++c)
      if (c != skip) cols[k++] = c;
    auto e = [&](std::size_t r, std::size_t c) { return m(r + 1, cols[c]); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  };
  Complex s = 0.0;
  for (std::size_t c = 0; c < 4; ++c) s += (c % 2 ? -1.0 : 1.0) * m(0, c) * minor3(c);
  return s;
}

inline ComplexMat shift(const ComplexMat& m, double lambda) {
  return m - Complex(lambda) * ComplexMat::identity(m.dim());
}

}  // namespace esd::test
