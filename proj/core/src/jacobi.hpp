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

// Small dense Hermitian kernel shared by the public double-precision API and
// the extended-precision concurrence path. Not installed.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <type_traits>

#include "esd/linalg.hpp"

namespace esd::detail {

#if defined(__SIZEOF_FLOAT128__) && !defined(ESD_NO_FLOAT128)
using WideReal = __float128;
#else
using WideReal = long double;
#endif

template <class Real>
Real real_sqrt(Real x) {
  if constexpr (std::is_same_v<Real, double> || std::is_same_v<Real, long double>) {
    return std::sqrt(x);
  } else {
    if (x <= 0) return Real(0);
    // Newton from the double estimate; two steps exceed 113 bits.
    Real y = static_cast<Real>(std::sqrt(static_cast<double>(x)));
    if (y == 0) y = x;  // below double range
    y = (y + x / y) / 2;
    y = (y + x / y) / 2;
    y = (y + x / y) / 2;
    return y;
  }
}

template <class Real>
Real real_abs(Real x) {
  return x < 0 ? -x : x;
}

template <class Real>
struct Cx {
  Real re{};
  Real im{};

  friend Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(Cx a, Cx b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(Cx a, Cx b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator*(Real s, Cx a) { return {s * a.re, s * a.im}; }
  Cx conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }
};

template <class Real>
struct SmallMat {
  std::size_t dim = 0;
  std::array<Cx<Real>, 16> a{};

  Cx<Real>& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const Cx<Real>& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  static SmallMat identity(std::size_t dim) {
    SmallMat m{dim, {}};
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i).re = Real(1);
    return m;
  }
};

template <class Real>
SmallMat<Real> mul(const SmallMat<Real>& x, const SmallMat<Real>& y) {
  SmallMat<Real> out{x.dim, {}};
  for (std::size_t r = 0; r < x.dim; ++r)
    for (std::size_t k = 0; k < x.dim; ++k) {
      const Cx<Real> xrk = x.at(r, k);
      if (xrk.re == 0 && xrk.im == 0) continue;
      for (std::size_t c = 0; c < x.dim; ++c) out.at(r, c) = out.at(r, c) + xrk * y.at(k, c);
    }
  return out;
}

template <class Real>
SmallMat<Real> adjoint(const SmallMat<Real>& x) {
  SmallMat<Real> out{x.dim, {}};
  for (std::size_t r = 0; r < x.dim; ++r)
    for (std::size_t c = 0; c < x.dim; ++c) out.at(c, r) = x.at(r, c).conj();
  return out;
}

template <class Real>
SmallMat<Real> hermitize(const SmallMat<Real>& x) {
  SmallMat<Real> out{x.dim, {}};
  for (std::size_t r = 0; r < x.dim; ++r)
    for (std::size_t c = 0; c < x.dim; ++c)
      out.at(r, c) = Real(0.5) * (x.at(r, c) + x.at(c, r).conj());
  return out;
}

template <class Real>
Real frobenius(const SmallMat<Real>& x) {
  Real s = 0;
  for (std::size_t i = 0; i < x.dim * x.dim; ++i) s += x.a[i].norm2();
  return real_sqrt(s);
}

template <class Real>
Real off_diagonal_norm(const SmallMat<Real>& x) {
  Real s = 0;
  for (std::size_t r = 0; r < x.dim; ++r)
    for (std::size_t c = 0; c < x.dim; ++c)
      if (r != c) s += x.at(r, c).norm2();
  return real_sqrt(s);
}

template <class Real>
SmallMat<Real> widen(const ComplexMat& m) {
  SmallMat<Real> out{m.dim(), {}};
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      out.at(r, c) = {static_cast<Real>(m(r, c).real()), static_cast<Real>(m(r, c).imag())};
  return out;
}

template <class Real>
ComplexMat narrow(const SmallMat<Real>& m) {
  return ComplexMat::generate(m.dim, [&](std::size_t r, std::size_t c) {
    return Complex(static_cast<double>(m.at(r, c).re), static_cast<double>(m.at(r, c).im));
  });
}

template <class Real>
struct JacobiResult {
  std::array<Real, 4> values{};
  SmallMat<Real> vectors;
  int sweeps = 0;
  Real off_norm = 0;
  bool converged = false;
};

/// Cyclic Jacobi on a Hermitian matrix. Each rotation first removes the
/// phase of a_pq with a diagonal unitary, then applies a real Givens
/// rotation. Converges when the off-diagonal Frobenius norm is at most
/// off_tol * max(1, ||h||_F). Output sorted by descending eigenvalue.
template <class Real>
JacobiResult<Real> jacobi_eigen(SmallMat<Real> h, Real off_tol, int max_sweeps) {
  const std::size_t n = h.dim;
  const Real scale = std::max(Real(1), frobenius(h));
  const Real threshold = off_tol * scale;
  SmallMat<Real> v = SmallMat<Real>::identity(n);

  JacobiResult<Real> out{};
  int sweep = 0;
  Real off = off_diagonal_norm(h);
  while (off > threshold && sweep < max_sweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Cx<Real> apq = h.at(p, q);
        const Real r = real_sqrt(apq.norm2());
        if (r == 0) continue;
        const Cx<Real> phase{apq.re / r, apq.im / r};  // e^{i phi}
        const Real alpha = h.at(p, p).re;
        const Real beta = h.at(q, q).re;
        const Real theta = (beta - alpha) / (2 * r);
        Real t;
        if (real_abs(theta) > Real(1e30)) {
          t = Real(1) / (2 * theta);
        } else {
          t = Real(1) / (real_abs(theta) + real_sqrt(theta * theta + 1));
          if (theta < 0) t = -t;
        }
        const Real cs = Real(1) / real_sqrt(t * t + 1);
        const Real sn = t * cs;
        // G = diag(1, e^{-i phi}) . [[c, s], [-s, c]] restricted to (p, q).
        const Cx<Real> gpp{cs, 0};
        const Cx<Real> gpq{sn, 0};
        const Cx<Real> gqp = (-sn) * phase.conj();
        const Cx<Real> gqq = cs * phase.conj();

        for (std::size_t k = 0; k < n; ++k) {  // h <- h G
          const Cx<Real> hkp = h.at(k, p);
          const Cx<Real> hkq = h.at(k, q);
          h.at(k, p) = hkp * gpp + hkq * gqp;
          h.at(k, q) = hkp * gpq + hkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // h <- G^dagger h
          const Cx<Real> hpk = h.at(p, k);
          const Cx<Real> hqk = h.at(q, k);
          h.at(p, k) = gpp.conj() * hpk + gqp.conj() * hqk;
          h.at(q, k) = gpq.conj() * hpk + gqq.conj() * hqk;
        }
        h.at(p, q) = {};
        h.at(q, p) = {};
        h.at(p, p).im = 0;
        h.at(q, q).im = 0;
        for (std::size_t k = 0; k < n; ++k) {  // v <- v G
          const Cx<Real> vkp = v.at(k, p);
          const Cx<Real> vkq = v.at(k, q);
          v.at(k, p) = vkp * gpp + vkq * gqp;
          v.at(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
    ++sweep;
    off = off_diagonal_norm(h);
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.begin() + n, std::size_t{0});
  std::stable_sort(order.begin(), order.begin() + n, [&](std::size_t i, std::size_t j) {
    return h.at(i, i).re > h.at(j, j).re;
  });
  out.vectors = SmallMat<Real>{n, {}};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = h.at(order[k], order[k]).re;
    for (std::size_t r = 0; r < n; ++r) out.vectors.at(r, k) = v.at(r, order[k]);
  }
  out.sweeps = sweep;
  out.off_norm = off;
  out.converged = off <= threshold;
  return out;
}

/// V diag(f(lambda)) V^dagger
template <class Real, class Fn>
SmallMat<Real> spectral_map(const JacobiResult<Real>& eig, Fn&& fn) {
  const std::size_t n = eig.vectors.dim;
  SmallMat<Real> out{n, {}};
  for (std::size_t k = 0; k < n; ++k) {
    const Real w = fn(eig.values[k]);
    if (w == 0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Cx<Real> vr = w * eig.vectors.at(r, k);
      for (std::size_t c = 0; c < n; ++c)
        out.at(r, c) = out.at(r, c) + vr * eig.vectors.at(c, k).conj();
    }
  }
  return out;
}

}  // namespace esd::detail
