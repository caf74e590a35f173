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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "esd/errors.hpp"

namespace esd {

using Complex = std::complex<double>;

/// Dense complex matrix of dimension 2 or 4, stored row-major.
///
/// Values are immutable once constructed; every operation returns a new
/// matrix. Dimensions other than 2 and 4 are rejected with DimensionError.
class ComplexMat {
 public:
  static constexpr std::size_t kMaxDim = 4;

  ComplexMat(std::size_t dim, std::span<const Complex> entries);
  ComplexMat(std::size_t dim, std::initializer_list<Complex> entries);

  static ComplexMat zeros(std::size_t dim);
  static ComplexMat identity(std::size_t dim);
  static ComplexMat diagonal(std::span<const Complex> diag);
  static ComplexMat diagonal(std::initializer_list<Complex> diag);

  /// Builds a matrix from `fn(row, col)`.
  template <class Fn>
  static ComplexMat generate(std::size_t dim, Fn&& fn) {
    ComplexMat m(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m.data_[r * dim + c] = fn(r, c);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept {
    return {data_.data(), dim_ * dim_};
  }

  friend ComplexMat operator+(const ComplexMat& a, const ComplexMat& b);
  friend ComplexMat operator-(const ComplexMat& a, const ComplexMat& b);
  friend ComplexMat operator*(const ComplexMat& a, const ComplexMat& b);
  friend ComplexMat operator*(Complex s, const ComplexMat& a);
  friend ComplexMat operator*(const ComplexMat& a, Complex s) { return s * a; }
  friend bool operator==(const ComplexMat& a, const ComplexMat& b) = default;

 private:
  explicit ComplexMat(std::size_t dim);

  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; column k of `eigenvectors` belongs to eigenvalue k.
struct EigDecomposition {
  std::vector<double> eigenvalues;
  ComplexMat eigenvectors;
  int sweeps = 0;
};

inline constexpr double kJacobiOffDiagonalTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kPsdClampTol = 1e-10;

/// Kronecker product of two 2x2 matrices.
ComplexMat kron(const ComplexMat& a, const ComplexMat& b);
ComplexMat dagger(const ComplexMat& a);
ComplexMat conjugate(const ComplexMat& a);
Complex trace(const ComplexMat& a);
double frobenius_norm(const ComplexMat& a);
double frobenius_distance(const ComplexMat& a, const ComplexMat& b);
/// ||a - a^dagger||_F
double hermiticity_defect(const ComplexMat& a);
/// (a + a^dagger) / 2
ComplexMat hermitian_part(const ComplexMat& a);

/// Cyclic complex Jacobi eigensolver.
///
/// Throws ParameterError when ||h - h^dagger||_F > tol and NumericalError
/// (with the remaining off-diagonal norm) if the sweep cap is reached.
EigDecomposition hermitian_eig(const ComplexMat& h, double tol = kPsdClampTol);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-tol, 0) are clamped to zero; anything below -tol is
/// rejected with NumericalError.
ComplexMat psd_sqrt(const ComplexMat& h, double tol = kPsdClampTol);

ComplexMat pauli_x();
ComplexMat pauli_y();
ComplexMat pauli_z();

}  // namespace esd
