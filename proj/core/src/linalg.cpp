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

#include "esd/linalg.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "jacobi.hpp"

namespace esd {
namespace {

void check_dim(std::size_t dim) {
  if (dim != 2 && dim != 4)
    throw DimensionError("matrix dimension must be 2 or 4, got " + std::to_string(dim));
}

void check_same_dim(const ComplexMat& a, const ComplexMat& b, const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionError(msg.str());
  }
}

}  // namespace

ComplexMat::ComplexMat(std::size_t dim) : dim_(dim) { check_dim(dim); }

ComplexMat::ComplexMat(std::size_t dim, std::span<const Complex> entries) : ComplexMat(dim) {
  if (entries.size() != dim * dim)
    throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(entries.size()));
  std::copy(entries.begin(), entries.end(), data_.begin());
}

ComplexMat::ComplexMat(std::size_t dim, std::initializer_list<Complex> entries)
    : ComplexMat(dim, std::span<const Complex>(entries.begin(), entries.size())) {}

ComplexMat ComplexMat::zeros(std::size_t dim) { return ComplexMat(dim); }

ComplexMat ComplexMat::identity(std::size_t dim) {
  ComplexMat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = 1.0;
  return m;
}

ComplexMat ComplexMat::diagonal(std::span<const Complex> diag) {
  ComplexMat m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.data_[i * diag.size() + i] = diag[i];
  return m;
}

ComplexMat ComplexMat::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMat operator+(const ComplexMat& a, const ComplexMat& b) {
  check_same_dim(a, b, "operator+");
  ComplexMat m(a.dim());
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
  return m;
}

ComplexMat operator-(const ComplexMat& a, const ComplexMat& b) {
  check_same_dim(a, b, "operator-");
  ComplexMat m(a.dim());
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
  return m;
}

ComplexMat operator*(const ComplexMat& a, const ComplexMat& b) {
  check_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMat m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) m.data_[r * n + c] += a.data_[r * n + k] * b.data_[k * n + c];
  return m;
}

ComplexMat operator*(Complex s, const ComplexMat& a) {
  ComplexMat m(a.dim());
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) m.data_[i] = s * a.data_[i];
  return m;
}

ComplexMat kron(const ComplexMat& a, const ComplexMat& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw DimensionError("kron: both factors must be 2x2, got " + std::to_string(a.dim()) +
                         " and " + std::to_string(b.dim()));
  return ComplexMat::generate(4, [&](std::size_t r, std::size_t c) {
    return a(r / 2, c / 2) * b(r % 2, c % 2);
  });
}

ComplexMat dagger(const ComplexMat& a) {
  return ComplexMat::generate(a.dim(), [&](std::size_t r, std::size_t c) { return std::conj(a(c, r)); });
}

ComplexMat conjugate(const ComplexMat& a) {
  return ComplexMat::generate(a.dim(), [&](std::size_t r, std::size_t c) { return std::conj(a(r, c)); });
}

Complex trace(const ComplexMat& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMat& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double frobenius_distance(const ComplexMat& a, const ComplexMat& b) { return frobenius_norm(a - b); }

double hermiticity_defect(const ComplexMat& a) { return frobenius_norm(a - dagger(a)); }

ComplexMat hermitian_part(const ComplexMat& a) { return 0.5 * (a + dagger(a)); }

EigDecomposition hermitian_eig(const ComplexMat& h, double tol) {
  const double defect = hermiticity_defect(h);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "hermitian_eig: input is not Hermitian (||H - H^dagger||_F = " << defect
        << " > tol " << tol << ")";
    throw ParameterError(msg.str());
  }
  auto result = detail::jacobi_eigen(detail::widen<double>(h), kJacobiOffDiagonalTol, kJacobiMaxSweeps);
  if (!result.converged) {
    std::ostringstream msg;
    msg << "hermitian_eig: Jacobi did not converge after " << result.sweeps
        << " sweeps (off-diagonal norm " << result.off_norm << ")";
    throw NumericalError(msg.str());
  }
  EigDecomposition out{std::vector<double>(result.values.begin(), result.values.begin() + h.dim()),
                       detail::narrow(result.vectors), result.sweeps};
  return out;
}

ComplexMat psd_sqrt(const ComplexMat& h, double tol) {
  const EigDecomposition eig = hermitian_eig(h, tol);
  const double smallest = eig.eigenvalues.back();
  if (smallest < -tol) {
    std::ostringstream msg;
    msg << "psd_sqrt: matrix is not positive semidefinite (eigenvalue " << smallest << ")";
    throw NumericalError(msg.str());
  }
  const std::size_t n = h.dim();
  return ComplexMat::generate(n, [&](std::size_t r, std::size_t c) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double lam = eig.eigenvalues[k];
      if (lam <= 0.0) continue;
      s += std::sqrt(lam) * eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
    }
    return s;
  });
}

ComplexMat pauli_x() { return ComplexMat(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMat pauli_y() { return ComplexMat(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
ComplexMat pauli_z() { return ComplexMat(2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace esd
