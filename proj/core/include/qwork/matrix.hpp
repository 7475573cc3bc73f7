// Copyright 2026 The qwork developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qwork {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Backbone of every operator and
/// state in the library. Values are immutable in spirit: all operations
/// return fresh matrices, so instances can be shared across threads.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<double>& entries);
  static ComplexMatrix diagonal(const std::vector<Complex>& entries);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_finite() const;

  /// ‖m − m†‖_F
  double hermiticity_defect() const;
  /// ‖m†m − I‖_F (exact, costs one full product)
  double unitarity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// C = A·B. Both square, equal dim.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Row-major rectangular product: A is rows×inner, B is inner×inner square.
std::vector<Complex> multiply_rect(const std::vector<Complex>& a, std::size_t rows,
                                   std::size_t inner, const ComplexMatrix& b);

/// y = M·x
std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& x);

/// Kronecker product. Index convention:
///   kron(a, b)[i*db + k, j*db + l] = a(i, j) * b(k, l),
/// i.e. the left factor owns the slow (most significant) index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out all tensor factors except `keep`. `dims` lists the factor
/// dimensions in the same slow-to-fast order used by kron; their product
/// must equal dim(m). The result has dimension dims[keep] and the same
/// trace as the input.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            std::size_t keep);

/// max_ij |a(i,j) − b(i,j)|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖a − b‖_F
double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// [a, b] = ab − ba
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qwork
