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

#include "qwork/matrix.hpp"

#include <cmath>
#include <cstring>

#include "qwork/errors.hpp"

namespace qwork {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim) {
    throw DimensionMismatch("ComplexMatrix: entry count does not match dim^2");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_finite() const {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double ComplexMatrix::hermiticity_defect() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(s);
}

double ComplexMatrix::unitarity_defect() const {
  ComplexMatrix g = multiply(adjoint(), *this);
  for (std::size_t i = 0; i < dim_; ++i) g(i, i) -= 1.0;
  return g.frobenius_norm();
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix +=: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix -=: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

namespace {

// Row-major accumulating kernel, written on raw doubles so the compiler can
// vectorise without the std::complex NaN-handling path. Zero entries in the
// left factor are skipped; diagonal and block-structured operators are
// common here and this makes products with them O(dim^2).
void gemm_acc(const Complex* a, std::size_t rows, std::size_t inner, const Complex* b,
              Complex* c) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < rows; ++i) {
    double* crow = cd + 2 * i * inner;
    const Complex* arow = a + i * inner;
    for (std::size_t k = 0; k < inner; ++k) {
      const double ar = arow[k].real();
      const double ai = arow[k].imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = bd + 2 * k * inner;
      for (std::size_t j = 0; j < inner; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

}  // namespace

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("multiply: dimension mismatch");
  ComplexMatrix out(a.dim());
  gemm_acc(a.data().data(), a.dim(), a.dim(), b.data().data(), out.data().data());
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply(a, b); }

std::vector<Complex> multiply_rect(const std::vector<Complex>& a, std::size_t rows,
                                   std::size_t inner, const ComplexMatrix& b) {
  if (b.dim() != inner || a.size() != rows * inner) {
    throw DimensionMismatch("multiply_rect: dimension mismatch");
  }
  std::vector<Complex> out(rows * inner, Complex(0.0));
  gemm_acc(a.data(), rows, inner, b.data().data(), out.data());
  return out;
}

std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& x) {
  if (x.size() != m.dim()) throw DimensionMismatch("apply: vector length mismatch");
  std::vector<Complex> y(m.dim(), Complex(0.0));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) {
          out(i * db + k, j * db + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            std::size_t keep) {
  if (keep >= dims.size()) throw DimensionMismatch("partial_trace: keep index out of range");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionMismatch("partial_trace: zero factor dimension");
    total *= d;
  }
  if (total != m.dim()) {
    throw DimensionMismatch("partial_trace: factor dimensions do not multiply to dim");
  }

  // Row-major strides matching the kron convention (first factor slowest).
  std::vector<std::size_t> stride(dims.size());
  std::size_t s = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    stride[k] = s;
    s *= dims[k];
  }

  const std::size_t dk = dims[keep];
  const std::size_t sk = stride[keep];
  ComplexMatrix out(dk);

  // Enumerate the joint index of all traced factors and accumulate the
  // diagonal-in-those-factors blocks.
  const std::size_t n_other = total / dk;
  for (std::size_t c = 0; c < n_other; ++c) {
    std::size_t base = 0;
    std::size_t rem = c;
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (k == keep) continue;
      base += (rem % dims[k]) * stride[k];
      rem /= dims[k];
    }
    for (std::size_t a = 0; a < dk; ++a) {
      const std::size_t row = base + a * sk;
      for (std::size_t b = 0; b < dk; ++b) {
        out(a, b) += m(row, base + b * sk);
      }
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("frobenius_diff: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    s += std::norm(a.data()[k] - b.data()[k]);
  }
  return std::sqrt(s);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply(a, b) - multiply(b, a);
}

}  // namespace qwork
