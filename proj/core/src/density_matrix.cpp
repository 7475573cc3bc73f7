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

#include "qwork/density_matrix.hpp"

#include <cmath>

#include "qwork/errors.hpp"

namespace qwork {

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.dim() == 0) throw NotDensityMatrix("density matrix: empty");
  if (!m_.is_finite()) throw NotDensityMatrix("density matrix: non-finite entries");
  if (m_.hermiticity_defect() > 1e-10 * static_cast<double>(m_.dim())) {
    throw NotDensityMatrix("density matrix: not Hermitian");
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0)) > 1e-10) {
    throw NotDensityMatrix("density matrix: trace differs from 1");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw NotDensityMatrix("density matrix: empty");
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_populations(const Eigensystem& basis,
                                              const std::vector<double>& populations) {
  const std::size_t n = basis.dim();
  if (populations.size() != n) {
    throw DimensionMismatch("from_populations: population count != basis dim");
  }
  std::vector<double> p = populations;
  double sum = 0.0;
  for (double& x : p) {
    if (x < -1e-14) throw NotDensityMatrix("from_populations: negative population");
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  if (sum <= 0.0) throw NotDensityMatrix("from_populations: zero total population");

  if (!basis.diagonal_input.empty()) {
    // Populations are keyed to sorted eigenvalues; scatter them back to the
    // original diagonal slots through the permutation columns.
    ComplexMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) {
        if (basis.vectors(r, k) != Complex(0.0)) {
          m(r, r) += p[k] / sum;
          break;
        }
      }
    }
    return DensityMatrix(std::move(m));
  }

  ComplexMatrix scaled = basis.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) scaled(r, k) *= p[k] / sum;
  }
  return DensityMatrix(multiply(scaled, basis.vectors.adjoint()));
}

double DensityMatrix::min_eigenvalue() const {
  const Eigensystem es = eig_hermitian(m_);
  return es.eigenvalues.front();
}

std::vector<double> DensityMatrix::populations_in(const Eigensystem& basis) const {
  if (basis.dim() != dim()) throw DimensionMismatch("populations_in: basis dim mismatch");
  std::vector<double> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) {
        acc += std::conj(basis.vectors(i, k)) * m_(i, j) * basis.vectors(j, k);
      }
    }
    out[k] = acc.real();
  }
  return out;
}

double DensityMatrix::coherence_in(const Eigensystem& basis) const {
  if (basis.dim() != dim()) throw DimensionMismatch("coherence_in: basis dim mismatch");
  const ComplexMatrix vh = basis.vectors.adjoint();
  const ComplexMatrix in_basis = multiply(multiply(vh, m_), basis.vectors);
  double worst = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(in_basis(i, j)));
    }
  }
  return worst;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

}  // namespace qwork
