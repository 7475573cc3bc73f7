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

#include <functional>
#include <vector>

#include "qwork/matrix.hpp"

namespace qwork {

/// Spectral decomposition of a Hermitian matrix: ascending eigenvalues and a
/// unitary matrix whose columns are the matching eigenvectors, so that
/// V diag(λ) V† reproduces the input.
struct Eigensystem {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;

  // Set when the decomposition came from an already-diagonal operator; holds
  // the diagonal in its original order so spectral functions stay O(dim).
  std::vector<double> diagonal_input;

  std::size_t dim() const { return eigenvalues.size(); }

  /// ‖V†V − I‖_F
  double orthonormality_defect() const { return vectors.unitarity_defect(); }
  /// V diag(λ) V†
  ComplexMatrix reconstruct() const;
};

/// Dense Hermitian eigendecomposition: Householder tridiagonalization
/// followed by implicit-shift QL, eigenvalues sorted ascending.
///
/// Requires ‖h − h†‖_F < 1e-10·dim (throws NotHermitian otherwise); the
/// input is symmetrized as (h + h†)/2 before reduction to absorb
/// accumulation noise from repeated products.
Eigensystem eig_hermitian(const ComplexMatrix& h);

/// Exact decomposition of a real diagonal operator: sorts the entries and
/// records the permutation as the eigenvector matrix.
Eigensystem eig_of_diagonal(const std::vector<double>& diag);

/// V f(λ) V† for a scalar function applied to the spectrum.
ComplexMatrix spectral_function(const Eigensystem& es, const std::function<Complex(double)>& f);

/// exp(c·h) through the cached spectral decomposition: V diag(e^{c λ}) V†.
/// Unitary (to ~1e-12) whenever c is purely imaginary.
ComplexMatrix expm(const Eigensystem& es, Complex c);

/// exp(c·h) for a Hermitian matrix given directly; decomposes first.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, Complex c);

}  // namespace qwork
