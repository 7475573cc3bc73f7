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

#include "qwork/eigensolver.hpp"
#include "qwork/matrix.hpp"

namespace qwork {

/// Hermitian, positive-semidefinite, unit-trace operator. Construction
/// checks finiteness, hermiticity and trace; positivity is checked lazily
/// through min_eigenvalue() since it costs a decomposition.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix maximally_mixed(std::size_t dim);

  /// V diag(p) V† for populations p in the given orthonormal basis.
  /// Populations are clamped at −1e-14 (tiny negative noise) and
  /// renormalized to unit sum.
  static DensityMatrix from_populations(const Eigensystem& basis,
                                        const std::vector<double>& populations);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }

  double min_eigenvalue() const;
  /// diagonal elements in the eigenbasis of `basis` (the ⟨n|ρ|n⟩)
  std::vector<double> populations_in(const Eigensystem& basis) const;
  /// largest |off-diagonal| in the eigenbasis of `basis`
  double coherence_in(const Eigensystem& basis) const;

 private:
  ComplexMatrix m_;
};

/// ρ_a ⊗ ρ_b (ordering as in kron: left factor slow)
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qwork
