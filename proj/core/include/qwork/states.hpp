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

#include <vector>

#include "qwork/density_matrix.hpp"
#include "qwork/eigensolver.hpp"
#include "qwork/matrix.hpp"
#include "qwork/version.hpp"

namespace qwork {

/// Hermitian operator stored together with its spectral decomposition.
/// Units: ħ = 1 throughout; frequencies carry angular-frequency units.
struct SpectralHamiltonian {
  ComplexMatrix matrix;
  Eigensystem eigensystem;

  static SpectralHamiltonian from_matrix(ComplexMatrix h);
  static SpectralHamiltonian from_diagonal(std::vector<double> diag);

  std::size_t dim() const { return matrix.dim(); }
};

/// Thermal parameterization: exactly one of β or n̄ is primary, the other is
/// derived through n̄ = 1/(e^{βλ₀} − 1), a bijection for β > 0, λ₀ > 0.
class ThermalSpec {
 public:
  static ThermalSpec from_beta(double beta, double lambda0);
  static ThermalSpec from_nbar(double nbar, double lambda0);

  double beta() const;  // +inf when constructed from n̄ = 0
  double nbar() const;
  double lambda0() const { return lambda0_; }
  bool beta_is_primary() const { return beta_primary_; }

 private:
  ThermalSpec(double beta, double nbar, double lambda0, bool beta_primary)
      : beta_(beta), nbar_(nbar), lambda0_(lambda0), beta_primary_(beta_primary) {}
  double beta_;
  double nbar_;
  double lambda0_;
  bool beta_primary_;
};

double nbar_from_beta(double beta, double lambda0);
double beta_from_nbar(double nbar, double lambda0);

/// Work-parameter protocol λ(t). An empty schedule is the sudden quench
/// (instantaneous λ₀ → λ_τ, zero duration); otherwise the schedule is a
/// piecewise-constant list of (duration, λ) segments starting at λ₀ and
/// ending at λ_τ.
struct QuenchProtocol {
  struct Segment {
    double duration;
    double lambda;
  };

  double lambda0;
  double lambda_tau;
  std::vector<Segment> schedule;

  static QuenchProtocol sudden(double lambda0, double lambda_tau);
  static QuenchProtocol piecewise(double lambda0, double lambda_tau,
                                  std::vector<Segment> schedule);

  bool is_sudden() const { return schedule.empty(); }
  double delta_lambda() const { return lambda_tau - lambda0; }
  double total_duration() const;
};

/// Truncated harmonic oscillator ħλ(â†â + 1/2): diagonal with entries
/// (n + 1/2)λ for n = 0..nmax. Throws InvalidDimension for nmax < 1.
SpectralHamiltonian oscillator_hamiltonian(double lambda, int nmax);

/// e^{−βH}/Z on the truncated spectrum. β = 0 gives the maximally mixed
/// state; populations are shifted by the ground energy before
/// exponentiation, so large β underflows gracefully to the ground state.
DensityMatrix thermal_state(const SpectralHamiltonian& h, double beta);

/// Z(β) = Σ_n e^{−βE_n} over the truncated spectrum.
double partition_function(const SpectralHamiltonian& h, double beta);

/// Smallest nmax whose excluded geometric tail (n̄/(1+n̄))^{nmax+1} is below
/// eps_tail. Throws TailTooHeavy past `cap`.
int truncation_dim(double nbar, double eps_tail, int cap = 4096);

/// Geometric thermal weights n̄ⁿ/(1+n̄)^{n+1} for n = 0..nmax, renormalized
/// over the truncation.
std::vector<double> thermal_populations(double nbar, int nmax);

/// Oscillator + matching thermal state with the truncation chosen from
/// eps_tail (at least dimension 2 so a qubit of Fock space always exists).
struct TruncatedOscillator {
  SpectralHamiltonian hamiltonian;
  DensityMatrix state;
  int nmax;
};
TruncatedOscillator truncated_thermal_oscillator(double lambda, double nbar,
                                                 double eps_tail = kDefaultEpsTail);

/// Fixed 2×2 operators of the ancilla qubit. Tensor ordering everywhere in
/// this library is (system ⊗ ancilla): the ancilla owns the fast index.
struct QubitConstants {
  ComplexMatrix pauli_x;
  ComplexMatrix pauli_y;
  ComplexMatrix pauli_z;
  ComplexMatrix hadamard;
  ComplexMatrix ket0_proj;
  ComplexMatrix ket1_proj;
  ComplexMatrix plus_proj;
};
const QubitConstants& qubit_constants();

}  // namespace qwork
