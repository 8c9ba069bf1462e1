// Copyright 2026 The qchancap Authors
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

#include <cstddef>
#include <span>
#include <vector>

#include "qchancap/matrix.hpp"

namespace qchancap {

/// Normalized state vector.
class PureState {
 public:
  /// Throws NormalizationError unless Σ|a_i|² == 1 within 1e−10.
  explicit PureState(ComplexVector amplitudes);

  /// Rescales a non-zero vector to unit norm.
  static PureState normalized(ComplexVector v);

  /// |i⟩ in dimension dim.
  static PureState basis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix projector() const { return outer(amplitudes_, amplitudes_); }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates all invariants (Hermitian within kHermitianTol, eigenvalues
  /// ≥ −kNegativeFloor, trace 1 within 1e−10).
  explicit DensityMatrix(ComplexMatrix m);

  /// Skips the spectral check. For outputs of trace-preserving CP maps applied
  /// to valid states, where positivity holds by construction. Still checks
  /// shape, finiteness and trace, and symmetrizes away rounding asymmetry.
  static DensityMatrix from_trusted(ComplexMatrix m);

  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix diagonal(std::span<const double> probs);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix m, Unchecked);
  ComplexMatrix matrix_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// A list of (state, probability) pairs. Member states need be neither
/// orthonormal nor normalized; only Σ p_i ⟨ψ_i|ψ_i⟩ = 1 is required.
struct Ensemble {
  struct Member {
    ComplexVector state;
    double probability;
  };
  std::vector<Member> members;

  std::size_t dim() const;
  /// Σ p_i ⟨ψ_i|ψ_i⟩.
  double weight() const;
  /// Throws on empty ensembles, negative probabilities, mixed dimensions, or
  /// weight() ≠ 1 beyond 1e−10.
  void validate() const;
};

/// Σ p_i |ψ_i⟩⟨ψ_i| with no normalization check.
ComplexMatrix ensemble_operator(const Ensemble& e);

/// Density matrix of a validated ensemble.
DensityMatrix from_ensemble(const Ensemble& e);

/// Σ_j √(p_j q_j) ⟨ψ_j|φ_j⟩ over matched members.
cplx ensemble_inner(const Ensemble& a, const Ensemble& b);

/// Member-wise superposition Σ_i c_i·(ensemble i). All ensembles must have the
/// same member count, dimension and probability list.
Ensemble superpose_ensembles(std::span<const cplx> coeffs,
                             std::span<const Ensemble> ensembles);

/// Σ_i √p_i |φ_i⟩|φ_i⟩ over the eigensystem of ρ (system ⊗ reference, the
/// reference a copy of the system space).
PureState purify(const DensityMatrix& rho);

}  // namespace qchancap
