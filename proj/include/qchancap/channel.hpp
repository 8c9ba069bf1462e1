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
#include <vector>

#include "qchancap/matrix.hpp"
#include "qchancap/state.hpp"

namespace qchancap {

/// Largest single-block dimension (dimⁿ) accepted by apply_product.
inline constexpr std::size_t kMaxProductDim = 256;
/// Largest joint (output ⊗ reference) dimension built by joint_state/io_state.
inline constexpr std::size_t kMaxJointDim = 4096;
/// Tolerance on ‖Σ K†K − I‖_max.
inline constexpr double kTracePreservingTol = 1e-9;

/// Trace-preserving completely positive map in Kraus form,
/// ρ ↦ Σ_k K_k ρ K_k†. Every Kraus operator is dim_out × dim_in.
class QuantumChannel {
 public:
  /// Throws ChannelError if the list is empty, shapes disagree, an entry is
  /// not finite, or Σ K†K deviates from the identity beyond
  /// kTracePreservingTol.
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// Σ_{ij} 𝒮(|i⟩⟨j|) ⊗ |i⟩⟨j| (output ⊗ input ordering, unnormalized).
  ComplexMatrix choi() const;

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  std::vector<ComplexMatrix> kraus_;
};

/// ‖Σ K†K − I‖_max for an arbitrary Kraus list (no validation).
double trace_preservation_defect(const std::vector<ComplexMatrix>& kraus);

/// Channels are equal when their Choi matrices agree within tol.
bool same_superoperator(const QuantumChannel& a, const QuantumChannel& b,
                        double tol = 1e-9);

QuantumChannel identity_channel(std::size_t dim);

/// Kraus {|i⟩⟨i|}: kills every off-diagonal dyad.
QuantumChannel complete_dephasing(std::size_t dim);

/// Qubit channel with |0⟩⟨1| ↦ (1−ε)|0⟩⟨1| and populations untouched.
/// Kraus {√(1−ε)·I, √ε·|0⟩⟨0|, √ε·|1⟩⟨1|}.
QuantumChannel dephasing(double epsilon);

/// Qubit channel ρ ↦ (1−η)ρ + η·I/2.
/// Kraus {√(1−3η/4)·I, √(η/4)·σx, √(η/4)·σy, √(η/4)·σz}.
QuantumChannel depolarizing(double eta);

/// Σ_k K_k m K_k† for any dim_in × dim_in matrix m (the linear extension of
/// the channel to non-states).
ComplexMatrix apply(const QuantumChannel& c, const ComplexMatrix& m);
DensityMatrix apply(const QuantumChannel& c, const DensityMatrix& rho);

/// (𝒮 ⊗ id)(|Φ⟩⟨Φ|) with |Φ⟩ = purify(ρ_in); a state on dim_out·dim_in.
DensityMatrix joint_state(const QuantumChannel& c, const DensityMatrix& rho_in);

/// Σ_i p_i 𝒮(|φ_i⟩⟨φ_i|) ⊗ |φ_i⟩⟨φ_i| over the eigensystem of ρ_in.
DensityMatrix io_state(const QuantumChannel& c, const DensityMatrix& rho_in);

/// 𝒮^{⊗n}(m), applied one tensor site at a time. m must be dim_inⁿ square.
/// Throws SizeCapError when max(dim_in, dim_out)ⁿ > kMaxProductDim.
ComplexMatrix apply_product(const QuantumChannel& c, const ComplexMatrix& m, int n);
DensityMatrix apply_product(const QuantumChannel& c, const DensityMatrix& rho, int n);

}  // namespace qchancap
