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

#include "qchancap/channel.hpp"
#include "qchancap/state.hpp"

namespace qchancap {

/// Eigenvalues below this are exact zeros inside entropy sums.
inline constexpr double kEntropyZeroFloor = 1e-12;

/// Entropies of one (channel, source) pair, in bits.
struct InfoReport {
  double s_in = 0.0;
  double s_out = 0.0;
  double s_joint = 0.0;  ///< entropy of the joint state (𝒮⊗id)(|Φ⟩⟨Φ|)
  double i_q = 0.0;      ///< max(0, s_out − s_joint)
};

/// −Σ λ log₂ λ with 0·log₂0 = 0. Multiply by ln 2 for nats.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy in bits of a probability vector (zero entries skipped).
double shannon_entropy(std::span<const double> probs);

/// tr ρ².
double purity(const DensityMatrix& rho);

InfoReport coherent_information(const QuantumChannel& c, const DensityMatrix& rho_in);

/// purity(ρ_out)ⁿ + purity(ρ_joint)ⁿ − purity(ρ_io)ⁿ.
double purity_identity_rhs(const QuantumChannel& c, const DensityMatrix& rho_in, int n);

}  // namespace qchancap
