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
#include <cstdint>
#include <string>
#include <vector>

#include "qchancap/channel.hpp"
#include "qchancap/state.hpp"

namespace qchancap {

enum class CodeKind { Random, Bell, Basis };

std::string to_string(CodeKind kind);

/// k orthonormal codewords in dimⁿ, stored as the columns of `codewords`.
struct Code {
  int n = 0;
  std::size_t k = 0;
  std::size_t dim = 0;
  ComplexMatrix codewords;
  std::uint64_t seed = 0;
  CodeKind kind = CodeKind::Random;

  PureState codeword(std::size_t i) const;
  /// C†C; the identity for a valid code.
  ComplexMatrix gram() const;
};

/// Gram–Schmidt with one re-orthogonalization pass over the columns of g.
ComplexMatrix orthonormalize_columns(const ComplexMatrix& g);

/// k Haar-random orthonormal codewords in the full dimⁿ space.
Code random_code(int n, std::size_t k, std::size_t dim, std::uint64_t seed);

/// k random orthonormal codewords inside span(basis) (orthonormal columns,
/// e.g. from typical_subspace_basis).
Code random_code_in_subspace(const ComplexMatrix& basis, int n, std::size_t dim,
                             std::size_t k, std::uint64_t seed);

/// The 2ⁿ states (|b⟩ ± |b̄⟩)/√2, b ranging over bitstrings with leading 0.
/// For n = 2: (|00⟩±|11⟩)/√2, (|01⟩±|10⟩)/√2.
Code bell_code(int n);

/// Computational basis states |0⟩ … |k−1⟩ of dimⁿ.
Code basis_code(int n, std::size_t k, std::size_t dim);

/// 𝒮^{⊗n}(|α_i⟩⟨α_i|) for every codeword.
std::vector<DensityMatrix> transmit(const Code& code, const QuantumChannel& c);

struct OverlapReport {
  int n = 0;
  std::vector<double> purities;                         ///< tr ρ_i²
  std::vector<std::vector<double>> overlaps;            ///< tr ρ_i ρ_j
  std::vector<std::vector<double>> normalized_overlaps; ///< tr ρ_iρ_j / √(tr ρ_i² tr ρ_j²)
  double predicted_log2_overlap = 0.0;                  ///< −n·C_Q

  /// Median of the strictly-upper-triangular normalized overlaps (0 if k < 2).
  double median_offdiagonal() const;
};

OverlapReport overlap_report(const std::vector<DensityMatrix>& outputs, int n, double c_q);

struct DecodingReport {
  std::size_t trials = 0;
  std::size_t correct = 0;
  double misidentification_rate = 0.0;
  std::vector<std::size_t> projector_rank_used;
  std::uint64_t seed = 0;
};

inline constexpr double kDefaultDecodeWeight = 0.99;

/// Dominant-eigenspace projection decoder. Each codeword's projector spans the
/// fewest leading eigenvectors of its channel output carrying ≥ weight of the
/// trace. A trial draws a codeword uniformly, draws an eigenvector of its
/// output with probability equal to the eigenvalue, and decodes to
/// argmax_j ⟨out|P_j|out⟩ (lowest index on ties).
DecodingReport projection_decode(const Code& code, const QuantumChannel& c,
                                 std::size_t trials, double weight, std::uint64_t seed);

/// How random pure inputs are drawn for the purity-average experiment.
enum class InputSampler {
  /// Flat amplitudes with i.i.d. uniform phases in the source eigenbasis:
  /// ⟨α ᾱ⟩ = p·δ and no amplitude fluctuation, the averaging under which the
  /// three-term purity identity is exact.
  RandomPhase,
  /// Normalized complex Gaussian vectors (Haar measure). Carries O(1/dimⁿ)
  /// fourth-moment corrections relative to the identity.
  Haar,
};

std::string to_string(InputSampler s);

struct PurityExperiment {
  double mc_mean = 0.0;
  double std_error = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;    ///< |mc_mean − rhs| / rhs
  double tolerance = 0.0;  ///< 3·(std_error + 2·rhs/dimⁿ), on |mc_mean − rhs|
  bool pass = false;
};

/// Monte Carlo average of tr ρ_α² over random inputs on the n-fold space,
/// compared with purity_identity_rhs. ρ_in must be maximally mixed.
PurityExperiment purity_average_experiment(const QuantumChannel& c,
                                           const DensityMatrix& rho_in, int n,
                                           std::size_t trials, std::uint64_t seed,
                                           InputSampler sampler = InputSampler::RandomPhase);

}  // namespace qchancap
