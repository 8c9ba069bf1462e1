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
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qchancap/matrix.hpp"
#include "qchancap/state.hpp"

namespace qchancap {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxSymbols = 8;
inline constexpr int kMaxBlockLength = 64;
/// Upper bound on enumerated type classes (compositions of N over the support).
inline constexpr std::size_t kMaxTypeClasses = 5'000'000;
/// Block length cap for materialized typical projectors.
inline constexpr int kMaxProjectorBlock = 8;
inline constexpr double kDefaultDelta = 0.1;

/// All sequences with a given symbol composition.
struct TypeClass {
  std::vector<int> counts;              ///< occurrences of each symbol, Σ = N
  double log2_prob_per_sequence = 0.0;  ///< Σ counts_i·log₂ p_i (−∞ if impossible)
  BigInt multiplicity;                  ///< N! / Π counts_i!
};

/// Entropy-typical sequences: |−log₂P(x)/N − S| ≤ δ.
struct TypicalSet {
  std::vector<double> probs;
  int n = 0;
  double delta = kDefaultDelta;
  double entropy = 0.0;  ///< S = −Σ p log₂ p
  std::vector<TypeClass> classes;
  BigInt dimension;  ///< Σ multiplicities of included classes
  double total_mass = 0.0;
  double log2_dimension = 0.0;  ///< −∞ for an empty set
};

/// Throws ParameterError unless probs is non-empty, non-negative and sums to 1
/// within 1e−12; SizeCapError beyond kMaxSymbols symbols.
void validate_distribution(std::span<const double> probs);

/// Every type class of length-n sequences over the support of probs, in
/// lexicographic count order. Zero-probability symbols are not enumerated
/// (their classes carry no mass).
std::vector<TypeClass> type_classes(std::span<const double> probs, int n);

TypicalSet typical_set(std::span<const double> probs, int n, double delta);

/// (N, total_mass) for each N in n_list.
std::vector<std::pair<int, double>> typical_mass_convergence(std::span<const double> probs,
                                                             double delta,
                                                             std::span<const int> n_list);

/// Σ over typical sequences of P(x)².
double hp_purity(std::span<const double> probs, int n, double delta);

/// Orthonormal columns spanning the typical subspace of ρ^{⊗n}: products of
/// eigenvectors of ρ whose eigenvalue sequence is entropy-typical.
/// n ≤ kMaxProjectorBlock and dimⁿ ≤ 256.
ComplexMatrix typical_subspace_basis(const DensityMatrix& rho, int n, double delta);

}  // namespace qchancap
