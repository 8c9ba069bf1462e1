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
#include <span>

#include "qchancap/matrix.hpp"

namespace qchancap {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based generator: the k-th draw of a stream is a pure function of
/// (seed, stream, k), so per-trial streams are reproducible regardless of the
/// order or thread on which trials run. Normal and uniform variates are
/// produced by our own transforms, not <random> distributions, so bits match
/// across standard libraries.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal (Box–Muller).
  double normal();

  /// Real and imaginary parts independent standard normals.
  cplx complex_normal();

  /// Index i with probability weights[i] / Σ weights. Zero weights are never
  /// returned.
  std::size_t discrete(std::span<const double> weights);

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// Matrix of i.i.d. complex standard normal entries.
ComplexMatrix gaussian_matrix(CounterRng& rng, std::size_t rows, std::size_t cols);

}  // namespace qchancap
