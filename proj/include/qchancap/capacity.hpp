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

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qchancap/channel.hpp"
#include "qchancap/info.hpp"
#include "qchancap/state.hpp"

namespace qchancap {

struct OptimizerConfig {
  int restarts = 16;
  int max_iters = 2000;
  double tol = 1e-8;  ///< stop once the simplex objective spread drops below this
  std::uint64_t seed = 0;

  void validate() const;
};

struct CapacityResult {
  double c_q = 0.0;
  DensityMatrix rho_star = DensityMatrix::maximally_mixed(2);
  /// Runs (fixed start included) whose final value is within 1e−6 of c_q.
  int restarts_agreeing = 0;
  /// Start index that produced rho_star; 0 is the fixed I/d start.
  int best_start = 0;
  /// (iteration, best objective) for the winning run.
  std::vector<std::pair<int, double>> objective_trace;
};

/// Reads params as a complex d×d matrix A (re/im interleaved, row-major) and
/// returns A·A†/tr(A·A†). params.size() must be 2d² for some d ≥ 1.
DensityMatrix parameterize_density(std::span<const double> params);

/// Inverse convenience: params with A = M (so parameterize_density gives
/// M·M†/tr).
std::vector<double> density_params(const ComplexMatrix& a);

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  std::vector<std::pair<int, double>> trace;
};

/// Minimizes f from x0 with the standard reflection/expansion/contraction/
/// shrink coefficients (1, 2, ½, ½). Stops when max f − min f over the simplex
/// is below tol or after max_iters iterations.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, double initial_step, int max_iters,
                             double tol);

/// max over ρ of I_Q: one fixed start at I/d plus cfg.restarts seeded random
/// starts, searched in parallel. Deterministic for a given (channel, cfg).
CapacityResult channel_capacity(const QuantumChannel& c, const OptimizerConfig& cfg);

/// η at which the depolarizing joint-state entropy at I/2 reaches 1 bit,
/// i.e. where I_Q(I/2) falls to zero. Bisection on [0.01, 0.99].
double depolarizing_threshold(double tol);

}  // namespace qchancap
