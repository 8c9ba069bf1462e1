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

#include "qchancap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qchancap/error.hpp"
#include "qchancap/parallel.hpp"
#include "qchancap/rng.hpp"

namespace qchancap {

namespace {
constexpr double kAgreementTol = 1e-6;
constexpr double kInitialStep = 0.5;
}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw ParameterError("optimizer: restarts must be at least 1");
  if (max_iters < 1) throw ParameterError("optimizer: max_iters must be at least 1");
  if (!(tol > 0.0)) throw ParameterError("optimizer: tol must be positive");
}

DensityMatrix parameterize_density(std::span<const double> params) {
  const std::size_t half = params.size() / 2;
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(half))));
  if (params.size() % 2 != 0 || d == 0 || d * d != half) {
    throw DimensionError("parameterize_density: expected 2d² parameters, got " +
                         std::to_string(params.size()));
  }
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix a(n, n);
  bool any_nonzero = false;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::size_t k = 2 * static_cast<std::size_t>(r * n + c);
      if (!std::isfinite(params[k]) || !std::isfinite(params[k + 1])) {
        throw ParameterError("parameterize_density: non-finite parameter");
      }
      any_nonzero = any_nonzero || params[k] != 0.0 || params[k + 1] != 0.0;
      a(r, c) = cplx(params[k], params[k + 1]);
    }
  }
  if (!any_nonzero) throw ParameterError("parameterize_density: all parameters are zero");
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_trusted(std::move(rho));
}

std::vector<double> density_params(const ComplexMatrix& a) {
  require_square(a, "density_params");
  std::vector<double> p;
  p.reserve(static_cast<std::size_t>(2 * a.size()));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      p.push_back(a(r, c).real());
      p.push_back(a(r, c).imag());
    }
  }
  return p;
}

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, double initial_step, int max_iters,
                             double tol) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  NelderMeadResult out;
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto point = [&](double t, std::vector<double>& dst, const std::vector<double>& worst) {
    for (std::size_t j = 0; j < n; ++j) dst[j] = centroid[j] + t * (worst[j] - centroid[j]);
  };

  int it = 0;
  for (; it < max_iters; ++it) {
    std::iota(order.begin(), order.end(), 0);
    // Stable sort keeps ties in index order, so runs are reproducible.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(),
                      second = order[n - 1];
    if (out.trace.empty() || values[best] < out.trace.back().second) {
      out.trace.emplace_back(it, values[best]);
    }
    if (values[worst] - values[best] < tol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    point(-1.0, trial, simplex[worst]);  // reflection
    const double fr = f(trial);
    if (fr < values[best]) {
      point(-2.0, trial2, simplex[worst]);  // expansion
      const double fe = f(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    // Contraction: outside if the reflected point beat the worst, else inside.
    const bool outside = fr < values[worst];
    point(outside ? -0.5 : 0.5, trial2, simplex[worst]);
    const double fc = f(trial2);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = f(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best = static_cast<std::size_t>(best_it - values.begin());
  out.x = simplex[best];
  out.value = values[best];
  out.iterations = it;
  if (out.trace.empty() || out.value < out.trace.back().second) {
    out.trace.emplace_back(it, out.value);
  }
  return out;
}

CapacityResult channel_capacity(const QuantumChannel& c, const OptimizerConfig& cfg) {
  cfg.validate();
  const std::size_t d = c.dim_in();
  const std::size_t starts = static_cast<std::size_t>(cfg.restarts) + 1;

  // Unclamped S_out − S_joint, so random starts deep in the zero region still
  // see a slope. The reported value is clamped afterwards.
  auto objective = [&c](std::span<const double> x) {
    const DensityMatrix rho = parameterize_density(x);
    const InfoReport r = coherent_information(c, rho);
    return -(r.s_out - r.s_joint);
  };

  std::vector<NelderMeadResult> runs(starts);
  parallel_for(starts, [&](std::size_t i) {
    std::vector<double> x0;
    if (i == 0) {
      x0 = density_params(identity(d));
    } else {
      CounterRng rng(cfg.seed + static_cast<std::uint64_t>(i), 0);
      x0.resize(2 * d * d);
      for (double& v : x0) v = rng.normal();
    }
    runs[i] = nelder_mead(objective, std::move(x0), kInitialStep, cfg.max_iters, cfg.tol);
  });

  // Lowest index wins ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < starts; ++i) {
    if (runs[i].value < runs[best].value) best = i;
  }

  CapacityResult result;
  result.rho_star = parameterize_density(runs[best].x);
  result.c_q = coherent_information(c, result.rho_star).i_q;
  result.best_start = static_cast<int>(best);
  result.objective_trace.reserve(runs[best].trace.size());
  for (const auto& [iter, value] : runs[best].trace) {
    result.objective_trace.emplace_back(iter, -value);
  }
  const double best_value = -runs[best].value;
  for (const auto& r : runs) {
    if (std::abs(std::max(0.0, -r.value) - std::max(0.0, best_value)) <= kAgreementTol) {
      ++result.restarts_agreeing;
    }
  }
  return result;
}

double depolarizing_threshold(double tol) {
  if (!(tol > 0.0 && tol < 0.1)) {
    throw ParameterError("depolarizing_threshold: tol must lie in (0, 0.1)");
  }
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  auto excess = [&](double eta) {
    return coherent_information(depolarizing(eta), mixed).s_joint - 1.0;
  };
  double lo = 0.01, hi = 0.99;
  double f_lo = excess(lo);
  const double f_hi = excess(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw Error("depolarizing_threshold: bracket [0.01, 0.99] does not straddle the root");
  }
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    const double f_mid = excess(mid);
    if (hi - lo <= tol && std::abs(f_mid) < tol) break;
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

}  // namespace qchancap
