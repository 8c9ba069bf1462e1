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

#include "qchancap/coding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qchancap/error.hpp"
#include "qchancap/info.hpp"
#include "qchancap/parallel.hpp"
#include "qchancap/rng.hpp"

namespace qchancap {

namespace {

std::size_t block_dim(std::size_t dim, int n) {
  if (n < 1) throw ParameterError("block length must be positive");
  if (dim < 1) throw ParameterError("symbol dimension must be positive");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= dim;
    if (total > kMaxProductDim) {
      throw SizeCapError("code block dimension " + std::to_string(dim) + "^" +
                         std::to_string(n) + " exceeds " + std::to_string(kMaxProductDim));
    }
  }
  return total;
}

constexpr double kTieTol = 1e-12;

}  // namespace

std::string to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::Random: return "random";
    case CodeKind::Bell: return "bell";
    case CodeKind::Basis: return "basis";
  }
  return "unknown";
}

std::string to_string(InputSampler s) {
  return s == InputSampler::Haar ? "haar" : "random-phase";
}

PureState Code::codeword(std::size_t i) const {
  if (i >= k) throw DimensionError("codeword index out of range");
  return PureState(codewords.col(static_cast<Eigen::Index>(i)));
}

ComplexMatrix Code::gram() const { return codewords.adjoint() * codewords; }

ComplexMatrix orthonormalize_columns(const ComplexMatrix& g) {
  ComplexMatrix q = g;
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const cplx proj = q.col(i).dot(q.col(j));
        q.col(j) -= proj * q.col(i);
      }
    }
    const double norm = q.col(j).norm();
    if (!(norm > 1e-12)) throw NormalizationError("orthonormalize: columns are dependent");
    q.col(j) /= norm;
  }
  return q;
}

Code random_code(int n, std::size_t k, std::size_t dim, std::uint64_t seed) {
  const std::size_t total = block_dim(dim, n);
  if (k < 1 || k > total) {
    throw DimensionError("random_code: need 1 ≤ k ≤ dimⁿ = " + std::to_string(total));
  }
  CounterRng rng(seed, 0);
  Code code;
  code.n = n;
  code.k = k;
  code.dim = dim;
  code.seed = seed;
  code.kind = CodeKind::Random;
  code.codewords = orthonormalize_columns(gaussian_matrix(rng, total, k));
  return code;
}

Code random_code_in_subspace(const ComplexMatrix& basis, int n, std::size_t dim,
                             std::size_t k, std::uint64_t seed) {
  const std::size_t total = block_dim(dim, n);
  if (static_cast<std::size_t>(basis.rows()) != total) {
    throw DimensionError("random_code_in_subspace: basis rows must equal dimⁿ");
  }
  const auto rank = static_cast<std::size_t>(basis.cols());
  if (k < 1 || k > rank) {
    throw DimensionError("random_code_in_subspace: need 1 ≤ k ≤ subspace dimension " +
                         std::to_string(rank));
  }
  CounterRng rng(seed, 0);
  Code code;
  code.n = n;
  code.k = k;
  code.dim = dim;
  code.seed = seed;
  code.kind = CodeKind::Random;
  code.codewords = basis * orthonormalize_columns(gaussian_matrix(rng, rank, k));
  return code;
}

Code bell_code(int n) {
  const std::size_t total = block_dim(2, n);
  Code code;
  code.n = n;
  code.k = total;
  code.dim = 2;
  code.kind = CodeKind::Bell;
  code.codewords = ComplexMatrix::Zero(static_cast<Eigen::Index>(total),
                                       static_cast<Eigen::Index>(total));
  const double amp = 1.0 / std::numbers::sqrt2;
  const std::size_t mask = total - 1;
  Eigen::Index col = 0;
  for (std::size_t b = 0; b < total / 2; ++b) {
    const auto lo = static_cast<Eigen::Index>(b);
    const auto hi = static_cast<Eigen::Index>(~b & mask);
    for (double sign : {1.0, -1.0}) {
      code.codewords(lo, col) = amp;
      code.codewords(hi, col) = sign * amp;
      ++col;
    }
  }
  return code;
}

Code basis_code(int n, std::size_t k, std::size_t dim) {
  const std::size_t total = block_dim(dim, n);
  if (k < 1 || k > total) throw DimensionError("basis_code: need 1 ≤ k ≤ dimⁿ");
  Code code;
  code.n = n;
  code.k = k;
  code.dim = dim;
  code.kind = CodeKind::Basis;
  code.codewords = ComplexMatrix::Identity(static_cast<Eigen::Index>(total),
                                           static_cast<Eigen::Index>(k));
  return code;
}

std::vector<DensityMatrix> transmit(const Code& code, const QuantumChannel& c) {
  if (c.dim_in() != code.dim) {
    throw DimensionError("transmit: channel input dimension differs from code symbol dimension");
  }
  std::vector<ComplexMatrix> raw(code.k);
  parallel_for(code.k, [&](std::size_t i) {
    const ComplexVector v = code.codewords.col(static_cast<Eigen::Index>(i));
    raw[i] = apply_product(c, outer(v, v), code.n);
  });
  std::vector<DensityMatrix> out;
  out.reserve(code.k);
  for (auto& m : raw) out.push_back(DensityMatrix::from_trusted(std::move(m)));
  return out;
}

double OverlapReport::median_offdiagonal() const {
  std::vector<double> vals;
  for (std::size_t i = 0; i < normalized_overlaps.size(); ++i) {
    for (std::size_t j = i + 1; j < normalized_overlaps.size(); ++j) {
      vals.push_back(normalized_overlaps[i][j]);
    }
  }
  if (vals.empty()) return 0.0;
  std::sort(vals.begin(), vals.end());
  const std::size_t mid = vals.size() / 2;
  return vals.size() % 2 ? vals[mid] : 0.5 * (vals[mid - 1] + vals[mid]);
}

OverlapReport overlap_report(const std::vector<DensityMatrix>& outputs, int n, double c_q) {
  OverlapReport r;
  r.n = n;
  r.predicted_log2_overlap = -static_cast<double>(n) * c_q;
  const std::size_t k = outputs.size();
  for (const auto& rho : outputs) {
    if (rho.dim() != outputs.front().dim()) {
      throw DimensionError("overlap_report: outputs differ in dimension");
    }
  }
  r.purities.resize(k);
  for (std::size_t i = 0; i < k; ++i) r.purities[i] = purity(outputs[i]);
  r.overlaps.assign(k, std::vector<double>(k, 0.0));
  r.normalized_overlaps.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      // tr(ρ_i ρ_j) = Σ ρ_i(a,b)·conj(ρ_j(a,b)) for Hermitian operands.
      const double ov = std::max(
          0.0, (outputs[i].matrix().array() * outputs[j].matrix().array().conjugate())
                   .sum()
                   .real());
      const double norm = i == j ? 1.0 : std::min(1.0, ov / std::sqrt(r.purities[i] * r.purities[j]));
      r.overlaps[i][j] = r.overlaps[j][i] = ov;
      r.normalized_overlaps[i][j] = r.normalized_overlaps[j][i] = norm;
    }
  }
  return r;
}

DecodingReport projection_decode(const Code& code, const QuantumChannel& c,
                                 std::size_t trials, double weight, std::uint64_t seed) {
  if (trials < 1) throw ParameterError("projection_decode: trials must be positive");
  if (!(weight > 0.0 && weight < 1.0)) {
    throw ParameterError("projection_decode: weight must lie in (0, 1)");
  }
  const std::vector<DensityMatrix> outputs = transmit(code, c);
  const std::size_t k = code.k;

  // Descending eigensystems and leading-eigenspace projector bases.
  std::vector<RealVector> values(k);
  std::vector<ComplexMatrix> vectors(k), bases(k);
  std::vector<std::size_t> ranks(k);
  for (std::size_t i = 0; i < k; ++i) {
    HermitianEigen e = eig_psd(outputs[i].matrix());
    const Eigen::Index dim = e.values.size();
    values[i] = e.values.reverse();
    vectors[i] = e.vectors.rowwise().reverse();
    for (Eigen::Index m = 0; m < dim; ++m) {
      if (values[i](m) < kEntropyZeroFloor) values[i](m) = 0.0;
    }
    const double trace = values[i].sum();
    double acc = 0.0;
    std::size_t r = 0;
    while (r < static_cast<std::size_t>(dim) && acc < weight * trace) {
      acc += values[i](static_cast<Eigen::Index>(r));
      ++r;
    }
    ranks[i] = std::max<std::size_t>(r, 1);
    bases[i] = vectors[i].leftCols(static_cast<Eigen::Index>(ranks[i]));
  }

  // decoded[i][m]: decoder verdict for eigenvector m of output i.
  std::vector<std::vector<std::size_t>> decoded(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Eigen::Index dim = values[i].size();
    decoded[i].resize(static_cast<std::size_t>(dim));
    for (Eigen::Index m = 0; m < dim; ++m) {
      const ComplexVector out = vectors[i].col(m);
      std::size_t best = 0;
      double best_score = -1.0;
      for (std::size_t j = 0; j < k; ++j) {
        const double score = (bases[j].adjoint() * out).squaredNorm();
        if (score > best_score + kTieTol) {
          best = j;
          best_score = score;
        }
      }
      decoded[i][static_cast<std::size_t>(m)] = best;
    }
  }

  std::vector<unsigned char> hit(trials, 0);
  parallel_for(trials, [&](std::size_t t) {
    CounterRng rng(seed, t);
    const auto i = static_cast<std::size_t>(rng.below(k));
    const std::size_t m = rng.discrete(std::span<const double>(
        values[i].data(), static_cast<std::size_t>(values[i].size())));
    hit[t] = decoded[i][m] == i ? 1 : 0;
  });

  DecodingReport r;
  r.trials = trials;
  r.correct = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
  r.misidentification_rate =
      1.0 - static_cast<double>(r.correct) / static_cast<double>(trials);
  r.projector_rank_used = std::move(ranks);
  r.seed = seed;
  return r;
}

PurityExperiment purity_average_experiment(const QuantumChannel& c,
                                           const DensityMatrix& rho_in, int n,
                                           std::size_t trials, std::uint64_t seed,
                                           InputSampler sampler) {
  if (trials < 1) throw ParameterError("purity experiment: trials must be positive");
  if (rho_in.dim() != c.dim_in()) {
    throw DimensionError("purity experiment: source and channel dimensions differ");
  }
  const std::size_t d = rho_in.dim();
  if (max_abs(rho_in.matrix() - identity(d) / static_cast<double>(d)) > 1e-10) {
    throw ParameterError("purity experiment: only the maximally mixed source is supported");
  }
  const std::size_t total = block_dim(d, n);
  const auto dim = static_cast<Eigen::Index>(total);

  std::vector<double> samples(trials);
  parallel_for(trials, [&](std::size_t t) {
    CounterRng rng(seed, t);
    ComplexVector alpha(dim);
    if (sampler == InputSampler::Haar) {
      for (Eigen::Index a = 0; a < dim; ++a) alpha(a) = rng.complex_normal();
      alpha.normalize();
    } else {
      const double amp = 1.0 / std::sqrt(static_cast<double>(total));
      for (Eigen::Index a = 0; a < dim; ++a) {
        alpha(a) = std::polar(amp, 2.0 * std::numbers::pi * rng.uniform());
      }
    }
    samples[t] = apply_product(c, outer(alpha, alpha), n).squaredNorm();
  });

  const double count = static_cast<double>(trials);
  double sum = 0.0;
  for (double s : samples) sum += s;
  PurityExperiment r;
  r.mc_mean = sum / count;
  double sq = 0.0;
  for (double s : samples) sq += (s - r.mc_mean) * (s - r.mc_mean);
  r.std_error = trials > 1 ? std::sqrt(sq / (count - 1.0) / count) : 0.0;
  r.rhs = purity_identity_rhs(c, rho_in, n);
  r.rel_err = std::abs(r.mc_mean - r.rhs) / r.rhs;
  r.tolerance = 3.0 * (r.std_error + 2.0 * r.rhs / static_cast<double>(total));
  r.pass = std::abs(r.mc_mean - r.rhs) <= r.tolerance;
  return r;
}

}  // namespace qchancap
