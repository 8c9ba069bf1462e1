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

#include "qchancap/typical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qchancap/channel.hpp"
#include "qchancap/error.hpp"
#include "qchancap/info.hpp"

namespace qchancap {

namespace {

// Slack on the typicality comparison so that exactly-typical classes
// (e.g. flat spectra) are not dropped by last-bit rounding.
constexpr double kTypicalitySlack = 1e-12;

double log2_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  return std::log2(x.convert_to<double>());
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

void check_block_length(int n) {
  if (n < 1) throw ParameterError("block length must be positive");
  if (n > kMaxBlockLength) {
    throw SizeCapError("block length " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(kMaxBlockLength));
  }
}

bool is_typical(double log2_prob, int n, double entropy, double delta) {
  if (!std::isfinite(log2_prob)) return false;
  return std::abs(-log2_prob / n - entropy) <= delta + kTypicalitySlack;
}

double class_mass(const TypeClass& c) {
  if (!std::isfinite(c.log2_prob_per_sequence)) return 0.0;
  return std::exp2(log2_big(c.multiplicity) + c.log2_prob_per_sequence);
}

}  // namespace

void validate_distribution(std::span<const double> probs) {
  if (probs.empty()) throw ParameterError("probability vector is empty");
  if (probs.size() > kMaxSymbols) {
    throw SizeCapError("at most " + std::to_string(kMaxSymbols) + " symbols are supported");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ParameterError("probabilities must be finite and non-negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ParameterError("probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
}

std::vector<TypeClass> type_classes(std::span<const double> probs, int n) {
  validate_distribution(probs);
  check_block_length(n);

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) support.push_back(i);
  }
  const auto k = static_cast<unsigned>(support.size());
  const BigInt class_count = binomial(static_cast<unsigned>(n) + k - 1, k - 1);
  if (class_count > kMaxTypeClasses) {
    throw SizeCapError("type-class enumeration needs " + class_count.str() +
                       " classes, cap is " + std::to_string(kMaxTypeClasses));
  }

  std::vector<BigInt> factorial(static_cast<std::size_t>(n) + 1);
  factorial[0] = 1;
  for (int i = 1; i <= n; ++i) factorial[static_cast<std::size_t>(i)] = factorial[static_cast<std::size_t>(i - 1)] * i;

  std::vector<double> log2p(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) log2p[i] = std::log2(probs[i]);

  std::vector<TypeClass> out;
  out.reserve(class_count.convert_to<std::size_t>());
  std::vector<int> counts(probs.size(), 0);

  // Depth-first over the support symbols; the last one takes the remainder.
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    const std::size_t sym = support[pos];
    if (pos + 1 == support.size()) {
      counts[sym] = remaining;
      TypeClass c;
      c.counts = counts;
      BigInt denom = 1;
      double lp = 0.0;
      for (std::size_t s : support) {
        denom *= factorial[static_cast<std::size_t>(counts[s])];
        if (counts[s] > 0) lp += counts[s] * log2p[s];
      }
      c.multiplicity = factorial[static_cast<std::size_t>(n)] / denom;
      c.log2_prob_per_sequence = lp;
      out.push_back(std::move(c));
      counts[sym] = 0;
      return;
    }
    for (int take = remaining; take >= 0; --take) {
      counts[sym] = take;
      self(self, pos + 1, remaining - take);
    }
    counts[sym] = 0;
  };
  recurse(recurse, 0, n);
  return out;
}

TypicalSet typical_set(std::span<const double> probs, int n, double delta) {
  if (!(delta > 0.0)) throw ParameterError("typicality delta must be positive");
  TypicalSet set;
  set.probs.assign(probs.begin(), probs.end());
  set.n = n;
  set.delta = delta;
  std::vector<TypeClass> all = type_classes(probs, n);
  set.entropy = shannon_entropy(probs);

  std::vector<double> masses;
  set.dimension = 0;
  for (auto& c : all) {
    if (!is_typical(c.log2_prob_per_sequence, n, set.entropy, delta)) continue;
    masses.push_back(class_mass(c));
    set.dimension += c.multiplicity;
    set.classes.push_back(std::move(c));
  }
  std::sort(masses.begin(), masses.end());
  double mass = 0.0;
  for (double m : masses) mass += m;
  set.total_mass = std::clamp(mass, 0.0, 1.0);
  set.log2_dimension = log2_big(set.dimension);
  return set;
}

std::vector<std::pair<int, double>> typical_mass_convergence(std::span<const double> probs,
                                                             double delta,
                                                             std::span<const int> n_list) {
  std::vector<std::pair<int, double>> out;
  out.reserve(n_list.size());
  for (int n : n_list) out.emplace_back(n, typical_set(probs, n, delta).total_mass);
  return out;
}

double hp_purity(std::span<const double> probs, int n, double delta) {
  const TypicalSet set = typical_set(probs, n, delta);
  std::vector<double> terms;
  terms.reserve(set.classes.size());
  for (const auto& c : set.classes) {
    terms.push_back(std::exp2(log2_big(c.multiplicity) + 2.0 * c.log2_prob_per_sequence));
  }
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

ComplexMatrix typical_subspace_basis(const DensityMatrix& rho, int n, double delta) {
  if (n < 1 || n > kMaxProjectorBlock) {
    throw SizeCapError("typical projector block length must lie in [1, " +
                       std::to_string(kMaxProjectorBlock) + "]");
  }
  if (!(delta > 0.0)) throw ParameterError("typicality delta must be positive");
  const std::size_t d = rho.dim();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= d;
    if (total > kMaxProductDim) throw SizeCapError("typical projector dimension exceeds cap");
  }

  const HermitianEigen e = eig_psd(rho.matrix());
  std::vector<double> probs(d);
  for (std::size_t i = 0; i < d; ++i) probs[i] = e.values(static_cast<Eigen::Index>(i));
  const double entropy = shannon_entropy(probs);

  std::vector<ComplexVector> columns;
  std::vector<std::size_t> digits(static_cast<std::size_t>(n));
  for (std::size_t seq = 0; seq < total; ++seq) {
    std::size_t rem = seq;
    double lp = 0.0;
    for (int s = n - 1; s >= 0; --s) {
      digits[static_cast<std::size_t>(s)] = rem % d;
      rem /= d;
    }
    for (std::size_t dig : digits) {
      lp += probs[dig] > kEntropyZeroFloor ? std::log2(probs[dig])
                                           : -std::numeric_limits<double>::infinity();
    }
    if (!is_typical(lp, n, entropy, delta)) continue;
    ComplexMatrix v = ComplexMatrix::Ones(1, 1);
    for (std::size_t dig : digits) {
      v = tensor(v, ComplexMatrix(e.vectors.col(static_cast<Eigen::Index>(dig))));
    }
    columns.emplace_back(v.col(0));
  }

  ComplexMatrix basis(static_cast<Eigen::Index>(total),
                      static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    basis.col(static_cast<Eigen::Index>(j)) = columns[j];
  }
  return basis;
}

}  // namespace qchancap
