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

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "qchancap/error.hpp"
#include "qchancap/typical.hpp"
#include "test_util.hpp"

using namespace qchancap;
using namespace qchancap::testing;

namespace {

struct BruteForce {
  double mass = 0.0;
  double purity = 0.0;
  long long count = 0;
};

// Walks every one of k^N sequences and applies the typicality test directly.
BruteForce enumerate_sequences(const std::vector<double>& p, int n, double delta) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log2(x);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<long long>(p.size());
  BruteForce out;
  for (long long seq = 0; seq < total; ++seq) {
    long long rem = seq;
    double prob = 1.0;
    for (int i = 0; i < n; ++i) {
      prob *= p[static_cast<std::size_t>(rem % static_cast<long long>(p.size()))];
      rem /= static_cast<long long>(p.size());
    }
    if (prob == 0.0) continue;
    if (std::abs(-std::log2(prob) / n - s) <= delta + 1e-12) {
      out.mass += prob;
      out.purity += prob * prob;
      ++out.count;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("type_classes: exact multinomials and full partition") {
  const std::array<double, 3> p{0.5, 0.3, 0.2};
  const std::vector<TypeClass> classes = type_classes(p, 6);
  CHECK(classes.size() == 28);  // C(8, 2)
  BigInt total = 0;
  double mass = 0.0;
  for (const auto& c : classes) {
    total += c.multiplicity;
    mass += c.multiplicity.convert_to<double>() * std::exp2(c.log2_prob_per_sequence);
    CHECK(c.log2_prob_per_sequence <= 0.0);
    CHECK(c.counts[0] + c.counts[1] + c.counts[2] == 6);
  }
  CHECK(total == 729);
  CHECK(std::abs(mass - 1.0) < 1e-12);

  const std::array<double, 2> binary{0.7, 0.3};
  const std::vector<TypeClass> big = type_classes(binary, 64);
  double all_mass = 0.0;
  for (const auto& c : big) {
    all_mass += c.multiplicity.convert_to<double>() * std::exp2(c.log2_prob_per_sequence);
    if (c.counts[0] == 32) CHECK(c.multiplicity == BigInt("1832624140942590534"));
  }
  CHECK(std::abs(all_mass - 1.0) < 1e-9);
}

TEST_CASE("typical_set: agrees with brute-force sequence enumeration") {
  const std::vector<std::vector<double>> sources{
      {0.7, 0.3}, {0.9, 0.1}, {0.5, 0.25, 0.25}, {0.6, 0.3, 0.1}, {0.4, 0.0, 0.6}};
  for (const auto& p : sources) {
    for (int n : {1, 3, 6, 9}) {
      for (double delta : {0.05, 0.1, 0.3}) {
        const TypicalSet set = typical_set(p, n, delta);
        const BruteForce ref = enumerate_sequences(p, n, delta);
        CHECK(set.dimension == ref.count);
        CHECK(std::abs(set.total_mass - ref.mass) < 1e-12);
        CHECK(std::abs(hp_purity(p, n, delta) - ref.purity) < 1e-12);
      }
    }
  }
}

TEST_CASE("typical_set: uniform and deterministic sources") {
  const std::array<double, 2> fair{0.5, 0.5};
  for (double delta : {0.01, 0.1, 1.0}) {
    const TypicalSet set = typical_set(fair, 10, delta);
    CHECK(set.log2_dimension == 10.0);
    CHECK(set.total_mass == 1.0);
  }
  const std::array<double, 4> four{0.25, 0.25, 0.25, 0.25};
  for (int n : {1, 5, 12}) {
    const TypicalSet set = typical_set(four, n, 0.1);
    CHECK(set.log2_dimension == 2.0 * n);
    CHECK(hp_purity(four, n, 0.1) == std::exp2(-2.0 * n));
  }
  const std::array<double, 2> sure{1.0, 0.0};
  const TypicalSet one = typical_set(sure, 10, 0.01);
  CHECK(one.dimension == 1);
  CHECK(one.total_mass == 1.0);
  CHECK(one.log2_dimension == 0.0);
  CHECK(hp_purity(sure, 10, 0.01) == 1.0);
}

TEST_CASE("typical_set: binary source at N = 20") {
  const std::array<double, 2> p{0.7, 0.3};
  const TypicalSet set = typical_set(p, 20, 0.1);
  const double s = entropy_bits({0.7, 0.3});
  CHECK(std::abs(set.entropy - 0.8812908992306927) < 1e-12);
  CHECK(std::abs(s - set.entropy) < 1e-15);
  CHECK(set.log2_dimension <= 20.0 * (s + 0.1) + 2.0 * std::log2(21.0));
  // Chebyshev on −log₂ P(x) per symbol.
  const double lr = std::log2(0.7 / 0.3);
  const double var = 0.7 * 0.3 * lr * lr;
  CHECK(set.total_mass >= 1.0 - var / (20.0 * 0.1 * 0.1));
  // Included classes are exactly those with 13 to 15 of the likely symbol.
  std::vector<int> heads;
  for (const auto& c : set.classes) heads.push_back(c.counts[0]);
  std::sort(heads.begin(), heads.end());
  CHECK(heads == std::vector<int>{13, 14, 15});
  const double expected = (77520.0 * std::pow(0.7, 13) * std::pow(0.3, 7)) +
                          (38760.0 * std::pow(0.7, 14) * std::pow(0.3, 6)) +
                          (15504.0 * std::pow(0.7, 15) * std::pow(0.3, 5));
  CHECK(std::abs(set.total_mass - expected) < 1e-12);
}

TEST_CASE("typical_set: bounds hold across block lengths") {
  const std::vector<std::vector<double>> sources{{0.7, 0.3}, {0.5, 0.3, 0.2}, {0.9, 0.05, 0.05}};
  for (const auto& p : sources) {
    for (int n : {4, 8, 16, 32}) {
      for (double delta : {0.05, 0.1, 0.2}) {
        const TypicalSet set = typical_set(p, n, delta);
        const double k = static_cast<double>(p.size());
        CHECK(set.log2_dimension <= n * (set.entropy + delta) + k * std::log2(n + 1.0));
        CHECK(set.total_mass >= 0.0);
        CHECK(set.total_mass <= 1.0);
        for (const auto& c : set.classes) {
          CHECK(std::abs(-c.log2_prob_per_sequence / n - set.entropy) <= delta + 1e-12);
        }
        if (set.classes.empty()) continue;
        const double v = hp_purity(p, n, delta);
        const double lo = std::exp2(-n * (set.entropy + delta)) * set.total_mass * set.total_mass;
        const double hi = std::exp2(-n * (set.entropy - delta));
        CHECK(v >= lo * (1.0 - 1e-12));
        CHECK(v <= hi * (1.0 + 1e-12));
      }
    }
  }
  const std::array<double, 2> p{0.7, 0.3};
  const double v = hp_purity(p, 32, 0.1);
  const TypicalSet set = typical_set(p, 32, 0.1);
  CHECK(-std::log2(v) / 32.0 >= set.entropy - 0.1);
  CHECK(-std::log2(v) / 32.0 <= set.entropy + 0.1 + std::log2(1.0 / set.total_mass) / 32.0);
}

TEST_CASE("typical_mass_convergence: binary source, uniform source, large delta") {
  const std::array<double, 2> p{0.7, 0.3};
  const std::array<int, 4> ns{8, 16, 32, 64};
  const auto masses = typical_mass_convergence(p, 0.1, ns);
  REQUIRE(masses.size() == 4);
  CHECK(masses[3].second > masses[0].second);
  for (std::size_t i = 0; i < masses.size(); ++i) CHECK(masses[i].first == ns[i]);

  const std::array<double, 2> fair{0.5, 0.5};
  for (const auto& [n, m] : typical_mass_convergence(fair, 0.1, ns)) CHECK(std::abs(m - 1.0) < 1e-12);

  // δ above the largest per-symbol surprisal deviation admits every class.
  const double wide = std::log2(1.0 / 0.3);
  for (const auto& [n, m] : typical_mass_convergence(p, wide, ns)) {
    CHECK(std::abs(m - 1.0) < 1e-9);
  }
}

TEST_CASE("typical_set: validation and size caps") {
  const std::array<double, 2> short_sum{0.6, 0.3};
  CHECK_THROWS_AS(typical_set(short_sum, 4, 0.1), ParameterError);
  const std::array<double, 2> negative{1.2, -0.2};
  CHECK_THROWS_AS(typical_set(negative, 4, 0.1), ParameterError);
  const std::array<double, 2> p{0.7, 0.3};
  CHECK_THROWS_AS(typical_set(p, 0, 0.1), ParameterError);
  CHECK_THROWS_AS(typical_set(p, 65, 0.1), SizeCapError);
  CHECK_THROWS_AS(typical_set(p, 8, 0.0), ParameterError);
  const std::vector<double> nine(9, 1.0 / 9.0);
  CHECK_THROWS_AS(typical_set(nine, 4, 0.1), SizeCapError);
  // 8 symbols at N = 64: C(71, 7) ≈ 1.2e9 classes.
  const std::vector<double> eight(8, 0.125);
  CHECK_THROWS_AS(typical_set(eight, 64, 0.1), SizeCapError);
  CHECK_NOTHROW(typical_set(eight, 16, 0.1));
}

TEST_CASE("typical_subspace_basis: orthonormal columns spanning typical products") {
  const std::array<double, 2> p{0.8, 0.2};
  CounterRng rng(53, 0);
  const ComplexMatrix u = random_unitary(rng, 2);
  const DensityMatrix rho(ComplexMatrix(u * DensityMatrix::diagonal(p).matrix() * u.adjoint()));
  for (int n : {2, 4, 6}) {
    for (double delta : {0.1, 0.5}) {
      const ComplexMatrix b = typical_subspace_basis(rho, n, delta);
      const TypicalSet set = typical_set(p, n, delta);
      CHECK(BigInt(b.cols()) == set.dimension);
      CHECK(max_abs(b.adjoint() * b - identity(static_cast<std::size_t>(b.cols()))) < 1e-12);
      // tr(P ρ^{⊗n}) equals the typical mass.
      ComplexMatrix rho_n = ComplexMatrix::Identity(1, 1);
      for (int i = 0; i < n; ++i) rho_n = kron_by_index(rho_n, rho.matrix());
      const double mass = (b.adjoint() * rho_n * b).trace().real();
      CHECK(std::abs(mass - set.total_mass) < 1e-10);
    }
  }
  CHECK_THROWS_AS(typical_subspace_basis(rho, 9, 0.1), SizeCapError);
  CHECK_THROWS_AS(typical_subspace_basis(DensityMatrix::maximally_mixed(3), 6, 0.1),
                  SizeCapError);
}
