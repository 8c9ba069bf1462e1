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

#include <numbers>

#include "qchancap/error.hpp"
#include "qchancap/matrix.hpp"
#include "test_util.hpp"

using namespace qchancap;
using qchancap::testing::kron_by_index;
using qchancap::testing::random_complex;
using qchancap::testing::random_hermitian;
using qchancap::testing::random_unitary;

TEST_CASE("tensor: identity and diagonal cases") {
  CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);

  ComplexMatrix a = ComplexMatrix::Zero(2, 2), b = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  b(1, 1) = 1.0;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  CHECK(max_abs(tensor(a, b) - expected) == 0.0);
}

TEST_CASE("tensor: matches the index formula and the mixed-product rule") {
  CounterRng rng(11, 0);
  const ComplexMatrix a = random_complex(rng, 2, 3), b = random_complex(rng, 3, 2);
  CHECK(max_abs(tensor(a, b) - kron_by_index(a, b)) == 0.0);

  const ComplexMatrix A = random_complex(rng, 2, 2), B = random_complex(rng, 2, 2),
                      C = random_complex(rng, 2, 2), D = random_complex(rng, 2, 2);
  CHECK(max_abs(tensor(A, B) * tensor(C, D) - tensor(A * C, B * D)) < 1e-12);
}

TEST_CASE("tensor: associative exactly on integer entries") {
  ComplexMatrix a(2, 2), b(2, 1), c(1, 2);
  a << 1.0, 2.0, -3.0, 4.0;
  b << 5.0, -1.0;
  c << 2.0, 7.0;
  CHECK(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))) == 0.0);
  CHECK(max_abs(tensor_power(a, 0) - identity(1)) == 0.0);
  CHECK(max_abs(tensor_power(a, 2) - tensor(a, a)) == 0.0);
}

TEST_CASE("partial_trace: product states, Bell state, and trivial factorization") {
  CounterRng rng(5, 0);
  const ComplexMatrix rho = random_hermitian(rng, 3);
  const ComplexMatrix sigma = random_hermitian(rng, 2);
  const ComplexMatrix reduced = partial_trace(tensor(rho, sigma), {3, 2}, {0});
  CHECK(max_abs(reduced - rho * sigma.trace()) < 1e-12);
  const ComplexMatrix other = partial_trace(tensor(rho, sigma), {3, 2}, {1});
  CHECK(max_abs(other - sigma * rho.trace()) < 1e-12);

  ComplexVector phi = ComplexVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::numbers::sqrt2;
  const ComplexMatrix bell = outer(phi, phi);
  // Brute-force index sum: ⟨i|ρ_A|j⟩ = Σ_k ⟨ik|Φ⟩⟨Φ|jk⟩.
  ComplexMatrix brute = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) brute(i, j) += bell(i * 2 + k, j * 2 + k);
  const ComplexMatrix half = identity(2) / 2.0;
  CHECK(max_abs(brute - half) < 1e-15);
  CHECK(max_abs(partial_trace(bell, {2, 2}, {0}) - half) < 1e-15);

  const ComplexMatrix m = random_complex(rng, 3, 3);
  CHECK(max_abs(partial_trace(m, {3}, {0}) - m) == 0.0);
}

TEST_CASE("partial_trace: three factors against nested two-factor traces") {
  CounterRng rng(9, 0);
  const ComplexMatrix m = random_complex(rng, 12, 12);
  // Keep {0, 2} of dims {2, 3, 2}: reorder by hand with explicit loops.
  ComplexMatrix brute = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int c2 = 0; c2 < 2; ++c2)
          for (int b = 0; b < 3; ++b)
            brute(a * 2 + c, a2 * 2 + c2) += m((a * 3 + b) * 2 + c, (a2 * 3 + b) * 2 + c2);
  CHECK(max_abs(partial_trace(m, {2, 3, 2}, {0, 2}) - brute) < 1e-12);
  CHECK(max_abs(partial_trace(m, {2, 3, 2}, {2, 0}) - brute) < 1e-12);

  const ComplexMatrix scalar = partial_trace(m, {2, 3, 2}, {});
  CHECK(scalar.rows() == 1);
  CHECK(std::abs(scalar(0, 0) - m.trace()) < 1e-12);
}

TEST_CASE("partial_trace: trace preserved for any kept subset") {
  CounterRng rng(21, 0);
  const ComplexMatrix m = random_complex(rng, 8, 8);
  const std::vector<std::vector<std::size_t>> subsets{{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}};
  const std::vector<std::size_t> dims{2, 2, 2};
  for (const auto& keep : subsets) {
    CHECK(std::abs(partial_trace(m, dims, keep).trace() - m.trace()) < 1e-12);
  }
}

TEST_CASE("partial_trace: dimension mismatch") {
  const ComplexMatrix m = identity(6);
  CHECK_THROWS_AS(partial_trace(m, {2, 2}, {0}), DimensionError);
  CHECK_THROWS_AS(partial_trace(m, {2, 3}, {2}), DimensionError);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::Zero(2, 3), {2}, {0}), DimensionError);
}

TEST_CASE("eig_hermitian: closed forms") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.3;
  d(1, 1) = 0.7;
  const HermitianEigen e = eig_hermitian(d);
  CHECK(e.values(0) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(e.values(1) == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(std::abs(std::abs(e.vectors(0, 0)) - 1.0) < 1e-12);

  // (1/2)[[1, 1−ε], [1−ε, 1]] has eigenvalues (1 ± (1−ε))/2.
  const double eps = 0.5;
  ComplexMatrix m(2, 2);
  m << 0.5, 0.5 * (1 - eps), 0.5 * (1 - eps), 0.5;
  const HermitianEigen f = eig_hermitian(m);
  CHECK(std::abs(f.values(0) - 0.25) < 1e-14);
  CHECK(std::abs(f.values(1) - 0.75) < 1e-14);
}

TEST_CASE("eig_hermitian: reconstruction, unitarity, trace and unitary invariance") {
  CounterRng rng(3, 0);
  for (Eigen::Index d : {2, 3, 5, 16}) {
    const ComplexMatrix h = random_hermitian(rng, d);
    const HermitianEigen e = eig_hermitian(h);
    CHECK(max_abs(reconstruct(e) - h) < 1e-10);
    CHECK(max_abs(e.vectors.adjoint() * e.vectors - identity(static_cast<std::size_t>(d))) <
          kReconstructionTol);
    CHECK(std::abs(e.values.sum() - h.trace().real()) <=
          1e-10 * std::max(1.0, std::abs(h.trace().real())));
    for (Eigen::Index i = 1; i < d; ++i) CHECK(e.values(i) >= e.values(i - 1));

    const ComplexMatrix u = random_unitary(rng, d);
    const HermitianEigen g = eig_hermitian(u * h * u.adjoint());
    CHECK((g.values - e.values).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("eig_hermitian: rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.5, 0.0, 1.0;
  CHECK_THROWS_AS(eig_hermitian(m), SpectralError);
  ComplexMatrix tiny = identity(2);
  tiny(0, 1) = 1e-11;  // inside τ_herm
  CHECK_NOTHROW(eig_hermitian(tiny));
}

TEST_CASE("eig_psd: floors tiny negatives, rejects real negativity") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -5e-11;
  const HermitianEigen e = eig_psd(m);
  CHECK(e.values(0) == 0.0);
  m(1, 1) = -1e-6;
  CHECK_THROWS_AS(eig_psd(m), SpectralError);
}
