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

#include <cmath>
#include <vector>

#include "qchancap/channel.hpp"
#include "qchancap/error.hpp"
#include "test_util.hpp"

using namespace qchancap;
using namespace qchancap::testing;

namespace {

std::vector<QuantumChannel> builtins() {
  return {identity_channel(2), identity_channel(3), complete_dephasing(2),
          complete_dephasing(4), dephasing(0.3), dephasing(1.0),
          depolarizing(0.1), depolarizing(0.7), depolarizing(1.0)};
}

// Σ (K⊗I) m (K⊗I)† with the Kronecker product formed by index.
ComplexMatrix apply_on_first(const QuantumChannel& c, const ComplexMatrix& m, Eigen::Index dref) {
  const ComplexMatrix id = ComplexMatrix::Identity(dref, dref);
  ComplexMatrix out = ComplexMatrix::Zero(c.dim_out() * dref, c.dim_out() * dref);
  for (const auto& k : c.kraus()) {
    const ComplexMatrix big = kron_by_index(k, id);
    out += big * m * big.adjoint();
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(0.5 * (m + m.adjoint())));
  return es.eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("built-in channels: closed-form action") {
  ComplexMatrix m(2, 2);
  m << cplx(0.3, 0.0), cplx(0.1, 0.2), cplx(-0.4, 0.5), cplx(0.7, 0.0);

  const ComplexMatrix dephased = qchancap::apply(complete_dephasing(2), m);
  CHECK(dephased(0, 0) == m(0, 0));
  CHECK(dephased(1, 1) == m(1, 1));
  CHECK(dephased(0, 1) == cplx(0.0));
  CHECK(dephased(1, 0) == cplx(0.0));

  for (double eps : {0.0, 0.25, 0.6, 1.0}) {
    const ComplexMatrix off = qchancap::apply(dephasing(eps), basis_dyad(2, 0, 1));
    CHECK(max_abs(off - (1.0 - eps) * basis_dyad(2, 0, 1)) < 1e-15);
  }
  CHECK(max_abs(qchancap::apply(dephasing(0.0), m) - m) < 1e-15);
  CHECK(max_abs(qchancap::apply(identity_channel(2), m) - m) == 0.0);

  CounterRng rng(7, 0);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_density(rng, 2);
    for (double eta : {0.0, 0.1, 0.5, 1.0}) {
      const ComplexMatrix expected = (1.0 - eta) * rho.matrix() + eta * identity(2) / 2.0;
      CHECK(max_abs(qchancap::apply(depolarizing(eta), rho.matrix()) - expected) < 1e-12);
    }
  }
}

TEST_CASE("built-in channels: parameter and dimension validation") {
  CHECK_THROWS_AS(dephasing(-0.01), ParameterError);
  CHECK_THROWS_AS(dephasing(1.01), ParameterError);
  CHECK_THROWS_AS(depolarizing(1.5), ParameterError);
  CHECK_THROWS_AS(depolarizing(std::nan("")), ParameterError);
  CHECK_THROWS_AS(identity_channel(1), ParameterError);
  CHECK_THROWS_AS(complete_dephasing(0), ParameterError);
  CHECK_THROWS_AS(qchancap::apply(depolarizing(0.1), identity(3)), DimensionError);
}

TEST_CASE("QuantumChannel: Kraus validation") {
  CHECK_THROWS_AS(QuantumChannel({}), ChannelError);
  CHECK_THROWS_AS(QuantumChannel({0.9 * identity(2)}), ChannelError);
  CHECK_THROWS_AS(QuantumChannel({identity(2), ComplexMatrix::Zero(3, 3)}), ChannelError);
  ComplexMatrix bad = identity(2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(QuantumChannel({bad}), ChannelError);

  // Amplitude damping: no Kraus operator is unitary, the sum is still trace preserving.
  const double g = 0.3;
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2), k1 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - g);
  k1(0, 1) = std::sqrt(g);
  const QuantumChannel damp({k0, k1});
  CHECK(trace_preservation_defect(damp.kraus()) < 1e-15);
  // Discarding the system: a 2→1 channel with rectangular Kraus operators.
  ComplexMatrix r0(1, 2), r1(1, 2);
  r0 << 1.0, 0.0;
  r1 << 0.0, 1.0;
  const QuantumChannel trace_map({r0, r1});
  CHECK(trace_map.dim_in() == 2);
  CHECK(trace_map.dim_out() == 1);
}

TEST_CASE("apply: trace preservation and positivity on random states") {
  CounterRng rng(11, 0);
  for (const QuantumChannel& c : builtins()) {
    for (int t = 0; t < 100; ++t) {
      const DensityMatrix rho = random_density(rng, static_cast<Eigen::Index>(c.dim_in()));
      const ComplexMatrix out = qchancap::apply(c, rho.matrix());
      CHECK(std::abs(out.trace() - cplx(1.0)) < 1e-10);
      CHECK(min_eigenvalue(out) >= -1e-9);
    }
  }
}

TEST_CASE("apply: linearity on arbitrary matrices") {
  CounterRng rng(13, 0);
  for (const QuantumChannel& c : builtins()) {
    const auto d = static_cast<Eigen::Index>(c.dim_in());
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix a = random_complex(rng, d, d);
      const ComplexMatrix b = random_complex(rng, d, d);
      const cplx alpha = rng.complex_normal(), beta = rng.complex_normal();
      const ComplexMatrix lhs = qchancap::apply(c, alpha * a + beta * b);
      const ComplexMatrix rhs = alpha * qchancap::apply(c, a) + beta * qchancap::apply(c, b);
      CHECK(max_abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("choi: matches d·joint_state at I/d and superoperator equality") {
  for (const QuantumChannel& c : builtins()) {
    const std::size_t d = c.dim_in();
    const ComplexMatrix choi = c.choi();
    // Σ_ij 𝒮(|i⟩⟨j|) ⊗ |i⟩⟨j| by direct summation.
    ComplexMatrix expected = ComplexMatrix::Zero(choi.rows(), choi.cols());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        expected += kron_by_index(qchancap::apply(c, basis_dyad(d, i, j)), basis_dyad(d, i, j));
    CHECK(max_abs(choi - expected) < 1e-14);
    CHECK(min_eigenvalue(choi) >= -1e-12);

    const DensityMatrix joint = joint_state(c, DensityMatrix::maximally_mixed(d));
    CHECK(max_abs(static_cast<double>(d) * joint.matrix() - choi) < 1e-12);
    const auto dout = static_cast<Eigen::Index>(c.dim_out());
    CHECK(max_abs(trace_out_first(joint.matrix(), dout, d) - identity(d) / double(d)) < 1e-12);
  }

  // Same map, different Kraus sets.
  const double eps = 0.4;
  const QuantumChannel alt({std::sqrt(1.0 - eps / 2.0) * identity(2), std::sqrt(eps / 2.0) * pauli_z()});
  CHECK(same_superoperator(dephasing(eps), alt));
  CHECK_FALSE(same_superoperator(dephasing(eps), dephasing(0.5)));
  CHECK_FALSE(same_superoperator(dephasing(eps), identity_channel(3)));
}

TEST_CASE("joint_state: closed forms at I/2") {
  const DensityMatrix half = DensityMatrix::maximally_mixed(2);
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix phi_plus = outer(bell, bell);

  CHECK(max_abs(joint_state(identity_channel(2), half).matrix() - phi_plus) < 1e-12);

  for (double eta : {0.0, 0.1, 0.2523863888, 0.8, 1.0}) {
    const ComplexMatrix expected = (1.0 - eta) * phi_plus + eta * identity(4) / 4.0;
    CHECK(max_abs(joint_state(depolarizing(eta), half).matrix() - expected) < 1e-12);
  }

  for (double eps : {0.0, 0.3, 0.9}) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        Eigen::MatrixXcd(joint_state(dephasing(eps), half).matrix()));
    const Eigen::VectorXd ev = es.eigenvalues();
    CHECK(std::abs(ev(0)) < 1e-12);
    CHECK(std::abs(ev(1)) < 1e-12);
    CHECK(std::abs(ev(2) - eps / 2.0) < 1e-12);
    CHECK(std::abs(ev(3) - (1.0 - eps / 2.0)) < 1e-12);
  }

  const ComplexMatrix diag_pair = 0.5 * (kron_by_index(basis_dyad(2, 0, 0), basis_dyad(2, 0, 0)) +
                                         kron_by_index(basis_dyad(2, 1, 1), basis_dyad(2, 1, 1)));
  CHECK(max_abs(joint_state(complete_dephasing(2), half).matrix() - diag_pair) < 1e-12);
  CHECK(max_abs(io_state(complete_dephasing(2), half).matrix() - diag_pair) < 1e-12);
  CHECK(max_abs(io_state(identity_channel(2), half).matrix() - diag_pair) < 1e-12);
}

TEST_CASE("joint_state and io_state: marginals and dephasing relation on random inputs") {
  CounterRng rng(17, 0);
  for (const QuantumChannel& c : builtins()) {
    const auto d = static_cast<Eigen::Index>(c.dim_in());
    const auto dout = static_cast<Eigen::Index>(c.dim_out());
    for (int t = 0; t < 10; ++t) {
      const DensityMatrix rho = random_density(rng, d);
      const ComplexMatrix joint = joint_state(c, rho).matrix();
      CHECK(max_abs(joint - apply_on_first(c, purify(rho).projector(), d)) < 1e-10);
      CHECK(max_abs(trace_out_second(joint, dout, d) - qchancap::apply(c, rho.matrix())) < 1e-9);
      CHECK(max_abs(trace_out_first(joint, dout, d) - rho.matrix()) < 1e-9);
      CHECK(min_eigenvalue(joint) >= -1e-9);

      // Dephase the reference factor in ρ's eigenbasis.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(rho.matrix()));
      ComplexMatrix dephased = ComplexMatrix::Zero(joint.rows(), joint.cols());
      for (Eigen::Index i = 0; i < d; ++i) {
        const ComplexVector v = es.eigenvectors().col(i);
        const ComplexMatrix p = kron_by_index(ComplexMatrix::Identity(dout, dout), outer(v, v));
        dephased += p * joint * p;
      }
      const ComplexMatrix io = io_state(c, rho).matrix();
      CHECK(max_abs(io - dephased) < 1e-10);
      CHECK(max_abs(trace_out_first(io, dout, d) - rho.matrix()) < 1e-9);
    }
  }
}

TEST_CASE("joint_state: dimension checks and size cap") {
  CHECK_THROWS_AS(joint_state(depolarizing(0.1), DensityMatrix::maximally_mixed(3)),
                  DimensionError);
  CHECK_THROWS_AS(io_state(depolarizing(0.1), DensityMatrix::maximally_mixed(4)), DimensionError);
  CHECK_THROWS_AS(joint_state(identity_channel(65), DensityMatrix::maximally_mixed(65)),
                  SizeCapError);
}

TEST_CASE("apply_product: matches explicit Kraus tensor products") {
  CounterRng rng(19, 0);
  const QuantumChannel c = depolarizing(0.35);
  for (int n = 1; n <= 3; ++n) {
    const auto dim = static_cast<Eigen::Index>(1) << n;
    const DensityMatrix rho = random_density(rng, dim);
    ComplexMatrix expected = ComplexMatrix::Zero(dim, dim);
    // Σ over Kraus index strings of (K_a ⊗ K_b ⊗ …) ρ (…)†.
    const std::size_t nk = c.kraus().size();
    std::size_t strings = 1;
    for (int s = 0; s < n; ++s) strings *= nk;
    for (std::size_t idx = 0; idx < strings; ++idx) {
      ComplexMatrix k = ComplexMatrix::Identity(1, 1);
      std::size_t rest = idx;
      for (int s = 0; s < n; ++s) {
        k = kron_by_index(k, c.kraus()[rest % nk]);
        rest /= nk;
      }
      expected += k * rho.matrix() * k.adjoint();
    }
    CHECK(max_abs(apply_product(c, rho, n).matrix() - expected) < 1e-12);
  }
  const DensityMatrix one = random_density(rng, 2);
  CHECK(max_abs(apply_product(c, one, 1).matrix() - qchancap::apply(c, one.matrix())) < 1e-15);
}

TEST_CASE("apply_product: product inputs factorize, identity is a no-op") {
  CounterRng rng(23, 0);
  for (int n = 2; n <= 4; ++n) {
    std::vector<DensityMatrix> sites;
    ComplexMatrix in = ComplexMatrix::Identity(1, 1);
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    const QuantumChannel c = depolarizing(0.2 * n);
    for (int s = 0; s < n; ++s) {
      const DensityMatrix r = random_density(rng, 2);
      in = kron_by_index(in, r.matrix());
      out = kron_by_index(out, qchancap::apply(c, r.matrix()));
    }
    CHECK(max_abs(apply_product(c, in, n) - out) < 1e-9);
    CHECK(max_abs(apply_product(identity_channel(2), in, n) - in) < 1e-15);
  }
}

TEST_CASE("apply_product: rectangular channels and errors") {
  ComplexMatrix r0(1, 2), r1(1, 2);
  r0 << 1.0, 0.0;
  r1 << 0.0, 1.0;
  const QuantumChannel discard({r0, r1});
  CounterRng rng(29, 0);
  const DensityMatrix rho = random_density(rng, 4);
  const ComplexMatrix out = apply_product(discard, rho.matrix(), 2);
  CHECK(out.rows() == 1);
  CHECK(std::abs(out(0, 0) - cplx(1.0)) < 1e-12);

  CHECK_THROWS_AS(apply_product(depolarizing(0.1), rho.matrix(), 3), DimensionError);
  CHECK_THROWS_AS(apply_product(depolarizing(0.1), rho.matrix(), 0), ParameterError);
  CHECK_THROWS_AS(apply_product(depolarizing(0.1), identity(512), 9), SizeCapError);
  CHECK_NOTHROW(apply_product(depolarizing(0.1), identity(256) / 256.0, 8));
}
