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

#include "qchancap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchancap/error.hpp"

namespace qchancap {

namespace {

std::size_t checked_power(std::size_t base, int n, std::size_t cap, const char* what) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) {
    p *= base;
    if (p > cap) {
      throw SizeCapError(std::string(what) + ": dimension " + std::to_string(base) + "^" +
                         std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
    }
  }
  return p;
}

// (I_left ⊗ op ⊗ I_right) · m, where op is out×in and m has
// left·in·right rows.
ComplexMatrix act_on_site_rows(const ComplexMatrix& m, const ComplexMatrix& op,
                               Eigen::Index left, Eigen::Index right) {
  const Eigen::Index in = op.cols(), out = op.rows();
  ComplexMatrix result = ComplexMatrix::Zero(left * out * right, m.cols());
  for (Eigen::Index a = 0; a < left; ++a) {
    for (Eigen::Index o = 0; o < out; ++o) {
      for (Eigen::Index i = 0; i < in; ++i) {
        const cplx k = op(o, i);
        if (k == cplx(0.0)) continue;
        for (Eigen::Index b = 0; b < right; ++b) {
          result.row((a * out + o) * right + b) += k * m.row((a * in + i) * right + b);
        }
      }
    }
  }
  return result;
}

void check_input_dim(const QuantumChannel& c, std::size_t dim, const char* what) {
  if (dim != c.dim_in()) {
    throw DimensionError(std::string(what) + ": channel expects dimension " +
                         std::to_string(c.dim_in()) + ", got " + std::to_string(dim));
  }
}

}  // namespace

double trace_preservation_defect(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) return 1.0;
  const Eigen::Index din = kraus.front().cols();
  ComplexMatrix sum = ComplexMatrix::Zero(din, din);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  return max_abs(sum - ComplexMatrix::Identity(din, din));
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ChannelError("channel needs at least one Kraus operator");
  const Eigen::Index rows = kraus_.front().rows(), cols = kraus_.front().cols();
  if (rows == 0 || cols == 0) throw ChannelError("Kraus operator has zero size");
  for (const auto& k : kraus_) {
    if (k.rows() != rows || k.cols() != cols) {
      throw ChannelError("Kraus operators have inconsistent shapes");
    }
    if (!all_finite(k)) throw ChannelError("Kraus operator has a non-finite entry");
  }
  const double defect = trace_preservation_defect(kraus_);
  if (defect > kTracePreservingTol) {
    throw ChannelError("Kraus set is not trace preserving: ‖ΣK†K − I‖ = " +
                       std::to_string(defect));
  }
  dim_in_ = static_cast<std::size_t>(cols);
  dim_out_ = static_cast<std::size_t>(rows);
}

ComplexMatrix QuantumChannel::choi() const {
  const auto din = static_cast<Eigen::Index>(dim_in_);
  const auto dout = static_cast<Eigen::Index>(dim_out_);
  ComplexMatrix out = ComplexMatrix::Zero(dout * din, dout * din);
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      const ComplexMatrix image = qchancap::apply(*this, basis_dyad(dim_in_, i, j));
      // image ⊗ |i⟩⟨j|
      for (Eigen::Index r = 0; r < dout; ++r) {
        for (Eigen::Index s = 0; s < dout; ++s) out(r * din + i, s * din + j) = image(r, s);
      }
    }
  }
  return out;
}

bool same_superoperator(const QuantumChannel& a, const QuantumChannel& b, double tol) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) return false;
  return max_abs(a.choi() - b.choi()) <= tol;
}

QuantumChannel identity_channel(std::size_t dim) {
  if (dim < 2) throw ParameterError("identity_channel: dimension must be at least 2");
  return QuantumChannel({identity(dim)});
}

QuantumChannel complete_dephasing(std::size_t dim) {
  if (dim < 2) throw ParameterError("complete_dephasing: dimension must be at least 2");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) kraus.push_back(basis_dyad(dim, i, i));
  return QuantumChannel(std::move(kraus));
}

QuantumChannel dephasing(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ParameterError("dephasing: epsilon must lie in [0, 1]");
  }
  return QuantumChannel({std::sqrt(1.0 - epsilon) * identity(2),
                         std::sqrt(epsilon) * basis_dyad(2, 0, 0),
                         std::sqrt(epsilon) * basis_dyad(2, 1, 1)});
}

QuantumChannel depolarizing(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw ParameterError("depolarizing: eta must lie in [0, 1]");
  }
  const double w = std::sqrt(eta / 4.0);
  return QuantumChannel({std::sqrt(1.0 - 3.0 * eta / 4.0) * identity(2), w * pauli_x(),
                         w * pauli_y(), w * pauli_z()});
}

ComplexMatrix apply(const QuantumChannel& c, const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("apply: input must be square");
  check_input_dim(c, static_cast<std::size_t>(m.rows()), "apply");
  const auto dout = static_cast<Eigen::Index>(c.dim_out());
  ComplexMatrix out = ComplexMatrix::Zero(dout, dout);
  for (const auto& k : c.kraus()) out += k * m * k.adjoint();
  return out;
}

DensityMatrix apply(const QuantumChannel& c, const DensityMatrix& rho) {
  return DensityMatrix::from_trusted(qchancap::apply(c, rho.matrix()));
}

DensityMatrix joint_state(const QuantumChannel& c, const DensityMatrix& rho_in) {
  check_input_dim(c, rho_in.dim(), "joint_state");
  if (c.dim_out() * c.dim_in() > kMaxJointDim) {
    throw SizeCapError("joint_state: joint dimension exceeds " + std::to_string(kMaxJointDim));
  }
  const PureState phi = purify(rho_in);
  const ComplexMatrix proj = phi.projector();
  const auto ref = static_cast<Eigen::Index>(c.dim_in());
  const auto dout = static_cast<Eigen::Index>(c.dim_out());
  ComplexMatrix out = ComplexMatrix::Zero(dout * ref, dout * ref);
  for (const auto& k : c.kraus()) {
    const ComplexMatrix left = act_on_site_rows(proj, k, 1, ref);
    const ComplexMatrix both = act_on_site_rows(left.adjoint(), k, 1, ref).adjoint();
    out += both;
  }
  return DensityMatrix::from_trusted(std::move(out));
}

DensityMatrix io_state(const QuantumChannel& c, const DensityMatrix& rho_in) {
  check_input_dim(c, rho_in.dim(), "io_state");
  if (c.dim_out() * c.dim_in() > kMaxJointDim) {
    throw SizeCapError("io_state: joint dimension exceeds " + std::to_string(kMaxJointDim));
  }
  const HermitianEigen e = eig_psd(rho_in.matrix());
  const auto din = static_cast<Eigen::Index>(c.dim_in());
  const auto dout = static_cast<Eigen::Index>(c.dim_out());
  ComplexMatrix out = ComplexMatrix::Zero(dout * din, dout * din);
  for (Eigen::Index i = 0; i < din; ++i) {
    const double p = e.values(i);
    if (p <= 0.0) continue;
    const ComplexVector v = e.vectors.col(i);
    const ComplexMatrix proj = outer(v, v);
    out += p * tensor(qchancap::apply(c, proj), proj);
  }
  return DensityMatrix::from_trusted(std::move(out));
}

ComplexMatrix apply_product(const QuantumChannel& c, const ComplexMatrix& m, int n) {
  if (n < 1) throw ParameterError("apply_product: n must be positive");
  const std::size_t dmax = std::max(c.dim_in(), c.dim_out());
  checked_power(dmax, n, kMaxProductDim, "apply_product");
  const std::size_t din_total = checked_power(c.dim_in(), n, kMaxProductDim, "apply_product");
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != din_total) {
    throw DimensionError("apply_product: input must be " + std::to_string(din_total) +
                         "x" + std::to_string(din_total));
  }

  const auto din = static_cast<Eigen::Index>(c.dim_in());
  const auto dout = static_cast<Eigen::Index>(c.dim_out());
  ComplexMatrix current = m;
  // Sites before `site` already carry dim_out, sites after still dim_in.
  for (int site = 0; site < n; ++site) {
    Eigen::Index left = 1, right = 1;
    for (int s = 0; s < site; ++s) left *= dout;
    for (int s = site + 1; s < n; ++s) right *= din;
    ComplexMatrix next = ComplexMatrix::Zero(left * dout * right, left * dout * right);
    for (const auto& k : c.kraus()) {
      const ComplexMatrix rows_done = act_on_site_rows(current, k, left, right);
      next += act_on_site_rows(rows_done.adjoint(), k, left, right).adjoint();
    }
    current = std::move(next);
  }
  return current;
}

DensityMatrix apply_product(const QuantumChannel& c, const DensityMatrix& rho, int n) {
  return DensityMatrix::from_trusted(apply_product(c, rho.matrix(), n));
}

}  // namespace qchancap
