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

#include "qchancap/info.hpp"

#include <algorithm>
#include <cmath>

#include "qchancap/error.hpp"

namespace qchancap {

double shannon_entropy(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs) {
    if (p > kEntropyZeroFloor) s -= p * std::log2(p);
  }
  return std::max(0.0, s);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const HermitianEigen e = eig_psd(rho.matrix());
  const double s = shannon_entropy(std::span<const double>(e.values.data(),
                                                           static_cast<std::size_t>(e.values.size())));
  return std::min(s, std::log2(static_cast<double>(rho.dim())));
}

double purity(const DensityMatrix& rho) {
  // tr ρ² = Σ |ρ_ij|² for Hermitian ρ.
  return rho.matrix().squaredNorm();
}

InfoReport coherent_information(const QuantumChannel& c, const DensityMatrix& rho_in) {
  if (c.dim_in() != rho_in.dim()) {
    throw DimensionError("coherent_information: channel and source dimensions differ");
  }
  InfoReport r;
  r.s_in = von_neumann_entropy(rho_in);
  r.s_out = von_neumann_entropy(qchancap::apply(c, rho_in));
  r.s_joint = von_neumann_entropy(joint_state(c, rho_in));
  r.i_q = std::max(0.0, r.s_out - r.s_joint);
  return r;
}

double purity_identity_rhs(const QuantumChannel& c, const DensityMatrix& rho_in, int n) {
  if (n < 0) throw ParameterError("purity_identity_rhs: n must be non-negative");
  if (c.dim_in() != rho_in.dim()) {
    throw DimensionError("purity_identity_rhs: channel and source dimensions differ");
  }
  const double p_out = purity(qchancap::apply(c, rho_in));
  const double p_joint = purity(joint_state(c, rho_in));
  const double p_io = purity(io_state(c, rho_in));
  return std::pow(p_out, n) + std::pow(p_joint, n) - std::pow(p_io, n);
}

}  // namespace qchancap
