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

#include "qchancap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qchancap/error.hpp"

namespace qchancap {

ComplexMatrix identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return ComplexMatrix::Identity(d, d);
}

ComplexMatrix basis_dyad(std::size_t dim, std::size_t i, std::size_t j) {
  if (i >= dim || j >= dim) throw DimensionError("basis_dyad: index out of range");
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return m;
}

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
  return a * b.adjoint();
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index br = b.rows(), bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor_power(const ComplexMatrix& m, int n) {
  if (n < 0) throw ParameterError("tensor_power: negative exponent");
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = tensor(out, m);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  require_square(m, "partial_trace");
  std::size_t total = 1;
  for (auto d : dims) {
    if (d == 0) throw DimensionError("partial_trace: zero factor dimension");
    total *= d;
  }
  if (total != static_cast<std::size_t>(m.rows())) {
    throw DimensionError("partial_trace: factor dims multiply to " +
                         std::to_string(total) + ", matrix has " +
                         std::to_string(m.rows()) + " rows");
  }
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size()) throw DimensionError("partial_trace: keep index out of range");
    kept[k] = true;
  }

  // Split each full index into (kept-subsystem index, traced-subsystem index).
  std::vector<std::size_t> kept_idx(total), traced_idx(total);
  std::size_t kept_dim = 1;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (kept[f]) kept_dim *= dims[f];
  }
  for (std::size_t full = 0; full < total; ++full) {
    std::size_t rem = full, stride_k = 1, stride_t = 1, ki = 0, ti = 0;
    for (std::size_t f = dims.size(); f-- > 0;) {
      const std::size_t digit = rem % dims[f];
      rem /= dims[f];
      if (kept[f]) {
        ki += digit * stride_k;
        stride_k *= dims[f];
      } else {
        ti += digit * stride_t;
        stride_t *= dims[f];
      }
    }
    kept_idx[full] = ki;
    traced_idx[full] = ti;
  }

  const auto kd = static_cast<Eigen::Index>(kept_dim);
  ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
  for (std::size_t r = 0; r < total; ++r) {
    for (std::size_t c = 0; c < total; ++c) {
      if (traced_idx[r] != traced_idx[c]) continue;
      out(static_cast<Eigen::Index>(kept_idx[r]),
          static_cast<Eigen::Index>(kept_idx[c])) +=
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(m, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity_defect");
  return max_abs(m - m.adjoint());
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const cplx z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

HermitianEigen eig_hermitian(const ComplexMatrix& m) {
  require_square(m, "eig_hermitian");
  if (!all_finite(m)) throw SpectralError("eig_hermitian: non-finite entry");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    throw SpectralError("eig_hermitian: matrix is not Hermitian (defect " +
                        std::to_string(defect) + ")");
  }
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw SpectralError("eig_hermitian: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianEigen eig_psd(const ComplexMatrix& m) {
  HermitianEigen e = eig_hermitian(m);
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    double& v = e.values(i);
    if (v < -kNegativeFloor) {
      throw SpectralError("eig_psd: eigenvalue " + std::to_string(v) +
                          " below the PSD floor");
    }
    if (v < 0.0) v = 0.0;
  }
  return e;
}

ComplexMatrix reconstruct(const HermitianEigen& e) {
  return e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint();
}

}  // namespace qchancap
