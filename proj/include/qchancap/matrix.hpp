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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qchancap {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. All states and maps are built on it.
using ComplexMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Max-norm tolerance on ‖m − m†‖ for a matrix to count as Hermitian.
inline constexpr double kHermitianTol = 1e-9;
/// Tolerance on V·diag(λ)·V† reconstruction and unitarity of V.
inline constexpr double kReconstructionTol = 1e-8;
/// Eigenvalues of a PSD matrix in [−kNegativeFloor, 0) are clamped to 0.
inline constexpr double kNegativeFloor = 1e-10;

ComplexMatrix identity(std::size_t dim);

/// |i⟩⟨j| in dimension dim.
ComplexMatrix basis_dyad(std::size_t dim, std::size_t i, std::size_t j);

/// |a⟩⟨b|.
ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Kronecker product a ⊗ b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// m ⊗ m ⊗ … ⊗ m (n factors); n == 0 gives the 1×1 identity.
ComplexMatrix tensor_power(const ComplexMatrix& m, int n);

/// Reduced matrix on the factors listed in `keep` (any order; result keeps
/// them in ascending factor order). Throws DimensionError when dims do not
/// factor m or `keep` names an out-of-range factor.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep);

/// Largest |entry|.
double max_abs(const ComplexMatrix& m);

/// ‖m − m†‖_max; m must be square.
double hermiticity_defect(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

void require_square(const ComplexMatrix& m, const char* what);

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix. Throws SpectralError when
/// ‖m − m†‖_max > kHermitianTol.
HermitianEigen eig_hermitian(const ComplexMatrix& m);

/// As eig_hermitian, for a matrix asserted to be PSD: eigenvalues in
/// [−kNegativeFloor, 0) become 0, anything more negative throws.
HermitianEigen eig_psd(const ComplexMatrix& m);

/// Σ λ_i v_i v_i†.
ComplexMatrix reconstruct(const HermitianEigen& e);

}  // namespace qchancap
