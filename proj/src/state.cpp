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

#include "qchancap/state.hpp"

#include <cmath>
#include <string>

#include "qchancap/error.hpp"

namespace qchancap {

namespace {
constexpr double kNormTol = 1e-10;
constexpr double kTraceTol = 1e-10;

void check_trace(const ComplexMatrix& m) {
  const cplx tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTol || std::abs(tr.imag()) > kTraceTol) {
    throw NormalizationError("density matrix trace is " + std::to_string(tr.real()) +
                             ", expected 1");
  }
}
}  // namespace

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw DimensionError("PureState: empty amplitude vector");
  const double norm2 = amplitudes_.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTol) {
    throw NormalizationError("PureState: squared norm " + std::to_string(norm2) +
                             " is not 1");
  }
}

PureState PureState::normalized(ComplexVector v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw NormalizationError("cannot normalize a zero vector");
  v /= n;
  return PureState(std::move(v));
}

PureState PureState::basis(std::size_t dim, std::size_t i) {
  if (i >= dim) throw DimensionError("PureState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(ComplexMatrix m, Unchecked) : matrix_(std::move(m)) {}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  require_square(matrix_, "DensityMatrix");
  eig_psd(matrix_);  // throws on non-Hermitian or negative spectrum
  check_trace(matrix_);
}

DensityMatrix DensityMatrix::from_trusted(ComplexMatrix m) {
  require_square(m, "DensityMatrix");
  if (!all_finite(m)) throw SpectralError("DensityMatrix: non-finite entry");
  if (hermiticity_defect(m) > kHermitianTol) {
    throw SpectralError("DensityMatrix: matrix is not Hermitian");
  }
  check_trace(m);
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(sym), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw DimensionError("maximally_mixed: zero dimension");
  return DensityMatrix(identity(dim) / static_cast<double>(dim), Unchecked{});
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector(), Unchecked{});
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probs) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(probs.size()),
                                        static_cast<Eigen::Index>(probs.size()));
  for (std::size_t i = 0; i < probs.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = probs[i];
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_trusted(tensor(a.matrix(), b.matrix()));
}

std::size_t Ensemble::dim() const {
  return members.empty() ? 0 : static_cast<std::size_t>(members.front().state.size());
}

double Ensemble::weight() const {
  double w = 0.0;
  for (const auto& m : members) w += m.probability * m.state.squaredNorm();
  return w;
}

void Ensemble::validate() const {
  if (members.empty()) throw DimensionError("ensemble has no members");
  const auto d = members.front().state.size();
  if (d == 0) throw DimensionError("ensemble member has dimension 0");
  for (const auto& m : members) {
    if (m.state.size() != d) throw DimensionError("ensemble members differ in dimension");
    if (m.probability < 0.0 || !std::isfinite(m.probability)) {
      throw ParameterError("ensemble probability must be a finite non-negative number");
    }
  }
  const double w = weight();
  if (std::abs(w - 1.0) > kNormTol) {
    throw NormalizationError("ensemble weight Σ p⟨ψ|ψ⟩ is " + std::to_string(w) +
                             ", expected 1");
  }
}

ComplexMatrix ensemble_operator(const Ensemble& e) {
  if (e.members.empty()) throw DimensionError("ensemble has no members");
  const auto d = static_cast<Eigen::Index>(e.dim());
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (const auto& m : e.members) {
    if (m.state.size() != d) throw DimensionError("ensemble members differ in dimension");
    rho += m.probability * outer(m.state, m.state);
  }
  return rho;
}

DensityMatrix from_ensemble(const Ensemble& e) {
  e.validate();
  return DensityMatrix::from_trusted(ensemble_operator(e));
}

cplx ensemble_inner(const Ensemble& a, const Ensemble& b) {
  if (a.members.size() != b.members.size()) {
    throw DimensionError("ensemble_inner: member counts differ");
  }
  cplx sum = 0.0;
  for (std::size_t j = 0; j < a.members.size(); ++j) {
    const auto& x = a.members[j];
    const auto& y = b.members[j];
    if (x.state.size() != y.state.size()) {
      throw DimensionError("ensemble_inner: member dimensions differ");
    }
    sum += std::sqrt(x.probability * y.probability) * x.state.dot(y.state);
  }
  return sum;
}

Ensemble superpose_ensembles(std::span<const cplx> coeffs,
                             std::span<const Ensemble> ensembles) {
  if (coeffs.size() != ensembles.size() || ensembles.empty()) {
    throw DimensionError("superpose_ensembles: need one coefficient per ensemble");
  }
  const Ensemble& first = ensembles.front();
  const std::size_t count = first.members.size();
  const std::size_t dim = first.dim();
  for (const auto& e : ensembles) {
    if (e.members.size() != count) {
      throw DimensionError("superpose_ensembles: member counts differ");
    }
    for (std::size_t j = 0; j < count; ++j) {
      if (static_cast<std::size_t>(e.members[j].state.size()) != dim) {
        throw DimensionError("superpose_ensembles: member dimensions differ");
      }
      if (std::abs(e.members[j].probability - first.members[j].probability) > 1e-12) {
        throw ParameterError(
            "superpose_ensembles: ensembles must share one probability list");
      }
    }
  }

  Ensemble out;
  out.members.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < ensembles.size(); ++i) {
      v += coeffs[i] * ensembles[i].members[j].state;
    }
    out.members.push_back({std::move(v), first.members[j].probability});
  }
  return out;
}

PureState purify(const DensityMatrix& rho) {
  const HermitianEigen e = eig_psd(rho.matrix());
  const auto d = static_cast<Eigen::Index>(rho.dim());
  ComplexVector phi = ComplexVector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double p = e.values(i);
    if (p <= 0.0) continue;
    const ComplexVector v = e.vectors.col(i);
    // |v⟩⊗|v⟩: component (a·d + b) = v_a v_b.
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        phi(a * d + b) += std::sqrt(p) * v(a) * v(b);
      }
    }
  }
  return PureState::normalized(std::move(phi));
}

}  // namespace qchancap
