// Copyright 2026 The DGSP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dgsp/spectrum.h"

#include <cmath>

#include "dgsp/errors.h"

namespace dgsp {

namespace {

constexpr int kAlignSweeps = 4;

void RequireLength(const SpectralBasis& basis, Eigen::Index n,
                   const char* what) {
  if (n != basis.size()) {
    throw DimensionError(std::string(what) + ": expected size " +
                         std::to_string(basis.size()) + ", got " +
                         std::to_string(n));
  }
}

bool SingleBlock(const std::vector<std::vector<int>>& blocks) {
  return blocks.size() == 1;
}

// Rotates the columns `block` of `target` within their span towards the
// same-position columns of `reference`.
void ProcrustesBlock(CMatrix& target, const CMatrix& reference,
                     const std::vector<int>& block) {
  const int m = static_cast<int>(block.size());
  CMatrix a(target.rows(), m);
  CMatrix b(reference.rows(), m);
  for (int k = 0; k < m; ++k) {
    a.col(k) = target.col(block[k]);
    b.col(k) = reference.col(block[k]);
  }
  const CMatrix cross = a.adjoint() * b;
  if (cross.norm() == 0.0) return;
  const CMatrix rotated = a * NearestUnitary(cross);
  for (int k = 0; k < m; ++k) target.col(block[k]) = rotated.col(k);
}

}  // namespace

SpectralBasis BuildBasis(const Matrix& s, const BasisOptions& options) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    throw DimensionError("shift operator must be square and non-empty");
  }
  SpectralBasis basis;
  basis.polar = PolarDecompose(s, options.tol);
  EigenPairs u = EigUnitary(basis.polar.orthogonal.cast<Complex>(), options.tol);
  EigenPairs p = EigHermitian(basis.polar.positive.cast<Complex>(), options.tol);
  basis.u_vectors = std::move(u.vectors);
  basis.u_values = std::move(u.values);
  basis.p_vectors = std::move(p.vectors);
  basis.p_values = p.values.real();
  const double gap = options.tol.degeneracy *
                     std::max(1.0, basis.p_values.cwiseAbs().maxCoeff());
  basis.derogatory =
      !IsNonDerogatory(basis.u_values, options.tol.degeneracy) ||
      !IsNonDerogatory(basis.p_values.cast<Complex>(), gap);
  if (options.align) basis = AlignBases(std::move(basis), options.tol);
  return basis;
}

void AlignEigenbases(CMatrix& first,
                     const std::vector<std::vector<int>>& first_blocks,
                     CMatrix& second,
                     const std::vector<std::vector<int>>& second_blocks,
                     bool first_fixed) {
  if (SingleBlock(first_blocks) && !first_fixed) {
    first = second;
    return;
  }
  if (SingleBlock(second_blocks)) {
    second = first;
    return;
  }
  for (int sweep = 0; sweep < kAlignSweeps; ++sweep) {
    if (!first_fixed) {
      for (const auto& block : first_blocks) ProcrustesBlock(first, second, block);
    }
    for (const auto& block : second_blocks) ProcrustesBlock(second, first, block);
  }
}

SpectralBasis AlignBases(SpectralBasis basis, const Tolerances& tol) {
  const auto u_blocks =
      EigenvalueBlocks(basis.u_values, EigenKind::kUnitary, tol.degeneracy);
  const auto p_blocks = EigenvalueBlocks(basis.p_values.cast<Complex>(),
                                         EigenKind::kHermitian, tol.degeneracy);
  SpectralBasis candidate = basis;
  AlignEigenbases(candidate.u_vectors, u_blocks, candidate.p_vectors, p_blocks,
                  /*first_fixed=*/false);
  candidate.aligned = true;
  if (BasisDistance(candidate) > BasisDistance(basis)) {
    basis.aligned = true;
    return basis;
  }
  return candidate;
}

double BasisDistance(const SpectralBasis& basis) {
  return OperatorNorm(CMatrix(basis.u_vectors - basis.p_vectors));
}

CMatrix Coupling(const SpectralBasis& basis) {
  return (basis.u_vectors.adjoint() * basis.p_vectors).transpose();
}

SpectralMatrix Forward(const SpectralBasis& basis, const CVector& f) {
  RequireLength(basis, f.size(), "forward");
  const int n = basis.size();
  SpectralMatrix a{CMatrix(n, n)};
  for (int i = 0; i < n; ++i) {
    const auto p_mode = basis.p_vectors.col(i);
    const Complex projection = p_mode.dot(f);
    for (int j = 0; j < n; ++j) {
      a.coeffs(i, j) = projection * basis.u_vectors.col(j).dot(p_mode);
    }
  }
  return a;
}

SpectralMatrix Forward(const SpectralBasis& basis, const Vector& f) {
  return Forward(basis, CVector(f.cast<Complex>()));
}

SpectralMatrix ForwardMatrixForm(const SpectralBasis& basis, const CVector& f) {
  RequireLength(basis, f.size(), "forward_matrix_form");
  const CVector projection = basis.p_vectors.adjoint() * f;
  const CMatrix m =
      basis.u_vectors.adjoint() * basis.p_vectors * projection.asDiagonal();
  return {m.transpose()};
}

CVector Inverse(const SpectralBasis& basis, const SpectralMatrix& a) {
  RequireLength(basis, a.coeffs.rows(), "inverse");
  RequireLength(basis, a.coeffs.cols(), "inverse");
  return basis.u_vectors * a.coeffs.colwise().sum().transpose();
}

CVector GftClassical(const CMatrix& v, const CVector& f,
                     const Tolerances& tol) {
  if (v.rows() != v.cols() || v.rows() != f.size()) {
    throw DimensionError("gft_classical: basis and signal sizes differ");
  }
  if (UnitaryDefect(v) > tol.unitary) {
    throw PreconditionError("gft_classical: basis is not unitary");
  }
  return v.adjoint() * f;
}

double DiagonalEnergyFraction(const SpectralMatrix& a) {
  const double total = a.coeffs.squaredNorm();
  if (total == 0.0) {
    throw PreconditionError("diagonal energy fraction of a zero spectrum");
  }
  return a.coeffs.diagonal().squaredNorm() / total;
}

double OffDiagonalNorm(const SpectralMatrix& a) {
  double sum = 0.0;
  for (int j = 0; j < a.coeffs.cols(); ++j) {
    for (int i = 0; i < a.coeffs.rows(); ++i) {
      if (i != j) sum += std::norm(a.coeffs(i, j));
    }
  }
  return std::sqrt(sum);
}

SpectralBasis MatchPhases(const SpectralBasis& reference, SpectralBasis basis) {
  auto match = [](CMatrix& target, const CMatrix& ref) {
    for (int k = 0; k < target.cols(); ++k) {
      const Complex overlap = target.col(k).dot(ref.col(k));
      if (std::abs(overlap) > 0.0) target.col(k) *= overlap / std::abs(overlap);
    }
  };
  match(basis.u_vectors, reference.u_vectors);
  match(basis.p_vectors, reference.p_vectors);
  return basis;
}

}  // namespace dgsp
