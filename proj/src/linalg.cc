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

#include "dgsp/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dgsp/errors.h"

namespace dgsp {

namespace {

void RequireFinite(const auto& m, const char* what) {
  if (!m.allFinite()) throw NumericalError(std::string(what) + ": non-finite entries");
}

void RequireSquare(const auto& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix must be square");
  }
}

// Orders columns by `key`, breaking near-ties by original index.
std::vector<int> OrderByKey(const std::vector<double>& key, double tie) {
  std::vector<int> order(key.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key[a] < key[b]; });
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() && key[order[end]] - key[order[end - 1]] <= tie) {
      ++end;
    }
    std::sort(order.begin() + start, order.begin() + end);
    start = end;
  }
  return order;
}

EigenPairs Permute(const CMatrix& vectors, const CVector& values,
                   const std::vector<int>& order, EigenKind kind) {
  EigenPairs out;
  out.kind = kind;
  out.vectors.resize(vectors.rows(), vectors.cols());
  out.values.resize(values.size());
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    out.vectors.col(k) = vectors.col(order[k]);
    out.values(k) = values(order[k]);
  }
  return out;
}

}  // namespace

SvdFactors Svd(const Matrix& s) {
  RequireSquare(s, "svd");
  RequireFinite(s, "svd");
  Eigen::JacobiSVD<Matrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("svd did not converge");
  }
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

PolarFactors PolarDecompose(const Matrix& s, const Tolerances& tol) {
  SvdFactors f = Svd(s);
  const int n = static_cast<int>(s.rows());
  PolarFactors out;
  if (n == 0) return out;
  const double cutoff = tol.singular * f.sigma(0);
  int rank = n;
  while (rank > 0 && f.sigma(rank - 1) <= cutoff) --rank;
  if (rank < n) {
    out.non_unique = true;
    // On the null space any isometry ker(S) -> ker(S^T) is admissible; pick
    // the one closest to the identity.
    const int k = n - rank;
    const Matrix cross = f.left.rightCols(k).transpose() * f.right.rightCols(k);
    Eigen::JacobiSVD<Matrix> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
    f.left.rightCols(k) =
        (f.left.rightCols(k) * svd.matrixU() * svd.matrixV().transpose()).eval();
  }
  out.orthogonal = f.left * f.right.transpose();
  Matrix p = f.right * f.sigma.asDiagonal() * f.right.transpose();
  out.positive = 0.5 * (p + p.transpose());
  return out;
}

double PrincipalPhase(Complex z, double tie) {
  double phase = std::arg(z);
  if (phase <= -std::numbers::pi + tie) phase += 2.0 * std::numbers::pi;
  return phase;
}

EigenPairs EigHermitian(const CMatrix& m, const Tolerances& tol) {
  RequireSquare(m, "eig_hermitian");
  RequireFinite(m, "eig_hermitian");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (m.size() > 0 && asym > tol.hermitian) {
    throw PreconditionError("eig_hermitian: input not Hermitian (defect " +
                            std::to_string(asym) + ")");
  }
  EigenPairs out;
  out.kind = EigenKind::kHermitian;
  if (m.size() == 0) return out;
  const CMatrix h = 0.5 * (m + m.adjoint());
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    // Real symmetric input: keep eigenvectors real.
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.real());
    if (es.info() != Eigen::Success) {
      throw NumericalError("eig_hermitian did not converge");
    }
    out.vectors = es.eigenvectors().cast<Complex>();
    out.values = es.eigenvalues().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.info() != Eigen::Success) {
      throw NumericalError("eig_hermitian did not converge");
    }
    out.vectors = es.eigenvectors();
    out.values = es.eigenvalues().cast<Complex>();
  }
  return out;
}

EigenPairs EigUnitary(const CMatrix& m, const Tolerances& tol) {
  RequireSquare(m, "eig_unitary");
  RequireFinite(m, "eig_unitary");
  const double defect = UnitaryDefect(m);
  if (m.size() > 0 && defect > tol.unitary) {
    throw PreconditionError("eig_unitary: input not unitary (defect " +
                            std::to_string(defect) + ")");
  }
  if (m.size() == 0) return {CMatrix(), CVector(), EigenKind::kUnitary};
  Eigen::ComplexSchur<CMatrix> schur(m);
  if (schur.info() != Eigen::Success) {
    throw NumericalError("eig_unitary: Schur reduction did not converge");
  }
  CVector values = schur.matrixT().diagonal();
  std::vector<double> phase(values.size());
  for (int k = 0; k < values.size(); ++k) {
    values(k) /= std::abs(values(k));
    phase[k] = PrincipalPhase(values(k), tol.phase_tie);
    // Keep the stored value on the same side of the branch cut as its phase.
    if (phase[k] > 0.0 && std::signbit(values(k).imag())) {
      values(k) = std::conj(values(k));
    }
  }
  return Permute(schur.matrixU(), values, OrderByKey(phase, tol.phase_tie),
                 EigenKind::kUnitary);
}

EigenPairs EigNormal(const CMatrix& m, const Tolerances& tol) {
  RequireSquare(m, "eig_normal");
  RequireFinite(m, "eig_normal");
  if (m.size() == 0) return {CMatrix(), CVector(), EigenKind::kNormal};
  Eigen::ComplexSchur<CMatrix> schur(m);
  if (schur.info() != Eigen::Success) {
    throw NumericalError("eig_normal: Schur reduction did not converge");
  }
  const CVector values = schur.matrixT().diagonal();
  const int n = static_cast<int>(values.size());
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  std::vector<double> modulus(n), phase(n);
  for (int k = 0; k < n; ++k) {
    modulus[k] = std::abs(values(k));
    phase[k] = PrincipalPhase(values(k), tol.phase_tie);
  }
  // Modulus first; runs of equal modulus are then ordered by phase.
  std::vector<int> order = OrderByKey(modulus, tol.degeneracy * scale);
  for (int start = 0; start < n;) {
    int end = start + 1;
    while (end < n && modulus[order[end]] - modulus[order[end - 1]] <=
                          tol.degeneracy * scale) {
      ++end;
    }
    std::vector<double> run_phase;
    for (int k = start; k < end; ++k) run_phase.push_back(phase[order[k]]);
    const std::vector<int> sub = OrderByKey(run_phase, tol.phase_tie);
    std::vector<int> run(order.begin() + start, order.begin() + end);
    for (int k = start; k < end; ++k) order[k] = run[sub[k - start]];
    start = end;
  }
  return Permute(schur.matrixU(), values, order, EigenKind::kNormal);
}

double OperatorNorm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double OperatorNorm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double FrobeniusNorm(const CMatrix& m) { return m.norm(); }

double UnitaryDefect(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols()))
      .cwiseAbs()
      .maxCoeff();
}

bool IsNonDerogatory(const CVector& values, double tol) {
  for (int a = 0; a < values.size(); ++a) {
    for (int b = a + 1; b < values.size(); ++b) {
      if (std::abs(values(a) - values(b)) <= tol) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> EigenvalueBlocks(const CVector& values,
                                               EigenKind kind, double rel_tol) {
  const int n = static_cast<int>(values.size());
  std::vector<std::vector<int>> blocks;
  if (n == 0) return blocks;
  auto distance = [&](int a, int b) {
    if (kind != EigenKind::kUnitary) return std::abs(values(a) - values(b));
    const double d = std::abs(PrincipalPhase(values(a)) - PrincipalPhase(values(b)));
    return std::min(d, 2.0 * std::numbers::pi - d);
  };
  double diameter = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      diameter = std::max(diameter, std::abs(values(a) - values(b)));
    }
  }
  const double gap = rel_tol * std::max(1.0, diameter);
  // Single-linkage clustering: union-find over all close pairs.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (distance(a, b) <= gap) parent[root(b)] = root(a);
    }
  }
  std::vector<int> label(n, -1);
  for (int k = 0; k < n; ++k) {
    const int r = root(k);
    if (label[r] < 0) {
      label[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[label[r]].push_back(k);
  }
  return blocks;
}

CMatrix NearestUnitary(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace dgsp
