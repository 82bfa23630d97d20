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

#include "dgsp/multifactor.h"

#include <cmath>

#include "dgsp/errors.h"

namespace dgsp {

namespace {

bool IsHermitian(const CMatrix& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

EigenPairs EigenbasisOf(const CMatrix& m, const Tolerances& tol) {
  if (IsHermitian(m, tol.hermitian)) return EigHermitian(0.5 * (m + m.adjoint()), tol);
  if (UnitaryDefect(m) <= tol.unitary) return EigUnitary(m, tol);
  return EigNormal(m, tol);
}

std::vector<std::vector<int>> BlocksOf(const EigenPairs& e, double rel_tol) {
  return EigenvalueBlocks(e.values, e.kind, rel_tol);
}

void RequireChainSize(const FactorChain& chain, Eigen::Index n,
                      const char* what) {
  if (chain.order() < 2) {
    throw InvalidArgumentError(std::string(what) + ": chain needs >= 2 factors");
  }
  if (chain.order() > kMaxFactors) {
    throw InvalidArgumentError(std::string(what) + ": at most " +
                               std::to_string(kMaxFactors) +
                               " factors are tractable");
  }
  if (n != chain.size()) {
    throw DimensionError(std::string(what) + ": size mismatch");
  }
}

FactorChain FromBasis(const SpectralBasis& basis, bool reverse) {
  FactorChain chain;
  const CMatrix u = basis.polar.orthogonal.cast<Complex>();
  const CMatrix p = basis.polar.positive.cast<Complex>();
  EigenPairs u_pairs{basis.u_vectors, basis.u_values, EigenKind::kUnitary};
  if (!reverse) {
    chain.factors = {u, p};
    chain.eigen = {u_pairs,
                   {basis.p_vectors, basis.p_values.cast<Complex>(),
                    EigenKind::kHermitian}};
  } else {
    // P' = U P U^T has eigenvectors U v for each eigenvector v of P.
    chain.factors = {u * p * u.adjoint(), u};
    chain.eigen = {{u * basis.p_vectors, basis.p_values.cast<Complex>(),
                    EigenKind::kHermitian},
                   u_pairs};
  }
  return chain;
}

}  // namespace

FactorChain PolarChain(const Matrix& s, bool align, const Tolerances& tol) {
  return FromBasis(BuildBasis(s, {align, tol}), /*reverse=*/false);
}

FactorChain ReversePolarChain(const Matrix& s, bool align,
                              const Tolerances& tol) {
  FactorChain chain =
      FromBasis(BuildBasis(s, {false, tol}), /*reverse=*/true);
  return align ? MultiAlign(std::move(chain), tol) : chain;
}

FactorChain ChainFromFactors(const std::vector<CMatrix>& factors,
                             const Matrix& s, const Tolerances& tol) {
  if (factors.size() < 2) throw InvalidArgumentError("chain needs >= 2 factors");
  CMatrix product = CMatrix::Identity(s.rows(), s.cols());
  FactorChain chain;
  for (const CMatrix& m : factors) {
    if (m.rows() != s.rows() || m.cols() != s.cols()) {
      throw DimensionError("factor size differs from the shift operator");
    }
    const double scale = std::max(1.0, OperatorNorm(m));
    const double defect =
        (m.adjoint() * m - m * m.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-8 * scale * scale) {
      throw PreconditionError("factor is not normal (defect " +
                              std::to_string(defect) + ")");
    }
    product = product * m;
    chain.factors.push_back(m);
    chain.eigen.push_back(EigenbasisOf(m, tol));
  }
  const double residual = (product - s.cast<Complex>()).norm();
  if (residual > 1e-9 * std::max(1.0, s.norm())) {
    throw PreconditionError("factors do not multiply to the shift operator");
  }
  return chain;
}

TensorSpectrum::TensorSpectrum(int order, int n) : order_(order), n_(n) {
  if (order < 1 || order > kMaxFactors) {
    throw InvalidArgumentError("tensor order must be in 1.." +
                               std::to_string(kMaxFactors));
  }
  std::size_t total = 1;
  for (int a = 0; a < order; ++a) total *= static_cast<std::size_t>(n);
  data_.assign(total, Complex(0.0, 0.0));
}

std::size_t TensorSpectrum::Offset(const std::vector<int>& index) const {
  if (static_cast<int>(index.size()) != order_) {
    throw DimensionError("tensor index has wrong arity");
  }
  std::size_t offset = 0;
  for (int j : index) offset = offset * n_ + static_cast<std::size_t>(j);
  return offset;
}

Complex& TensorSpectrum::at(const std::vector<int>& index) {
  return data_[Offset(index)];
}

Complex TensorSpectrum::at(const std::vector<int>& index) const {
  return data_[Offset(index)];
}

TensorSpectrum MultiForward(const FactorChain& chain, const CVector& f) {
  RequireChainSize(chain, f.size(), "multi_forward");
  const int k = chain.order();
  const int n = chain.size();
  // couplings[i](a, b) = <v_{i,a}, v_{i+1,b}>.
  std::vector<CMatrix> couplings;
  for (int i = 0; i + 1 < k; ++i) {
    couplings.push_back(chain.eigen[i].vectors.adjoint() *
                        chain.eigen[i + 1].vectors);
  }
  const CVector last = chain.eigen[k - 1].vectors.adjoint() * f;
  TensorSpectrum out(k, n);
  std::vector<int> index(k, 0);
  for (Complex& entry : out.data()) {
    Complex value = last(index[k - 1]);
    for (int i = 0; i + 1 < k; ++i) value *= couplings[i](index[i], index[i + 1]);
    entry = value;
    for (int a = k - 1; a >= 0; --a) {
      if (++index[a] < n) break;
      index[a] = 0;
    }
  }
  return out;
}

TensorSpectrum MultiForward(const FactorChain& chain, const Vector& f) {
  return MultiForward(chain, CVector(f.cast<Complex>()));
}

CVector MultiInverse(const FactorChain& chain, const TensorSpectrum& t) {
  RequireChainSize(chain, t.extent(), "multi_inverse");
  if (t.order() != chain.order()) {
    throw DimensionError("multi_inverse: tensor order differs from chain");
  }
  const int n = chain.size();
  const std::size_t stride = t.data().size() / static_cast<std::size_t>(n);
  CVector sums = CVector::Zero(n);
  for (int j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < stride; ++r) sums(j) += t.data()[j * stride + r];
  }
  return chain.eigen[0].vectors * sums;
}

double ChainObjective(const FactorChain& chain) {
  double total = 0.0;
  for (int i = 0; i + 1 < chain.order(); ++i) {
    total += OperatorNorm(
        CMatrix(chain.eigen[i].vectors - chain.eigen[i + 1].vectors));
  }
  return total;
}

FactorChain MultiAlign(FactorChain chain, const Tolerances& tol) {
  FactorChain candidate = chain;
  for (int i = 0; i + 1 < candidate.order(); ++i) {
    AlignEigenbases(candidate.eigen[i].vectors,
                    BlocksOf(candidate.eigen[i], tol.degeneracy),
                    candidate.eigen[i + 1].vectors,
                    BlocksOf(candidate.eigen[i + 1], tol.degeneracy),
                    /*first_fixed=*/i > 0);
  }
  if (ChainObjective(candidate) > ChainObjective(chain)) return chain;
  return candidate;
}

}  // namespace dgsp
