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

#ifndef DGSP_LINALG_H_
#define DGSP_LINALG_H_

#include <vector>

#include "dgsp/types.h"

namespace dgsp {

// Numerical tolerances shared by the decompositions. The defaults are sized
// for double precision and n <= 200.
struct Tolerances {
  // Max-entry defect allowed in U^H U - I before a matrix is rejected as
  // non-unitary.
  double unitary = 1e-8;
  // Max-entry asymmetry allowed in a Hermitian input.
  double hermitian = 1e-10;
  // Relative gap below which eigenvalues are treated as one repeated value.
  double degeneracy = 1e-8;
  // sigma_min <= singular * sigma_max flags a singular operator.
  double singular = 1e-10;
  // Phases closer than this are ordered by original column index.
  double phase_tie = 1e-12;
};

// S = left * diag(sigma) * right^T with sigma descending.
struct SvdFactors {
  Matrix left;
  Vector sigma;
  Matrix right;
};

SvdFactors Svd(const Matrix& s);

// S = orthogonal * positive. When S is singular the factorization is not
// unique; `non_unique` is then set and the orthogonal factor acts as the
// isometry closest to the identity between the null spaces of S and S^T.
struct PolarFactors {
  Matrix orthogonal;
  Matrix positive;
  bool non_unique = false;
};

PolarFactors PolarDecompose(const Matrix& s, const Tolerances& tol = {});

enum class EigenKind { kHermitian, kUnitary, kNormal };

// Columns of `vectors` are orthonormal eigenvectors, `values` the matching
// eigenvalues. Hermitian values are real and ascending; unitary values lie on
// the unit circle with principal phase ascending in (-pi, pi]; general normal
// values are ordered by modulus, then phase.
struct EigenPairs {
  CMatrix vectors;
  CVector values;
  EigenKind kind = EigenKind::kHermitian;
};

EigenPairs EigHermitian(const CMatrix& m, const Tolerances& tol = {});
EigenPairs EigUnitary(const CMatrix& m, const Tolerances& tol = {});
// Any normal matrix, via the complex Schur form (triangular factor is
// diagonal up to rounding when the input is normal).
EigenPairs EigNormal(const CMatrix& m, const Tolerances& tol = {});

// Principal argument in (-pi, pi]; values within `tie` of -pi map to +pi.
double PrincipalPhase(Complex z, double tie = 1e-12);

double OperatorNorm(const CMatrix& m);
double OperatorNorm(const Matrix& m);
double FrobeniusNorm(const CMatrix& m);

// Largest |(A^H A - I)_{ij}|.
double UnitaryDefect(const CMatrix& m);

// True iff every pair of values is more than `tol` apart.
bool IsNonDerogatory(const CVector& values, double tol);

// Partition of eigenvalue indices into clusters of (numerically) repeated
// values. Each returned block lists column indices in ascending order; the
// blocks are ordered by their first index. Unitary values are compared by
// phase on the circle, everything else by value. The absolute gap is
// `rel_tol` times the spectral diameter (at least 1).
std::vector<std::vector<int>> EigenvalueBlocks(const CVector& values,
                                               EigenKind kind, double rel_tol);

// Nearest unitary matrix to `m` in Frobenius norm (unitary polar factor).
CMatrix NearestUnitary(const CMatrix& m);

}  // namespace dgsp

#endif  // DGSP_LINALG_H_
