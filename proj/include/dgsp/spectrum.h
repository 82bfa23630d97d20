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

#ifndef DGSP_SPECTRUM_H_
#define DGSP_SPECTRUM_H_

#include <vector>

#include "dgsp/linalg.h"
#include "dgsp/types.h"

namespace dgsp {

// Eigenbases of the two polar factors of a shift operator S = U P.
//
// Column j of `u_vectors` is the j-th U-mode, with unit-modulus eigenvalue
// `u_values(j)` (phases ascending). Column i of `p_vectors` is the i-th
// P-mode, with nonnegative eigenvalue `p_values(i)` (ascending).
struct SpectralBasis {
  PolarFactors polar;
  CMatrix u_vectors;
  CVector u_values;
  CMatrix p_vectors;
  Vector p_values;
  // Block-wise alignment of the two eigenbases has been applied.
  bool aligned = false;
  // Some factor has a repeated eigenvalue, so perturbation bounds do not
  // apply. Transforms remain well defined.
  bool derogatory = false;

  int size() const { return static_cast<int>(p_values.size()); }
  // S singular: the polar factorization was not unique.
  bool non_unique_polar() const { return polar.non_unique; }
};

// Joint spectrum; coeffs(i, j) pairs P-mode i with U-mode j.
struct SpectralMatrix {
  CMatrix coeffs;

  int size() const { return static_cast<int>(coeffs.rows()); }
};

struct BasisOptions {
  bool align = true;
  Tolerances tol;
};

SpectralBasis BuildBasis(const Matrix& s, const BasisOptions& options = {});

// Re-chooses eigenvectors inside every repeated-eigenvalue block so that
// U-modes and P-modes at equal positions coincide as far as the eigenspaces
// allow.
//
// If U is a multiple of the identity (one block) the U-modes are replaced by
// the P-modes; if P is, the P-modes are replaced by the U-modes. Otherwise
// each block is rotated by the unitary Procrustes solution against the
// same-position columns of the other basis, alternating sides for a few
// sweeps. The result never has larger operator-norm distance
// ||V_U - V_P|| than the input; eigenpairs remain valid.
SpectralBasis AlignBases(SpectralBasis basis, const Tolerances& tol = {});

// Block-wise Procrustes alignment of two eigenbases. `first_fixed` forbids
// changes to `first`.
void AlignEigenbases(CMatrix& first,
                     const std::vector<std::vector<int>>& first_blocks,
                     CMatrix& second,
                     const std::vector<std::vector<int>>& second_blocks,
                     bool first_fixed);

// ||V_U - V_P|| in operator norm.
double BasisDistance(const SpectralBasis& basis);

// p(i, j) = <u_j, p_i>: expansion of P-mode i in the U-modes.
CMatrix Coupling(const SpectralBasis& basis);

// a(i, j) = <p_i, f> <u_j, p_i>.
SpectralMatrix Forward(const SpectralBasis& basis, const CVector& f);
SpectralMatrix Forward(const SpectralBasis& basis, const Vector& f);

// Same transform through the product V_U^H V_P D(V_P^H f), transposed into
// (P-mode, U-mode) order.
SpectralMatrix ForwardMatrixForm(const SpectralBasis& basis, const CVector& f);

// sum_j (sum_i a(i, j)) u_j. Complex; callers wanting a real signal take the
// real part.
CVector Inverse(const SpectralBasis& basis, const SpectralMatrix& a);

// V^H f for a unitary V.
CVector GftClassical(const CMatrix& v, const CVector& f,
                     const Tolerances& tol = {});

// Share of ||a||_F^2 on the diagonal entries. Throws for a zero matrix.
double DiagonalEnergyFraction(const SpectralMatrix& a);

// Frobenius norm of the off-diagonal part.
double OffDiagonalNorm(const SpectralMatrix& a);

// Multiplies each column of `basis` by the unit scalar that best matches the
// same column of `reference`. Used to compare transforms of nearby operators,
// whose eigenvectors are otherwise fixed only up to phase.
SpectralBasis MatchPhases(const SpectralBasis& reference, SpectralBasis basis);

}  // namespace dgsp

#endif  // DGSP_SPECTRUM_H_
