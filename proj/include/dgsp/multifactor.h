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

#ifndef DGSP_MULTIFACTOR_H_
#define DGSP_MULTIFACTOR_H_

#include <vector>

#include "dgsp/linalg.h"
#include "dgsp/spectrum.h"
#include "dgsp/types.h"

namespace dgsp {

// Largest supported number of factors; the spectrum has n^k entries.
inline constexpr int kMaxFactors = 3;

// S = M_1 ... M_k with every M_i normal, and an orthonormal eigenbasis for
// each factor.
struct FactorChain {
  std::vector<CMatrix> factors;
  std::vector<EigenPairs> eigen;

  int order() const { return static_cast<int>(factors.size()); }
  int size() const {
    return factors.empty() ? 0 : static_cast<int>(factors[0].rows());
  }
};

// (U, P) from S = U P. With `align`, the chain is aligned like BuildBasis.
FactorChain PolarChain(const Matrix& s, bool align = true,
                       const Tolerances& tol = {});

// (P', U) with S = P' U and P' = U P U^T.
FactorChain ReversePolarChain(const Matrix& s, bool align = true,
                              const Tolerances& tol = {});

// User-supplied factors. Each must be normal and their product must equal
// `s`; the eigenbasis of each factor is chosen by its type (Hermitian,
// unitary, or general normal).
FactorChain ChainFromFactors(const std::vector<CMatrix>& factors,
                             const Matrix& s, const Tolerances& tol = {});

// Dense k-way array of extent n per axis. Entry (j_1, ..., j_k) lives at
// flat offset ((j_1 * n + j_2) * n + ...) so j_1 is the outermost axis.
class TensorSpectrum {
 public:
  TensorSpectrum(int order, int n);

  int order() const { return order_; }
  int extent() const { return n_; }
  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  Complex& at(const std::vector<int>& index);
  Complex at(const std::vector<int>& index) const;

 private:
  std::size_t Offset(const std::vector<int>& index) const;

  int order_;
  int n_;
  std::vector<Complex> data_;
};

// Entry (j_1..j_k) = prod_i <v_{i,j_i}, v_{i+1,j_{i+1}}> * <v_{k,j_k}, f>.
TensorSpectrum MultiForward(const FactorChain& chain, const CVector& f);
TensorSpectrum MultiForward(const FactorChain& chain, const Vector& f);

// sum_{j_1} (sum over the remaining indices of t) v_{1,j_1}.
CVector MultiInverse(const FactorChain& chain, const TensorSpectrum& t);

// Aligns each eigenbasis to its predecessor along the chain. The objective
// sum_i ||V_i - V_{i+1}|| never increases.
FactorChain MultiAlign(FactorChain chain, const Tolerances& tol = {});

double ChainObjective(const FactorChain& chain);

}  // namespace dgsp

#endif  // DGSP_MULTIFACTOR_H_
