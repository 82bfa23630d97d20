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

#ifndef DGSP_FILTERS_H_
#define DGSP_FILTERS_H_

#include <functional>
#include <vector>

#include "dgsp/spectrum.h"
#include "dgsp/types.h"

namespace dgsp {

// Convolution kernel in the joint frequency domain, indexed like
// SpectralMatrix: weights(i, j) pairs P-mode i with U-mode j.
struct SpectralKernel {
  CMatrix weights;

  int size() const { return static_cast<int>(weights.rows()); }
};

CMatrix Hadamard(const CMatrix& a, const CMatrix& b);
SpectralMatrix Hadamard(const SpectralMatrix& a, const SpectralKernel& h);
SpectralKernel Hadamard(const SpectralKernel& a, const SpectralKernel& b);

// Entrywise k-th power. k = 0 gives the all-ones (identity) kernel.
SpectralKernel KernelPower(const SpectralKernel& h, int k);

// Inverse(Forward(f) .* h). Exact and complex.
CVector Convolve(const SpectralBasis& basis, const SpectralKernel& h,
                 const CVector& f);
CVector Convolve(const SpectralBasis& basis, const SpectralKernel& h,
                 const Vector& f);

// h(i, j) = p_values(i) * u_values(j); convolving with it applies S.
SpectralKernel ShiftKernel(const SpectralBasis& basis);

using ScalarFunction = std::function<Complex(Complex)>;

// func applied to every entry of the shift kernel. A non-finite result raises
// FilterEvaluationError naming the entry.
SpectralKernel ScalarFilter(const SpectralBasis& basis,
                            const ScalarFunction& func);

// predicate(i, j, p_value, u_value) selects the pass band.
using BandPredicate = std::function<bool(int, int, double, Complex)>;
SpectralKernel BandpassMask(const SpectralBasis& basis,
                            const BandPredicate& keep);

// Entries closer than this to a pole of 1/(1 + c x) are rejected.
inline constexpr double kPoleMargin = 1e-8;

// Kernel of x -> 1/(1 + c x) on the shift kernel.
SpectralKernel LowPassKernel(const SpectralBasis& basis, double c);

// Real part of the low-pass convolution of `noisy`.
Vector Denoise(const SpectralBasis& basis, const Vector& noisy, double c);
Vector Denoise(const SpectralBasis& basis, const SpectralKernel& low_pass,
               const Vector& noisy);

// ||Re(recovered) - truth|| / sqrt(n).
double Rmse(const CVector& recovered, const Vector& truth);
double Rmse(const Vector& recovered, const Vector& truth);

// 0 followed by 13 log-spaced points 1e-3 .. 1e1.
std::vector<double> DefaultLowPassGrid();

// Grid value of c minimizing the mean RMSE over the validation pairs. Grid
// points that hit a pole are skipped; ties go to the earlier grid point.
double TuneLowPass(const SpectralBasis& basis, const std::vector<double>& grid,
                   const std::vector<Vector>& noisy, const Vector& truth);

}  // namespace dgsp

#endif  // DGSP_FILTERS_H_
