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

#ifndef DGSP_PERTURB_H_
#define DGSP_PERTURB_H_

#include <vector>

#include "dgsp/spectrum.h"
#include "dgsp/types.h"

namespace dgsp {

// (x + y)^m - y^m, evaluated without cancellation for small x.
double PmPoly(int m, double x, double y);

// The transform as an n^2 x n matrix; row i * n + j holds the coefficient
// (P-mode i, U-mode j).
CMatrix TransformOperatorMatrix(const SpectralBasis& basis);
CMatrix TransformOperatorMatrix(const Matrix& s, const BasisOptions& options = {});

// Operator norm of the difference of the two transform matrices. The bases
// are built with the same options and the second basis is phase-matched to
// the first column by column before comparison.
double TransformDistance(const Matrix& s, const Matrix& s_prime,
                         const BasisOptions& options = {});

// f -> Convolve(KernelPower(ShiftKernel, k), f) as an n x n matrix.
CMatrix FilterOperatorMatrix(const SpectralBasis& basis, int k);
CMatrix FilterOperatorMatrix(const Matrix& s, int k,
                             const BasisOptions& options = {});
double FilterDistance(const Matrix& s, const Matrix& s_prime, int k,
                      const BasisOptions& options = {});

// Smallest C with distances[t] <= P_m(C * scales[t], y) for every t.
double FitBoundConstant(const std::vector<double>& scales,
                        const std::vector<double>& distances, int m, double y);

// Least-squares slope of log(distance) against log(scale); zero distances
// are skipped. NaN with fewer than two usable points.
double LogLogSlope(const std::vector<double>& scales,
                   const std::vector<double>& distances);

struct PerturbationReport {
  std::vector<double> scales;
  std::vector<int> ks;
  std::vector<double> transform_distances;
  // filter_distances[a][t] for ks[a] at scales[t].
  std::vector<std::vector<double>> filter_distances;
  // Eigenvalue pairing between S and S + tD is unambiguous at scales[t].
  std::vector<bool> pairing_ok;
  // Largest sampled scale below which pairing never failed (0 if none).
  double eps_hat = 0.0;
  double transform_slope = 0.0;
  std::vector<double> filter_slopes;
  // max(1, largest eigenvalue of P).
  double bound_base = 1.0;
  // Fitted constants over the scales t <= eps_hat.
  double transform_constant = 0.0;
  std::vector<double> filter_constants;
  // First-order worst case over unit directions: the largest singular value
  // of the finite-difference Jacobian of each operator map. Zero when not
  // computed.
  double transform_gain = 0.0;
  std::vector<double> filter_gains;
  // P_3(C t, 1) and P_{2k+4}(C t, bound_base) at each scale.
  std::vector<double> transform_bounds;
  std::vector<std::vector<double>> filter_bounds;
};

// Measures ||F_S - F_{S + tD}|| and ||h_S^k * - h_{S+tD}^k *|| over `scales`
// and fits the constants of the continuity bounds. Requires S invertible and
// non-derogatory, ||direction||_F = 1, and strictly decreasing positive
// scales.
struct OperatorGains {
  double transform = 0.0;
  std::vector<double> filters;
};

// Largest first-order growth rate of the transform and filter operators over
// all unit-Frobenius directions, from central differences along each of the
// n^2 coordinate directions. Memory grows as n^5; refused above
// kMaxGainSize.
inline constexpr int kMaxGainSize = 24;
OperatorGains WorstCaseGains(const Matrix& s, const std::vector<int>& ks,
                             const BasisOptions& options = {},
                             double step = 1e-6);

// With uniform = true (and n <= kMaxGainSize) the fitted constants also cover
// gain * t at every valid scale, so they hold for any direction to first
// order and not only for the sampled one.
PerturbationReport ContinuityExperiment(const Matrix& s, const Matrix& direction,
                                        const std::vector<double>& scales,
                                        const std::vector<int>& ks,
                                        const BasisOptions& options = {},
                                        bool uniform = true);

// Throws AssumptionError unless S is invertible and both polar factors have
// simple spectra.
void RequirePerturbationAssumptions(const SpectralBasis& basis);

}  // namespace dgsp

#endif  // DGSP_PERTURB_H_
