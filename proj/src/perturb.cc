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

#include "dgsp/perturb.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "dgsp/errors.h"
#include "dgsp/filters.h"
#include "dgsp/spectrum.h"

namespace dgsp {

namespace {

double MinGap(const CVector& values) {
  double gap = std::numeric_limits<double>::infinity();
  for (int a = 0; a < values.size(); ++a) {
    for (int b = a + 1; b < values.size(); ++b) {
      gap = std::min(gap, std::abs(values(a) - values(b)));
    }
  }
  return gap;
}

// Each perturbed eigenvalue stays within half the unperturbed minimum gap of
// its index partner, so sorted order pairs eigenvalues unambiguously.
bool PairingHolds(const SpectralBasis& base, const SpectralBasis& moved) {
  if (moved.non_unique_polar() || moved.derogatory) return false;
  const CVector p = base.p_values.cast<Complex>();
  const CVector p_moved = moved.p_values.cast<Complex>();
  const double u_gap = MinGap(base.u_values);
  const double p_gap = MinGap(p);
  return (moved.u_values - base.u_values).cwiseAbs().maxCoeff() < 0.5 * u_gap &&
         (p_moved - p).cwiseAbs().maxCoeff() < 0.5 * p_gap;
}

}  // namespace

double PmPoly(int m, double x, double y) {
  if (m < 1) throw InvalidArgumentError("P_m needs m >= 1");
  if (x < 0.0 || y < 0.0) throw InvalidArgumentError("P_m needs x, y >= 0");
  if (y == 0.0) return std::pow(x, m);
  return std::pow(y, m) * std::expm1(m * std::log1p(x / y));
}

CMatrix TransformOperatorMatrix(const SpectralBasis& basis) {
  const int n = basis.size();
  CMatrix out(n * n, n);
  for (int k = 0; k < n; ++k) {
    const SpectralMatrix a = Forward(basis, CVector(CVector::Unit(n, k)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out(i * n + j, k) = a.coeffs(i, j);
    }
  }
  return out;
}

CMatrix TransformOperatorMatrix(const Matrix& s, const BasisOptions& options) {
  return TransformOperatorMatrix(BuildBasis(s, options));
}

double TransformDistance(const Matrix& s, const Matrix& s_prime,
                         const BasisOptions& options) {
  if (s.rows() != s_prime.rows() || s.cols() != s_prime.cols()) {
    throw DimensionError("transform_distance: operator sizes differ");
  }
  const SpectralBasis base = BuildBasis(s, options);
  const SpectralBasis moved = MatchPhases(base, BuildBasis(s_prime, options));
  return OperatorNorm(
      CMatrix(TransformOperatorMatrix(base) - TransformOperatorMatrix(moved)));
}

CMatrix FilterOperatorMatrix(const SpectralBasis& basis, int k) {
  if (k < 1) throw InvalidArgumentError("filter power must be >= 1");
  const int n = basis.size();
  const SpectralKernel kernel = KernelPower(ShiftKernel(basis), k);
  CMatrix out(n, n);
  for (int m = 0; m < n; ++m) {
    out.col(m) = Convolve(basis, kernel, CVector(CVector::Unit(n, m)));
  }
  return out;
}

CMatrix FilterOperatorMatrix(const Matrix& s, int k,
                             const BasisOptions& options) {
  return FilterOperatorMatrix(BuildBasis(s, options), k);
}

double FilterDistance(const Matrix& s, const Matrix& s_prime, int k,
                      const BasisOptions& options) {
  if (s.rows() != s_prime.rows() || s.cols() != s_prime.cols()) {
    throw DimensionError("filter_distance: operator sizes differ");
  }
  return OperatorNorm(CMatrix(FilterOperatorMatrix(s, k, options) -
                              FilterOperatorMatrix(s_prime, k, options)));
}

double FitBoundConstant(const std::vector<double>& scales,
                        const std::vector<double>& distances, int m, double y) {
  if (scales.size() != distances.size()) {
    throw DimensionError("fit: scales and distances differ in length");
  }
  double c = 0.0;
  for (std::size_t t = 0; t < scales.size(); ++t) {
    // Inverse of x -> P_m(x, y), written to stay accurate for d << y^m.
    const double x =
        y == 0.0 ? std::pow(distances[t], 1.0 / m)
                 : y * std::expm1(std::log1p(distances[t] / std::pow(y, m)) / m);
    c = std::max(c, x / scales[t]);
  }
  // Absorbs rounding in the inverse so the forward bound still dominates.
  return c * (1.0 + 1e-12);
}

double LogLogSlope(const std::vector<double>& scales,
                   const std::vector<double>& distances) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t t = 0; t < scales.size(); ++t) {
    if (!(distances[t] > 0.0)) continue;
    const double x = std::log(scales[t]);
    const double y = std::log(distances[t]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return std::numeric_limits<double>::quiet_NaN();
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

OperatorGains WorstCaseGains(const Matrix& s, const std::vector<int>& ks,
                             const BasisOptions& options, double step) {
  const int n = static_cast<int>(s.rows());
  if (n > kMaxGainSize) {
    throw InvalidArgumentError("worst-case gains are limited to n <= " +
                               std::to_string(kMaxGainSize));
  }
  if (!(step > 0.0)) throw InvalidArgumentError("step must be positive");
  const SpectralBasis base = BuildBasis(s, options);
  const int dims = n * n;
  CMatrix transform_jac(static_cast<Eigen::Index>(n) * n * n, dims);
  std::vector<CMatrix> filter_jac(ks.size(), CMatrix(n * n, dims));
  for (int c = 0; c < dims; ++c) {
    Matrix e = Matrix::Zero(n, n);
    e(c % n, c / n) = step;
    const SpectralBasis plus = MatchPhases(base, BuildBasis(s + e, options));
    const SpectralBasis minus = MatchPhases(base, BuildBasis(s - e, options));
    const CMatrix dt = (TransformOperatorMatrix(plus) -
                        TransformOperatorMatrix(minus)) / (2.0 * step);
    transform_jac.col(c) = Eigen::Map<const CVector>(dt.data(), dt.size());
    for (std::size_t a = 0; a < ks.size(); ++a) {
      const CMatrix df = (FilterOperatorMatrix(plus, ks[a]) -
                          FilterOperatorMatrix(minus, ks[a])) / (2.0 * step);
      filter_jac[a].col(c) = Eigen::Map<const CVector>(df.data(), df.size());
    }
  }
  // ||J d||_op <= ||J d||_F <= sigma_max(J) for unit d.
  auto sigma_max = [](const CMatrix& j) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(j.adjoint() * j,
                                                  Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
  };
  OperatorGains gains;
  gains.transform = sigma_max(transform_jac);
  for (const CMatrix& j : filter_jac) gains.filters.push_back(sigma_max(j));
  return gains;
}

void RequirePerturbationAssumptions(const SpectralBasis& basis) {
  if (basis.non_unique_polar()) {
    throw AssumptionError(
        "shift operator is singular; continuity bounds assume an invertible "
        "operator with a unique polar decomposition");
  }
  if (basis.derogatory) {
    throw AssumptionError(
        "shift operator is derogatory; continuity bounds assume both polar "
        "factors have no repeated eigenvalues");
  }
}

PerturbationReport ContinuityExperiment(const Matrix& s, const Matrix& direction,
                                        const std::vector<double>& scales,
                                        const std::vector<int>& ks,
                                        const BasisOptions& options,
                                        bool uniform) {
  if (s.rows() != direction.rows() || s.cols() != direction.cols()) {
    throw DimensionError("direction size differs from the shift operator");
  }
  if (std::abs(direction.norm() - 1.0) > 1e-9) {
    throw InvalidArgumentError("perturbation direction must have unit "
                               "Frobenius norm");
  }
  if (scales.empty()) throw InvalidArgumentError("no perturbation scales");
  for (std::size_t t = 0; t < scales.size(); ++t) {
    if (!(scales[t] > 0.0) || (t > 0 && !(scales[t] < scales[t - 1]))) {
      throw InvalidArgumentError("scales must be positive and strictly "
                                 "decreasing");
    }
  }
  for (int k : ks) {
    if (k < 1) throw InvalidArgumentError("filter powers must be >= 1");
  }

  const SpectralBasis base = BuildBasis(s, options);
  RequirePerturbationAssumptions(base);

  PerturbationReport report;
  report.scales = scales;
  report.ks = ks;
  report.bound_base = std::max(1.0, base.p_values.maxCoeff());
  report.filter_distances.assign(ks.size(), {});

  const CMatrix base_transform = TransformOperatorMatrix(base);
  std::vector<CMatrix> base_filters;
  for (int k : ks) base_filters.push_back(FilterOperatorMatrix(base, k));

  for (double t : scales) {
    const Matrix moved_s = s + t * direction;
    const SpectralBasis moved = MatchPhases(base, BuildBasis(moved_s, options));
    report.pairing_ok.push_back(PairingHolds(base, moved));
    report.transform_distances.push_back(OperatorNorm(
        CMatrix(base_transform - TransformOperatorMatrix(moved))));
    for (std::size_t a = 0; a < ks.size(); ++a) {
      report.filter_distances[a].push_back(OperatorNorm(
          CMatrix(base_filters[a] - FilterOperatorMatrix(moved, ks[a]))));
    }
  }

  // Scales are decreasing, so the valid region is a suffix.
  std::size_t first_valid = scales.size();
  while (first_valid > 0 && report.pairing_ok[first_valid - 1]) --first_valid;
  report.eps_hat = first_valid < scales.size() ? scales[first_valid] : 0.0;
  const std::vector<double> fit_scales(scales.begin() + first_valid, scales.end());

  auto suffix = [&](const std::vector<double>& v) {
    return std::vector<double>(v.begin() + first_valid, v.end());
  };

  if (uniform && s.rows() <= kMaxGainSize) {
    const OperatorGains gains = WorstCaseGains(s, ks, options);
    report.transform_gain = gains.transform;
    report.filter_gains = gains.filters;
  } else {
    report.filter_gains.assign(ks.size(), 0.0);
  }
  // Fit to the larger of the measured distance and gain * t at each scale.
  auto targets = [&](const std::vector<double>& measured, double gain) {
    std::vector<double> out = suffix(measured);
    for (std::size_t t = 0; t < out.size(); ++t) {
      out[t] = std::max(out[t], gain * fit_scales[t]);
    }
    return out;
  };

  report.transform_slope = LogLogSlope(scales, report.transform_distances);
  report.transform_constant = FitBoundConstant(
      fit_scales, targets(report.transform_distances, report.transform_gain), 3,
      1.0);
  for (double t : scales) {
    report.transform_bounds.push_back(PmPoly(3, report.transform_constant * t, 1.0));
  }
  for (std::size_t a = 0; a < ks.size(); ++a) {
    const int m = 2 * ks[a] + 4;
    report.filter_slopes.push_back(LogLogSlope(scales, report.filter_distances[a]));
    const double c = FitBoundConstant(
        fit_scales, targets(report.filter_distances[a], report.filter_gains[a]),
        m, report.bound_base);
    report.filter_constants.push_back(c);
    std::vector<double> bounds;
    for (double t : scales) bounds.push_back(PmPoly(m, c * t, report.bound_base));
    report.filter_bounds.push_back(std::move(bounds));
  }
  return report;
}

}  // namespace dgsp
