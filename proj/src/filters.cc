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

#include "dgsp/filters.h"

#include <cmath>
#include <limits>

#include "dgsp/errors.h"

namespace dgsp {

CMatrix Hadamard(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hadamard: shapes differ");
  }
  return a.cwiseProduct(b);
}

SpectralMatrix Hadamard(const SpectralMatrix& a, const SpectralKernel& h) {
  return {Hadamard(a.coeffs, h.weights)};
}

SpectralKernel Hadamard(const SpectralKernel& a, const SpectralKernel& b) {
  return {Hadamard(a.weights, b.weights)};
}

SpectralKernel KernelPower(const SpectralKernel& h, int k) {
  if (k < 0) throw InvalidArgumentError("kernel power must be nonnegative");
  SpectralKernel out{CMatrix::Ones(h.weights.rows(), h.weights.cols())};
  for (int step = 0; step < k; ++step) out.weights = out.weights.cwiseProduct(h.weights);
  return out;
}

CVector Convolve(const SpectralBasis& basis, const SpectralKernel& h,
                 const CVector& f) {
  if (h.size() != basis.size() || h.weights.cols() != basis.size()) {
    throw DimensionError("convolve: kernel size does not match basis");
  }
  return Inverse(basis, Hadamard(Forward(basis, f), h));
}

CVector Convolve(const SpectralBasis& basis, const SpectralKernel& h,
                 const Vector& f) {
  return Convolve(basis, h, CVector(f.cast<Complex>()));
}

SpectralKernel ShiftKernel(const SpectralBasis& basis) {
  return {basis.p_values.cast<Complex>() * basis.u_values.transpose()};
}

SpectralKernel ScalarFilter(const SpectralBasis& basis,
                            const ScalarFunction& func) {
  const SpectralKernel shift = ShiftKernel(basis);
  SpectralKernel out{CMatrix(shift.weights.rows(), shift.weights.cols())};
  for (int j = 0; j < shift.weights.cols(); ++j) {
    for (int i = 0; i < shift.weights.rows(); ++i) {
      const Complex value = func(shift.weights(i, j));
      if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw FilterEvaluationError("filter function is not finite", i, j);
      }
      out.weights(i, j) = value;
    }
  }
  return out;
}

SpectralKernel BandpassMask(const SpectralBasis& basis,
                            const BandPredicate& keep) {
  const int n = basis.size();
  SpectralKernel out{CMatrix::Zero(n, n)};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (keep(i, j, basis.p_values(i), basis.u_values(j))) out.weights(i, j) = 1.0;
    }
  }
  return out;
}

SpectralKernel LowPassKernel(const SpectralBasis& basis, double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw InvalidArgumentError("low-pass parameter c must be finite and >= 0");
  }
  const SpectralKernel shift = ShiftKernel(basis);
  SpectralKernel out{CMatrix(shift.weights.rows(), shift.weights.cols())};
  for (int j = 0; j < shift.weights.cols(); ++j) {
    for (int i = 0; i < shift.weights.rows(); ++i) {
      const Complex denom = 1.0 + c * shift.weights(i, j);
      if (std::abs(denom) < kPoleMargin) {
        throw FilterEvaluationError(
            "1 + c x vanishes for c=" + std::to_string(c) + "; try a smaller c",
            i, j);
      }
      out.weights(i, j) = 1.0 / denom;
    }
  }
  return out;
}

Vector Denoise(const SpectralBasis& basis, const Vector& noisy, double c) {
  return Denoise(basis, LowPassKernel(basis, c), noisy);
}

Vector Denoise(const SpectralBasis& basis, const SpectralKernel& low_pass,
               const Vector& noisy) {
  return Convolve(basis, low_pass, noisy).real();
}

double Rmse(const CVector& recovered, const Vector& truth) {
  if (recovered.size() != truth.size() || truth.size() == 0) {
    throw DimensionError("rmse: signal lengths differ");
  }
  return (recovered.real() - truth).norm() /
         std::sqrt(static_cast<double>(truth.size()));
}

double Rmse(const Vector& recovered, const Vector& truth) {
  return Rmse(CVector(recovered.cast<Complex>()), truth);
}

std::vector<double> DefaultLowPassGrid() {
  std::vector<double> grid{0.0};
  for (int k = 0; k <= 12; ++k) grid.push_back(std::pow(10.0, -3.0 + k / 3.0));
  return grid;
}

double TuneLowPass(const SpectralBasis& basis, const std::vector<double>& grid,
                   const std::vector<Vector>& noisy, const Vector& truth) {
  if (grid.empty()) throw InvalidArgumentError("empty c grid");
  if (noisy.empty()) throw InvalidArgumentError("no validation signals");
  double best_c = std::numeric_limits<double>::quiet_NaN();
  double best_error = std::numeric_limits<double>::infinity();
  for (double c : grid) {
    SpectralKernel kernel;
    try {
      kernel = LowPassKernel(basis, c);
    } catch (const FilterEvaluationError&) {
      continue;
    }
    double error = 0.0;
    for (const Vector& signal : noisy) {
      error += Rmse(Denoise(basis, kernel, signal), truth);
    }
    error /= static_cast<double>(noisy.size());
    if (error < best_error) {
      best_error = error;
      best_c = c;
    }
  }
  if (std::isnan(best_c)) {
    throw FilterEvaluationError("every grid value hits a pole", -1, -1);
  }
  return best_c;
}

}  // namespace dgsp
