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

#ifndef DGSP_EXPERIMENTS_H_
#define DGSP_EXPERIMENTS_H_

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "dgsp/graph.h"
#include "dgsp/spectrum.h"
#include "dgsp/types.h"

namespace dgsp {

// Runs body(0..count-1) on a pool of worker threads. Each index runs exactly
// once; callers store results by index so output order is deterministic.
void ParallelFor(int count, const std::function<void(int)>& body);

// Unit-norm sum of the `modes` smoothest eigenvectors (smallest |eigenvalue|)
// of a symmetric Laplacian.
Vector BandlimitedSignal(const Matrix& symmetric_laplacian, int modes = 5);

// Synthetic stand-in for a sensor heat-flow network: nodes scattered in a
// 4:3 room, a minimum spanning tree plus the next-shortest pairs up to
// `edge_count` edges, and a smooth temperature field. Every edge points from
// the warmer to the cooler endpoint.
struct HeatFlowNetwork {
  Digraph graph;
  Vector temperature;
  std::vector<std::array<double, 2>> positions;
};

HeatFlowNetwork MakeHeatFlowNetwork(int n, int edge_count, std::uint64_t seed);

// Spearman rank correlation, ties given average ranks. NaN if either input is
// constant.
double SpearmanCorrelation(const std::vector<double>& x,
                           const std::vector<double>& y);

// Linear-interpolation quantile of unsorted data, q in [0, 1].
double Quantile(std::vector<double> data, double q);

double Median(std::vector<double> data);

struct SpreadConfig {
  int n = 50;
  std::vector<int> ks = {0, 1, 2, 3, 4, 5};
  std::vector<std::uint64_t> seeds;
  ShiftKind shift = ShiftKind::Laplacian();
  BasisOptions basis;
  int modes = 5;
};

struct SpreadRow {
  std::uint64_t seed = 0;
  int k = 0;
  double diagonal_fraction = 0.0;
  // 1 - diagonal_fraction, computed from the off-diagonal entries.
  double off_diagonal_energy = 0.0;
};

struct SpreadResult {
  Vector signal;
  std::vector<SpreadRow> rows;
  // Spearman correlation between k and off-diagonal energy, per seed.
  std::vector<double> spearman;
  double median_spearman = 0.0;
  // |spectrum| for each k under the first seed.
  std::vector<Matrix> first_seed_magnitudes;
};

SpreadResult RunSpread(const SpreadConfig& config);

struct DenoiseConfig {
  std::vector<double> sigmas = {1, 2, 3, 4, 5, 6, 7, 8};
  int trials = 200;
  // Noise draws per sigma used only to pick c.
  int validation_draws = 20;
  std::vector<double> c_grid;
  std::uint64_t seed = 0;
};

struct DenoiseTrial {
  double sigma = 0.0;
  int trial = 0;
  double base_rmse = 0.0;
  double dgsp_rmse = 0.0;
};

struct QuantileSummary {
  double min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

struct DenoiseSigmaSummary {
  double sigma = 0.0;
  double selected_c = 0.0;
  QuantileSummary base;
  QuantileSummary dgsp;
};

struct DenoiseResult {
  std::vector<DenoiseTrial> trials;
  std::vector<DenoiseSigmaSummary> summaries;
};

QuantileSummary Summarize(const std::vector<double>& data);

// For each sigma: pick c on validation noise, then record base and filtered
// RMSE for every trial. Trial t under sigma index s draws its noise from
// Rng::Stream(seed, ...) so results do not depend on scheduling.
DenoiseResult RunDenoise(const SpectralBasis& basis, const Vector& truth,
                         const DenoiseConfig& config);

}  // namespace dgsp

#endif  // DGSP_EXPERIMENTS_H_
