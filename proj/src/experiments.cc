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

#include "dgsp/experiments.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>
#include <tuple>

#include "dgsp/errors.h"
#include "dgsp/filters.h"
#include "dgsp/rng.h"

namespace dgsp {

void ParallelFor(int count, const std::function<void(int)>& body) {
  const int workers = std::clamp(
      static_cast<int>(std::thread::hardware_concurrency()), 1, count > 0 ? count : 1);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Vector BandlimitedSignal(const Matrix& symmetric_laplacian, int modes) {
  const int n = static_cast<int>(symmetric_laplacian.rows());
  if (modes < 1 || modes > n) {
    throw InvalidArgumentError("bandlimited signal needs 1 <= modes <= n");
  }
  const EigenPairs eig = EigHermitian(symmetric_laplacian.cast<Complex>());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(eig.values(a).real()) < std::abs(eig.values(b).real());
  });
  Vector f = Vector::Zero(n);
  for (int m = 0; m < modes; ++m) f += eig.vectors.col(order[m]).real();
  return f / f.norm();
}

HeatFlowNetwork MakeHeatFlowNetwork(int n, int edge_count, std::uint64_t seed) {
  if (n < 2) throw InvalidArgumentError("heat-flow network needs n >= 2");
  const int max_edges = n * (n - 1) / 2;
  if (edge_count < n - 1 || edge_count > max_edges) {
    throw InvalidArgumentError("edge count must lie in [n-1, n(n-1)/2]");
  }
  Rng rng(seed);
  const double width = 4.0 / 3.0;
  HeatFlowNetwork net{Digraph(1, {}), Vector(n), {}};
  for (int i = 0; i < n; ++i) {
    net.positions.push_back({rng.Uniform(0.0, width), rng.Uniform()});
  }

  // Smooth field: a linear gradient plus three Gaussian bumps.
  const double gx = rng.Normal(), gy = rng.Normal();
  struct Bump {
    double x, y, height, radius;
  };
  std::vector<Bump> bumps;
  for (int b = 0; b < 3; ++b) {
    bumps.push_back({rng.Uniform(0.0, width), rng.Uniform(), rng.Normal(),
                     rng.Uniform(0.25, 0.5)});
  }
  Vector field(n);
  for (int i = 0; i < n; ++i) {
    const auto [x, y] = net.positions[i];
    double v = gx * x + gy * y;
    for (const Bump& b : bumps) {
      const double d2 = (x - b.x) * (x - b.x) + (y - b.y) * (y - b.y);
      v += 2.0 * b.height * std::exp(-d2 / (2.0 * b.radius * b.radius));
    }
    field(i) = v;
  }
  field.array() -= field.mean();
  const double amplitude = field.cwiseAbs().maxCoeff();
  if (amplitude > 0.0) field /= amplitude;
  net.temperature = (20.0 + 3.0 * field.array()).matrix();

  // Candidate pairs by length; Kruskal keeps the graph connected.
  std::vector<std::tuple<double, int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = net.positions[i][0] - net.positions[j][0];
      const double dy = net.positions[i][1] - net.positions[j][1];
      pairs.emplace_back(dx * dx + dy * dy, i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<bool> used(pairs.size(), false);
  int chosen = 0;
  for (std::size_t p = 0; p < pairs.size() && chosen < n - 1; ++p) {
    const auto [d, i, j] = pairs[p];
    if (root(i) != root(j)) {
      parent[root(i)] = root(j);
      used[p] = true;
      ++chosen;
    }
  }
  for (std::size_t p = 0; p < pairs.size() && chosen < edge_count; ++p) {
    if (!used[p]) {
      used[p] = true;
      ++chosen;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!used[p]) continue;
    auto [d, i, j] = pairs[p];
    if (net.temperature(j) > net.temperature(i)) std::swap(i, j);
    edges.push_back({i, j, 1.0, true});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  net.graph = Digraph(n, std::move(edges));
  return net;
}

namespace {

std::vector<double> Ranks(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] < x[b]; });
  std::vector<double> rank(n);
  for (int start = 0; start < n;) {
    int end = start + 1;
    while (end < n && x[order[end]] == x[order[start]]) ++end;
    const double average = 0.5 * (start + end - 1) + 1.0;
    for (int k = start; k < end; ++k) rank[order[k]] = average;
    start = end;
  }
  return rank;
}

}  // namespace

double SpearmanCorrelation(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgumentError("spearman needs two equal-length samples");
  }
  const std::vector<double> rx = Ranks(x);
  const std::vector<double> ry = Ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

double Quantile(std::vector<double> data, double q) {
  if (data.empty()) throw InvalidArgumentError("quantile of empty data");
  std::sort(data.begin(), data.end());
  const double pos = q * (data.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, data.size() - 1);
  return data[lo] + (pos - lo) * (data[hi] - data[lo]);
}

double Median(std::vector<double> data) { return Quantile(std::move(data), 0.5); }

SpreadResult RunSpread(const SpreadConfig& config) {
  if (config.ks.empty() || config.seeds.empty()) {
    throw InvalidArgumentError("spread needs at least one k and one seed");
  }
  SpreadResult result;
  const Matrix reference =
      ShiftOperator(UndirectedCycle(config.n), config.shift);
  result.signal = BandlimitedSignal(reference, config.modes);

  const int nk = static_cast<int>(config.ks.size());
  const int ns = static_cast<int>(config.seeds.size());
  result.rows.resize(static_cast<std::size_t>(nk * ns));
  result.first_seed_magnitudes.resize(nk);
  ParallelFor(nk * ns, [&](int task) {
    const int s = task / nk;
    const int a = task % nk;
    const Digraph g = PerturbedCycle(config.n, config.ks[a], config.seeds[s]);
    const SpectralBasis basis =
        BuildBasis(ShiftOperator(g, config.shift), config.basis);
    const SpectralMatrix spectrum = Forward(basis, result.signal);
    const double total = spectrum.coeffs.squaredNorm();
    const double off = OffDiagonalNorm(spectrum);
    result.rows[task] = {config.seeds[s], config.ks[a],
                         DiagonalEnergyFraction(spectrum), off * off / total};
    if (s == 0) result.first_seed_magnitudes[a] = spectrum.coeffs.cwiseAbs();
  });

  std::vector<double> k_values(config.ks.begin(), config.ks.end());
  for (int s = 0; s < ns; ++s) {
    std::vector<double> mass;
    for (int a = 0; a < nk; ++a) mass.push_back(result.rows[s * nk + a].off_diagonal_energy);
    result.spearman.push_back(nk >= 2 ? SpearmanCorrelation(k_values, mass)
                                      : std::numeric_limits<double>::quiet_NaN());
  }
  result.median_spearman = Median(result.spearman);
  return result;
}

QuantileSummary Summarize(const std::vector<double>& data) {
  return {Quantile(data, 0.0), Quantile(data, 0.25), Quantile(data, 0.5),
          Quantile(data, 0.75), Quantile(data, 1.0)};
}

DenoiseResult RunDenoise(const SpectralBasis& basis, const Vector& truth,
                         const DenoiseConfig& config) {
  if (config.sigmas.empty()) throw InvalidArgumentError("no noise levels");
  for (double sigma : config.sigmas) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
      throw InvalidArgumentError("noise levels must be finite and >= 0");
    }
  }
  if (config.trials < 1 || config.validation_draws < 1) {
    throw InvalidArgumentError("trials and validation draws must be positive");
  }
  if (truth.size() != basis.size()) {
    throw DimensionError("signal length differs from graph size");
  }
  const std::vector<double> grid =
      config.c_grid.empty() ? DefaultLowPassGrid() : config.c_grid;
  const int n = basis.size();
  const int ns = static_cast<int>(config.sigmas.size());
  auto noisy_draw = [&](std::uint64_t stream, double sigma) {
    Rng rng = Rng::Stream(config.seed, stream);
    Vector noisy = truth;
    for (int v = 0; v < n; ++v) noisy(v) += rng.Normal(0.0, sigma);
    return noisy;
  };
  // Stream ids: validation draws live above 2^32, trials below.
  constexpr std::uint64_t kValidation = std::uint64_t{1} << 32;

  DenoiseResult result;
  result.trials.resize(static_cast<std::size_t>(ns) * config.trials);
  result.summaries.resize(ns);
  for (int s = 0; s < ns; ++s) {
    const double sigma = config.sigmas[s];
    std::vector<Vector> validation;
    for (int d = 0; d < config.validation_draws; ++d) {
      validation.push_back(noisy_draw(
          kValidation + static_cast<std::uint64_t>(s) * config.validation_draws + d,
          sigma));
    }
    const double c = TuneLowPass(basis, grid, validation, truth);
    const SpectralKernel kernel = LowPassKernel(basis, c);
    ParallelFor(config.trials, [&](int t) {
      const Vector noisy =
          noisy_draw(static_cast<std::uint64_t>(s) * config.trials + t, sigma);
      result.trials[static_cast<std::size_t>(s) * config.trials + t] = {
          sigma, t, Rmse(noisy, truth), Rmse(Denoise(basis, kernel, noisy), truth)};
    });
    std::vector<double> base, dgsp;
    for (int t = 0; t < config.trials; ++t) {
      const DenoiseTrial& row = result.trials[static_cast<std::size_t>(s) * config.trials + t];
      base.push_back(row.base_rmse);
      dgsp.push_back(row.dgsp_rmse);
    }
    result.summaries[s] = {sigma, c, Summarize(base), Summarize(dgsp)};
  }
  return result;
}

}  // namespace dgsp
