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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dgsp/cli.h"
#include "dgsp/errors.h"
#include "dgsp/experiments.h"
#include "dgsp/filters.h"
#include "dgsp/graph.h"
#include "dgsp/io.h"
#include "dgsp/multifactor.h"
#include "dgsp/perturb.h"
#include "dgsp/spectrum.h"
#include "oracles.h"

namespace dgsp {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

struct CorpusItem {
  Matrix s;
  Vector f;
};

// 100 random invertible operators, n uniform in {2, ..., 50}.
std::vector<CorpusItem> RandomCorpus(std::uint64_t seed) {
  std::vector<CorpusItem> corpus;
  for (int t = 0; t < 100; ++t) {
    Rng rng = Rng::Stream(seed, t);
    const int n = 2 + static_cast<int>(rng.Below(49));
    CorpusItem item;
    item.s = oracle::RandomInvertible(n, rng);
    item.f = oracle::RandomSignal(n, rng);
    corpus.push_back(std::move(item));
  }
  return corpus;
}

Outcome Lossless(const std::vector<CorpusItem>& corpus) {
  const auto start = Clock::now();
  double worst = 0.0;
  for (const CorpusItem& c : corpus) {
    const SpectralBasis b = BuildBasis(c.s);
    const CVector back = Inverse(b, Forward(b, c.f));
    worst = std::max(worst, (back - c.f.cast<Complex>()).norm() /
                                std::max(1.0, c.f.norm()));
  }
  const double secs = Seconds(start);
  return {worst <= 1e-10 && secs < 30.0,
          "max relative error " + Fmt(worst) + ", " + Fmt(secs) + " s"};
}

Outcome Parseval(const std::vector<CorpusItem>& corpus) {
  double worst = 0.0;
  for (const CorpusItem& c : corpus) {
    const SpectralBasis b = BuildBasis(c.s);
    worst = std::max(worst, std::abs(Forward(b, c.f).coeffs.norm() - c.f.norm()) /
                                std::max(1.0, c.f.norm()));
  }
  return {worst <= 1e-10, "max relative norm gap " + Fmt(worst)};
}

Outcome Polar(const std::vector<CorpusItem>& corpus) {
  double recon = 0.0, orth = 0.0, neg = 0.0;
  for (const CorpusItem& c : corpus) {
    const int n = static_cast<int>(c.s.rows());
    const PolarFactors p = PolarDecompose(c.s);
    recon = std::max(recon, (p.orthogonal * p.positive - c.s).norm() /
                                std::max(1.0, c.s.norm()));
    orth = std::max(orth, (p.orthogonal.transpose() * p.orthogonal -
                           Matrix::Identity(n, n))
                              .cwiseAbs()
                              .maxCoeff());
    // Independent eigen-solve of P, not the library's.
    Eigen::SelfAdjointEigenSolver<Matrix> es(p.positive, Eigen::EigenvaluesOnly);
    const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
    neg = std::max(neg, -es.eigenvalues().minCoeff() / norm);
  }
  return {recon <= 1e-10 && orth <= 1e-10 && neg <= 1e-10,
          "||UP-S|| rel " + Fmt(recon) + ", ||U^TU-I||max " + Fmt(orth) +
              ", -min eig(P)/||P|| " + Fmt(neg)};
}

Outcome GspReduction() {
  const Digraph g = UndirectedCycle(50);
  const Matrix s = ShiftOperator(g, ShiftKind::Laplacian());
  const SpectralBasis b = BuildBasis(s);
  // Independent classical basis of L.
  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  const Matrix v = es.eigenvectors();
  const Vector lambda = es.eigenvalues();
  double off = 0.0, diag_gap = 0.0, eig_residual = 0.0, space_gap = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    Rng rng = Rng::Stream(4, trial);
    const Vector f = trial == 0 ? BandlimitedSignal(s) : oracle::RandomSignal(50, rng);
    const SpectralMatrix a = Forward(b, f);
    off = std::max(off, OffDiagonalNorm(a) / f.norm());
    // Diagonal against the classical GFT in the framework's eigenbasis, up to
    // a unit-modulus phase per entry.
    const CVector gft = GftClassical(b.p_vectors, f.cast<Complex>());
    for (int i = 0; i < 50; ++i) {
      diag_gap = std::max(diag_gap, std::abs(std::abs(a.coeffs(i, i)) - std::abs(gft(i))));
    }
    // That basis must be a classical eigenbasis of L: energy per eigenvalue
    // matches the independent solver's. L is negative semidefinite, so P = -L.
    const Vector fhat = v.transpose() * f;
    std::map<long long, double> ref, got;
    for (int i = 0; i < 50; ++i) {
      ref[std::llround(std::abs(lambda(i)) * 1e6)] += fhat(i) * fhat(i);
      got[std::llround(b.p_values(i) * 1e6)] += std::norm(a.coeffs(i, i));
    }
    for (const auto& [key, energy] : ref) {
      space_gap = std::max(space_gap, std::abs(energy - got[key]));
    }
  }
  const CMatrix sv = s.cast<Complex>() * b.p_vectors;
  eig_residual =
      (sv - b.p_vectors * CMatrix(b.p_vectors.adjoint() * sv).diagonal().asDiagonal()).norm();
  return {off <= 1e-10 && diag_gap <= 1e-9 && space_gap <= 1e-9 && eig_residual <= 1e-9,
          "off-diagonal/||f|| " + Fmt(off) + ", |diag|-|gft| " + Fmt(diag_gap) +
              ", eigenspace energy gap " + Fmt(space_gap) + ", eigen residual " +
              Fmt(eig_residual)};
}

// Real normal matrix Q blockdiag(r_k R(theta_k)) Q^T.
Matrix RandomNormal(int n, Rng& rng) {
  Matrix d = Matrix::Zero(n, n);
  for (int k = 0; 2 * k + 1 < n; ++k) {
    const double r = rng.Uniform(0.5, 1.5), th = rng.Uniform(-3.0, 3.0);
    d(2 * k, 2 * k) = r * std::cos(th);
    d(2 * k, 2 * k + 1) = -r * std::sin(th);
    d(2 * k + 1, 2 * k) = r * std::sin(th);
    d(2 * k + 1, 2 * k + 1) = r * std::cos(th);
  }
  if (n % 2 == 1) d(n - 1, n - 1) = rng.Uniform(-1.5, 1.5);
  const Matrix q = oracle::RandomOrthogonal(n, rng);
  return q * d * q.transpose();
}

Outcome ShiftKernelEquivalence(const std::vector<CorpusItem>& corpus) {
  double worst = 0.0;
  for (const CorpusItem& c : corpus) {
    const SpectralBasis b = BuildBasis(c.s);
    const Vector sf = c.s * c.f;
    worst = std::max(worst, (Convolve(b, ShiftKernel(b), c.f) - sf.cast<Complex>()).norm() /
                                std::max(1.0, sf.norm()));
  }
  double worst_power = 0.0;
  for (int t = 0; t < 20; ++t) {
    Rng rng = Rng::Stream(5, t);
    const int n = 2 + static_cast<int>(rng.Below(29));
    const Matrix s = RandomNormal(n, rng);
    const Vector f = oracle::RandomSignal(n, rng);
    const SpectralBasis b = BuildBasis(s);
    Vector expected = f;
    for (int k = 1; k <= 4; ++k) {
      expected = s * expected;
      const CVector got = Convolve(b, KernelPower(ShiftKernel(b), k), f);
      worst_power = std::max(worst_power, (got - expected.cast<Complex>()).norm() /
                                              std::max(1e-300, expected.norm()));
    }
  }
  return {worst <= 1e-9 && worst_power <= 1e-8,
          "h_S*f vs Sf " + Fmt(worst) + ", normal S^k (k<=4) " + Fmt(worst_power)};
}

Outcome PhaseInvariance(const std::vector<CorpusItem>& corpus) {
  double v2_change = 0.0, v1_abs = 0.0, v1_inv = 0.0;
  for (int t = 0; t < 100; t += 5) {
    const CorpusItem& c = corpus[t];
    Rng rng = Rng::Stream(6, t);
    const SpectralBasis b = BuildBasis(c.s);
    const CMatrix a = Forward(b, c.f).coeffs;
    SpectralBasis b2 = b, b1 = b;
    for (int j = 0; j < b.size(); ++j) {
      b2.p_vectors.col(j) *= std::polar(1.0, rng.Uniform(-3.2, 3.2));
      b1.u_vectors.col(j) *= std::polar(1.0, rng.Uniform(-3.2, 3.2));
    }
    v2_change = std::max(v2_change, (Forward(b2, c.f).coeffs - a).cwiseAbs().maxCoeff());
    const SpectralMatrix a1 = Forward(b1, c.f);
    v1_abs = std::max(v1_abs, (a1.coeffs.cwiseAbs() - a.cwiseAbs()).cwiseAbs().maxCoeff());
    v1_inv = std::max(v1_inv, (Inverse(b1, a1) - Inverse(b, Forward(b, c.f)))
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  return {v2_change <= 1e-12 && v1_abs <= 1e-12 && v1_inv <= 1e-12,
          "V2 rescale " + Fmt(v2_change) + ", V1 rescale |a| " + Fmt(v1_abs) +
              ", inverse " + Fmt(v1_inv)};
}

Outcome Continuity() {
  const auto start = Clock::now();
  const std::vector<double> scales = {1e-1, 1e-2, 1e-3, 1e-4};
  const std::vector<int> ks = {1, 2};
  double min_slope = 1e300, worst_ratio = 0.0, min_eps = 1e300;
  for (int t = 0; t < 10; ++t) {
    Rng rng = Rng::Stream(7, t);
    const Matrix s = oracle::StructuredNonDerogatory(20, rng);
    const Matrix d = oracle::UnitDirection(20, rng);
    const PerturbationReport r = ContinuityExperiment(s, d, scales, ks);
    min_eps = std::min(min_eps, r.eps_hat);
    min_slope = std::min(min_slope, r.transform_slope);
    for (double slope : r.filter_slopes) min_slope = std::min(min_slope, slope);
    for (int fresh = 0; fresh < 5; ++fresh) {
      const Matrix e = oracle::UnitDirection(20, rng);
      for (double scale : scales) {
        if (scale > r.eps_hat) continue;
        const Matrix moved = s + scale * e;
        worst_ratio = std::max(worst_ratio, TransformDistance(s, moved) /
                                                PmPoly(3, r.transform_constant * scale, 1.0));
        for (std::size_t a = 0; a < ks.size(); ++a) {
          worst_ratio = std::max(
              worst_ratio,
              FilterDistance(s, moved, ks[a]) /
                  PmPoly(2 * ks[a] + 4, r.filter_constants[a] * scale, r.bound_base));
        }
      }
    }
  }
  const double secs = Seconds(start);
  return {min_slope >= 0.9 && worst_ratio <= 1.0 && min_eps > 0.0 && secs < 300.0,
          "min slope " + Fmt(min_slope) + ", worst fresh distance/bound " +
              Fmt(worst_ratio) + ", min eps_hat " + Fmt(min_eps) + ", " + Fmt(secs) +
              " s"};
}

Outcome Spread() {
  SpreadConfig config;
  for (std::uint64_t s = 1; s <= 20; ++s) config.seeds.push_back(s);
  const SpreadResult r = RunSpread(config);
  double g0_gap = 0.0;
  for (const SpreadRow& row : r.rows) {
    if (row.k == 0) g0_gap = std::max(g0_gap, std::abs(row.diagonal_fraction - 1.0));
  }
  return {r.median_spearman > 0.0 && g0_gap <= 1e-10,
          "median Spearman " + Fmt(r.median_spearman) + ", |G0 fraction - 1| " +
              Fmt(g0_gap)};
}

Outcome Denoising() {
  const auto start = Clock::now();
  const HeatFlowNetwork net = MakeHeatFlowNetwork(53, 87, 0);
  const SpectralBasis b = BuildBasis(ShiftOperator(net.graph, ShiftKind::Laplacian()));
  DenoiseConfig config;
  config.trials = 200;
  const DenoiseResult r = RunDenoise(b, net.temperature, config);
  bool pass = true;
  double worst = 0.0;
  for (const DenoiseSigmaSummary& s : r.summaries) {
    pass = pass && s.dgsp.median < s.base.median;
    worst = std::max(worst, s.dgsp.median / s.base.median);
  }
  const double secs = Seconds(start);
  return {pass && secs < 600.0, "worst median ratio DGSP/Base " + Fmt(worst) + ", " +
                                    Fmt(secs) + " s"};
}

Outcome Multifactor() {
  double k2 = 0.0, k3 = 0.0;
  for (int t = 0; t < 20; ++t) {
    Rng rng = Rng::Stream(10, t);
    const int n = 2 + static_cast<int>(rng.Below(19));
    const Matrix s = oracle::RandomInvertible(n, rng);
    const Vector f = oracle::RandomSignal(n, rng);
    const SpectralMatrix a = Forward(BuildBasis(s), f);
    const TensorSpectrum tensor = MultiForward(PolarChain(s), f);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) k2 = std::max(k2, std::abs(tensor.at({j, i}) - a.coeffs(i, j)));
    }
  }
  for (int t = 0; t < 50; ++t) {
    Rng rng = Rng::Stream(11, t);
    const int n = 2 + static_cast<int>(rng.Below(9));
    std::vector<CMatrix> factors;
    CMatrix product = CMatrix::Identity(n, n);
    for (int i = 0; i < 3; ++i) {
      const CMatrix m = i < 2 ? CMatrix(RandomNormal(n, rng).cast<Complex>())
                              : CMatrix(oracle::RandomOrthogonal(n, rng).cast<Complex>());
      factors.push_back(m);
      product = product * m;
    }
    const FactorChain chain = ChainFromFactors(factors, product.real());
    const Vector f = oracle::RandomSignal(n, rng);
    k3 = std::max(k3, (MultiInverse(chain, MultiForward(chain, f)) - f.cast<Complex>()).norm() /
                          std::max(1.0, f.norm()));
  }
  return {k2 <= 1e-12 && k3 <= 1e-10,
          "k=2 vs transform " + Fmt(k2) + ", k=3 round trip " + Fmt(k3)};
}

std::uint64_t Fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Hash of every CSV/JSON file under dir, keyed by relative path.
std::map<std::string, std::uint64_t> HashOutputs(const fs::path& dir) {
  std::map<std::string, std::uint64_t> hashes;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    const std::string ext = entry.path().extension().string();
    if (ext == ".csv" || ext == ".json") {
      hashes[fs::relative(entry.path(), dir).string()] =
          Fnv1a(ReadTextFile(entry.path().string()));
    }
  }
  return hashes;
}

Outcome Determinism() {
  const fs::path root = fs::temp_directory_path() / "dgsp_acceptance_determinism";
  const std::string out = (root / "run").string();
  const std::string in = (root / "inputs").string();
  fs::remove_all(root);
  fs::create_directories(in);
  std::ostringstream sink;
  // Inputs shared by both runs.
  RunCli({"generate", "perturbed", "--n", "30", "--k", "2", "--seed", "5", "--out", in},
         sink, sink);
  WriteTextFile(in + "/small.csv",
                "src,dst,weight,dir\n0,1,1,d\n1,2,2,d\n2,3,3,d\n3,4,4,d\n4,5,5,d\n"
                "5,0,6,d\n0,2,0.5,d\n3,1,0.25,d\n");
  const std::vector<std::vector<std::string>> commands = {
      {"generate", "ucycle", "--n", "20"},
      {"generate", "dcycle", "--n", "20"},
      {"generate", "perturbed", "--n", "50", "--k", "3", "--seed", "7"},
      {"generate", "heatflow", "--n", "53", "--edges", "87", "--seed", "3"},
      {"transform", "--graph", in + "/graph.csv", "--signal", in + "/signal.csv"},
      {"denoise", "--trials", "25", "--seed", "11"},
      {"perturb", "--graph", in + "/small.csv", "--shift", "adj", "--direction-seed", "4"},
      {"spread", "--seeds", "3", "--seed", "2"},
  };
  int compared = 0;
  for (const auto& cmd : commands) {
    std::vector<std::map<std::string, std::uint64_t>> runs;
    for (int rep = 0; rep < 2; ++rep) {
      fs::remove_all(out);
      std::vector<std::string> args = cmd;
      args.push_back("--out");
      args.push_back(out);
      const int code = RunCli(args, sink, sink);
      if (code != kExitOk) {
        fs::remove_all(root);
        return {false, "'" + cmd[0] + "' exited with " + std::to_string(code)};
      }
      runs.push_back(HashOutputs(out));
    }
    if (runs[0] != runs[1] || runs[0].empty()) {
      fs::remove_all(root);
      return {false, "outputs of '" + cmd[0] + " " + cmd[1] + "' differ between runs"};
    }
    compared += static_cast<int>(runs[0].size());
  }
  fs::remove_all(root);
  return {true, std::to_string(commands.size()) + " commands, " + std::to_string(compared) +
                    " files hash-identical"};
}

}  // namespace
}  // namespace dgsp

int main() {
  using dgsp::Outcome;
  const auto corpus = dgsp::RandomCorpus(2026);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 losslessness", [&] { return dgsp::Lossless(corpus); }},
      {"2 parseval", [&] { return dgsp::Parseval(corpus); }},
      {"3 polar correctness", [&] { return dgsp::Polar(corpus); }},
      {"4 gsp reduction", [] { return dgsp::GspReduction(); }},
      {"5 shift-kernel equivalence", [&] { return dgsp::ShiftKernelEquivalence(corpus); }},
      {"6 phase invariance", [&] { return dgsp::PhaseInvariance(corpus); }},
      {"7 continuity", [] { return dgsp::Continuity(); }},
      {"8 spectral spread", [] { return dgsp::Spread(); }},
      {"9 denoising", [] { return dgsp::Denoising(); }},
      {"10 multifactor consistency", [] { return dgsp::Multifactor(); }},
      {"11 determinism", [] { return dgsp::Determinism(); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s criterion %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
