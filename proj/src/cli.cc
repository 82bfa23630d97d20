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

#include "dgsp/cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dgsp/errors.h"
#include "dgsp/experiments.h"
#include "dgsp/filters.h"
#include "dgsp/graph.h"
#include "dgsp/io.h"
#include "dgsp/perturb.h"
#include "dgsp/rng.h"
#include "dgsp/spectrum.h"
#include "dgsp/svg.h"

namespace dgsp {

namespace {

namespace fs = std::filesystem;

// Options shared by every subcommand.
struct CommonOptions {
  std::string shift = "lap";
  std::string degree = "out";
  std::string sign = "a-minus-d";
  bool align = true;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  double tol = 1e-8;

  ShiftKind Kind() const {
    if (shift == "adj") return ShiftKind::Adjacency();
    return ShiftKind::Laplacian(
        degree == "in" ? DegreeConvention::kIn : DegreeConvention::kOut,
        sign == "d-minus-a" ? SignConvention::kDMinusA
                               : SignConvention::kAMinusD);
  }

  BasisOptions Basis() const {
    BasisOptions options;
    options.align = align;
    options.tol.degeneracy = tol;
    return options;
  }

  Json ToJson() const {
    return {{"shift", shift}, {"degree", degree}, {"sign", sign},
            {"align", align}, {"seed", seed},     {"out", out_dir},
            {"tol", tol}};
  }
};

void AddCommon(CLI::App* app, CommonOptions& opts) {
  app->add_option("--shift", opts.shift, "Shift operator: adj or lap")
      ->check(CLI::IsMember({"adj", "lap"}))
      ->capture_default_str();
  app->add_option("--degree", opts.degree, "Laplacian degree: out or in")
      ->check(CLI::IsMember({"out", "in"}))
      ->capture_default_str();
  app->add_option("--sign", opts.sign,
                  "Laplacian sign: a-minus-d (A - D) or d-minus-a (D - A)")
      ->check(CLI::IsMember({"a-minus-d", "d-minus-a"}))
      ->capture_default_str();
  app->add_flag("--align,!--no-align", opts.align,
                "Align the two eigenbases inside repeated-eigenvalue blocks")
      ->capture_default_str();
  app->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  app->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
  app->add_option("--tol", opts.tol,
                  "Relative gap for treating eigenvalues as repeated")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::string Join(const fs::path& dir, const std::string& name) {
  return (dir / name).string();
}

fs::path PrepareOutput(const CommonOptions& opts) {
  fs::path dir(opts.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidArgumentError("cannot create " + opts.out_dir);
  return dir;
}

void WriteManifest(const fs::path& dir, const std::string& command,
                   const CommonOptions& common, Json params) {
  Json manifest = {{"command", command},
                   {"common", common.ToJson()},
                   {"params", std::move(params)}};
  WriteTextFile(Join(dir, "manifest.json"), manifest.dump(2) + "\n");
}

Digraph LoadGraphChecked(const std::string& path) { return LoadEdgeList(path); }

Vector LoadSignalChecked(const std::string& path, int n) {
  Vector f = LoadSignal(path);
  if (f.size() != n) {
    throw DimensionError("signal has " + std::to_string(f.size()) +
                         " values but the graph has " + std::to_string(n) +
                         " nodes");
  }
  return f;
}

Matrix RandomDirection(int n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix d(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) d(i, j) = rng.Normal();
  }
  return d / d.norm();
}

std::string FormatQuantiles(const QuantileSummary& q) {
  return FormatDouble(q.min) + "," + FormatDouble(q.q25) + "," +
         FormatDouble(q.median) + "," + FormatDouble(q.q75) + "," +
         FormatDouble(q.max);
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  int n = 50;
  int k = 0;
  int edges = 87;
};

void RunGenerate(const GenerateArgs& args, const CommonOptions& common,
                 std::ostream& out) {
  const fs::path dir = PrepareOutput(common);
  Digraph g(1, {});
  Vector signal;
  if (args.kind == "heatflow") {
    HeatFlowNetwork net = MakeHeatFlowNetwork(args.n, args.edges, common.seed);
    g = net.graph;
    signal = net.temperature;
  } else {
    if (args.kind == "ucycle") {
      g = UndirectedCycle(args.n);
    } else if (args.kind == "dcycle") {
      g = DirectedCycle(args.n);
    } else {
      if (args.k < 0) throw InvalidArgumentError("--k must be >= 0");
      g = PerturbedCycle(args.n, args.k, common.seed);
    }
    signal = BandlimitedSignal(
        ShiftOperator(UndirectedCycle(args.n), common.Kind()));
  }
  SaveEdgeList(g, Join(dir, "graph.csv"));
  SaveSignal(signal, Join(dir, "signal.csv"));
  WriteManifest(dir, "generate", common,
                {{"kind", args.kind}, {"n", args.n}, {"k", args.k},
                 {"edges", args.edges}});
  out << "wrote " << Join(dir, "graph.csv") << " (" << g.size() << " nodes, "
      << g.edges().size() << " edges)\n";
}

// --- transform --------------------------------------------------------------

struct TransformArgs {
  std::string graph;
  std::string signal;
  int cell_px = 10;
  std::string colormap = "viridis";
};

void RunTransform(const TransformArgs& args, const CommonOptions& common,
                  std::ostream& out, std::ostream& err) {
  const Digraph g = LoadGraphChecked(args.graph);
  const Vector f = LoadSignalChecked(args.signal, g.size());
  const fs::path dir = PrepareOutput(common);
  const SpectralBasis basis =
      BuildBasis(ShiftOperator(g, common.Kind()), common.Basis());
  if (basis.non_unique_polar()) {
    err << "warning: shift operator is singular; polar factorization is not "
           "unique\n";
  }
  const SpectralMatrix spectrum = Forward(basis, f);
  WriteTextFile(Join(dir, "spectrum.json"),
                SpectrumToJson(basis, spectrum).dump(2) + "\n");
  HeatmapOptions heat;
  heat.cell_px = args.cell_px;
  heat.colormap = args.colormap;
  heat.title = "|a(i,j)|: rows P-mode i, columns U-mode j";
  WriteTextFile(Join(dir, "heatmap.svg"),
                HeatmapSvg(spectrum.coeffs.cwiseAbs(), heat));
  std::string fraction = "n/a";
  if (spectrum.coeffs.squaredNorm() > 0.0) {
    fraction = FormatDouble(DiagonalEnergyFraction(spectrum));
  }
  WriteManifest(dir, "transform", common,
                {{"graph", args.graph}, {"signal", args.signal},
                 {"cell_px", args.cell_px}, {"colormap", args.colormap},
                 {"diagonal_energy_fraction", fraction}});
  out << "diagonal_energy_fraction: " << fraction << "\n";
}

// --- denoise ----------------------------------------------------------------

struct DenoiseArgs {
  std::string graph;
  std::string signal;
  std::vector<double> sigmas = {1, 2, 3, 4, 5, 6, 7, 8};
  int trials = 200;
  int validation = 20;
  std::vector<double> c_grid;
  int n = 53;
  int edges = 87;
};

void RunDenoiseCommand(const DenoiseArgs& args, const CommonOptions& common,
                       std::ostream& out) {
  for (double s : args.sigmas) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw InvalidArgumentError("--sigma values must be finite and >= 0");
    }
  }
  if (args.trials < 1 || args.trials > 1000) {
    throw InvalidArgumentError("--trials must lie in 1..1000");
  }
  for (double c : args.c_grid) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw InvalidArgumentError("--c-grid values must be finite and >= 0");
    }
  }
  Digraph g(1, {});
  Vector truth;
  if (args.graph.empty()) {
    HeatFlowNetwork net = MakeHeatFlowNetwork(args.n, args.edges, common.seed);
    g = net.graph;
    truth = net.temperature;
  } else {
    if (args.signal.empty()) throw InvalidArgumentError("--graph needs --signal");
    g = LoadGraphChecked(args.graph);
    truth = LoadSignalChecked(args.signal, g.size());
  }
  const fs::path dir = PrepareOutput(common);
  const SpectralBasis basis =
      BuildBasis(ShiftOperator(g, common.Kind()), common.Basis());
  DenoiseConfig config;
  config.sigmas = args.sigmas;
  config.trials = args.trials;
  config.validation_draws = args.validation;
  config.c_grid = args.c_grid;
  config.seed = common.seed;
  const DenoiseResult result = RunDenoise(basis, truth, config);

  std::ostringstream trials;
  trials << "sigma,trial,base_rmse,dgsp_rmse\n";
  for (const DenoiseTrial& t : result.trials) {
    trials << FormatDouble(t.sigma) << ',' << t.trial << ','
           << FormatDouble(t.base_rmse) << ',' << FormatDouble(t.dgsp_rmse)
           << '\n';
  }
  WriteTextFile(Join(dir, "trials.csv"), trials.str());

  std::ostringstream summary;
  summary << "sigma,c,base_min,base_q25,base_median,base_q75,base_max,"
             "dgsp_min,dgsp_q25,dgsp_median,dgsp_q75,dgsp_max\n";
  for (const DenoiseSigmaSummary& s : result.summaries) {
    summary << FormatDouble(s.sigma) << ',' << FormatDouble(s.selected_c) << ','
            << FormatQuantiles(s.base) << ',' << FormatQuantiles(s.dgsp) << '\n';
    out << "sigma " << s.sigma << ": c=" << s.selected_c
        << " median base RMSE " << s.base.median << ", median DGSP RMSE "
        << s.dgsp.median << "\n";
  }
  WriteTextFile(Join(dir, "summary.csv"), summary.str());
  SaveEdgeList(g, Join(dir, "graph.csv"));
  SaveSignal(truth, Join(dir, "signal.csv"));
  WriteManifest(dir, "denoise", common,
                {{"graph", args.graph.empty() ? "synthetic heat-flow" : args.graph},
                 {"signal", args.signal},
                 {"sigmas", args.sigmas},
                 {"trials", args.trials},
                 {"validation_draws", args.validation},
                 {"c_grid", args.c_grid.empty() ? DefaultLowPassGrid() : args.c_grid},
                 {"n", g.size()},
                 {"edges", g.edges().size()}});
}

// --- perturb ----------------------------------------------------------------

struct PerturbArgs {
  std::string graph;
  std::uint64_t direction_seed = 1;
  std::vector<double> scales = {1e-1, 1e-2, 1e-3, 1e-4};
  std::vector<int> ks = {1, 2};
  bool uniform = true;
};

void RunPerturb(const PerturbArgs& args, const CommonOptions& common,
                std::ostream& out) {
  if (args.scales.empty()) throw InvalidArgumentError("--scales is empty");
  const Digraph g = LoadGraphChecked(args.graph);
  const fs::path dir = PrepareOutput(common);
  const Matrix s = ShiftOperator(g, common.Kind());
  const Matrix direction = RandomDirection(g.size(), args.direction_seed);
  const PerturbationReport report =
      ContinuityExperiment(s, direction, args.scales, args.ks,
                           common.Basis(), args.uniform);
  WriteTextFile(Join(dir, "report.json"), ReportToJson(report).dump(2) + "\n");
  WriteTextFile(Join(dir, "report.csv"), ReportToCsv(report));
  WriteManifest(dir, "perturb", common,
                {{"graph", args.graph}, {"direction_seed", args.direction_seed},
                 {"scales", args.scales}, {"ks", args.ks},
                 {"uniform", args.uniform}});
  out << "transform slope " << report.transform_slope << ", fitted C "
      << report.transform_constant << ", eps_hat " << report.eps_hat << "\n";
}

// --- spread -----------------------------------------------------------------

struct SpreadArgs {
  int n = 50;
  std::vector<int> ks = {0, 1, 2, 3, 4, 5};
  int seeds = 20;
  int modes = 5;
  int cell_px = 10;
  std::string colormap = "viridis";
};

void RunSpreadCommand(const SpreadArgs& args, const CommonOptions& common,
                      std::ostream& out) {
  if (args.seeds < 1) throw InvalidArgumentError("--seeds must be >= 1");
  const fs::path dir = PrepareOutput(common);
  SpreadConfig config;
  config.n = args.n;
  config.ks = args.ks;
  config.modes = args.modes;
  config.shift = common.Kind();
  config.basis = common.Basis();
  for (int s = 0; s < args.seeds; ++s) config.seeds.push_back(common.seed + s);
  const SpreadResult result = RunSpread(config);

  std::ostringstream table;
  table << "seed,k,diagonal_fraction,off_diagonal_energy\n";
  for (const SpreadRow& row : result.rows) {
    table << row.seed << ',' << row.k << ',' << FormatDouble(row.diagonal_fraction)
          << ',' << FormatDouble(row.off_diagonal_energy) << '\n';
  }
  WriteTextFile(Join(dir, "spread.csv"), table.str());
  Json summary = {{"seeds", config.seeds},
                  {"ks", args.ks},
                  {"spearman", result.spearman},
                  {"median_spearman", result.median_spearman}};
  WriteTextFile(Join(dir, "summary.json"), summary.dump(2) + "\n");
  SaveSignal(result.signal, Join(dir, "signal.csv"));
  for (std::size_t a = 0; a < args.ks.size(); ++a) {
    HeatmapOptions heat;
    heat.cell_px = args.cell_px;
    heat.colormap = args.colormap;
    heat.title = "G_" + std::to_string(args.ks[a]) + ": |a(i,j)|";
    WriteTextFile(Join(dir, "heatmap_k" + std::to_string(args.ks[a]) + ".svg"),
                  HeatmapSvg(result.first_seed_magnitudes[a], heat));
  }
  WriteManifest(dir, "spread", common,
                {{"n", args.n}, {"ks", args.ks}, {"seeds", args.seeds},
                 {"modes", args.modes}});
  for (std::size_t a = 0; a < args.ks.size(); ++a) {
    out << "k=" << args.ks[a] << " diagonal fraction (first seed) "
        << result.rows[a].diagonal_fraction << "\n";
  }
  out << "median Spearman(k, off-diagonal energy): " << result.median_spearman
      << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Signal processing on directed graphs via the polar "
               "decomposition"};
  app.require_subcommand(1);

  CommonOptions common;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a graph and a signal");
  generate->add_option("kind", gen.kind, "ucycle, dcycle, perturbed or heatflow")
      ->required()
      ->check(CLI::IsMember({"ucycle", "dcycle", "perturbed", "heatflow"}));
  generate->add_option("--n", gen.n, "Node count")->capture_default_str();
  generate->add_option("--k", gen.k, "Perturbation level (10k oriented edges)")
      ->capture_default_str();
  generate->add_option("--edges", gen.edges, "Edge count for heatflow")
      ->capture_default_str();
  AddCommon(generate, common);

  TransformArgs tr;
  auto* transform = app.add_subcommand("transform", "Joint Fourier transform");
  transform->add_option("--graph", tr.graph, "Edge-list CSV")->required();
  transform->add_option("--signal", tr.signal, "Signal CSV")->required();
  transform->add_option("--cell", tr.cell_px, "Heatmap cell size in px")
      ->check(CLI::Range(10, 100))
      ->capture_default_str();
  transform->add_option("--colormap", tr.colormap, "viridis or gray")
      ->check(CLI::IsMember({"viridis", "gray"}))
      ->capture_default_str();
  AddCommon(transform, common);

  DenoiseArgs dn;
  auto* denoise = app.add_subcommand("denoise", "Low-pass denoising benchmark");
  denoise->add_option("--graph", dn.graph, "Edge-list CSV (default: synthetic)");
  denoise->add_option("--signal", dn.signal, "Ground-truth signal CSV");
  denoise->add_option("--sigma", dn.sigmas, "Noise levels")
      ->delimiter(',')
      ->capture_default_str();
  denoise->add_option("--trials", dn.trials, "Trials per noise level")
      ->capture_default_str();
  denoise->add_option("--validation", dn.validation,
                      "Validation draws per noise level for tuning c")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  denoise->add_option("--c-grid", dn.c_grid, "Candidate values of c")
      ->delimiter(',');
  denoise->add_option("--n", dn.n, "Synthetic graph node count")
      ->capture_default_str();
  denoise->add_option("--edges", dn.edges, "Synthetic graph edge count")
      ->capture_default_str();
  AddCommon(denoise, common);

  PerturbArgs pt;
  auto* perturb = app.add_subcommand("perturb", "Continuity experiment");
  perturb->add_option("--graph", pt.graph, "Edge-list CSV")->required();
  perturb->add_option("--direction-seed", pt.direction_seed,
                      "Seed of the random unit direction")
      ->capture_default_str();
  perturb->add_option("--scales", pt.scales, "Decreasing perturbation sizes")
      ->delimiter(',')
      ->capture_default_str();
  perturb->add_option("--ks", pt.ks, "Filter powers")
      ->delimiter(',')
      ->capture_default_str();
  perturb->add_flag("--uniform,!--no-uniform", pt.uniform,
                    "Fit constants that also cover the worst-case direction "
                    "(n <= 24)")
      ->capture_default_str();
  AddCommon(perturb, common);

  SpreadArgs sp;
  auto* spread = app.add_subcommand("spread", "Spectral spread on G_0..G_5");
  spread->add_option("--n", sp.n, "Cycle length")->capture_default_str();
  spread->add_option("--ks", sp.ks, "Perturbation levels")
      ->delimiter(',')
      ->capture_default_str();
  spread->add_option("--seeds", sp.seeds, "Number of seeds")->capture_default_str();
  spread->add_option("--modes", sp.modes, "Eigenvectors in the test signal")
      ->capture_default_str();
  spread->add_option("--cell", sp.cell_px, "Heatmap cell size in px")
      ->check(CLI::Range(10, 100))
      ->capture_default_str();
  spread->add_option("--colormap", sp.colormap, "viridis or gray")
      ->check(CLI::IsMember({"viridis", "gray"}))
      ->capture_default_str();
  AddCommon(spread, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) {
      RunGenerate(gen, common, out);
    } else if (transform->parsed()) {
      RunTransform(tr, common, out, err);
    } else if (denoise->parsed()) {
      RunDenoiseCommand(dn, common, out);
    } else if (perturb->parsed()) {
      RunPerturb(pt, common, out);
    } else if (spread->parsed()) {
      RunSpreadCommand(sp, common, out);
    }
  } catch (const InvalidArgumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitDataMismatch;
  } catch (const ValidationError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitDataMismatch;
  } catch (const DimensionError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitDataMismatch;
  } catch (const AssumptionError& e) {
    err << "assumption violated: " << e.what()
        << " (the continuity analysis requires an invertible, non-derogatory "
           "shift operator)\n";
    return kExitAssumption;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace dgsp
