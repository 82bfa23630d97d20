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

#include "dgsp/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "dgsp/errors.h"
#include "dgsp/rng.h"

namespace dgsp {

Digraph::Digraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw InvalidArgumentError("graph needs at least one node");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_) {
      throw ValidationError("edge (" + std::to_string(e.src) + "," +
                            std::to_string(e.dst) + ") out of range for n=" +
                            std::to_string(n_));
    }
    if (e.src == e.dst) {
      throw ValidationError("self-loop at node " + std::to_string(e.src));
    }
    if (!std::isfinite(e.weight)) {
      throw ValidationError("non-finite weight on edge (" +
                            std::to_string(e.src) + "," +
                            std::to_string(e.dst) + ")");
    }
    bool fresh = seen.insert({e.src, e.dst}).second;
    if (!e.directed) fresh = seen.insert({e.dst, e.src}).second && fresh;
    if (!fresh) {
      throw ValidationError("duplicate edge (" + std::to_string(e.src) + "," +
                            std::to_string(e.dst) + ")");
    }
  }
}

int Digraph::CountUndirected() const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(), [](const Edge& e) { return !e.directed; }));
}

Matrix AdjacencyMatrix(const Digraph& g) {
  Matrix a = Matrix::Zero(g.size(), g.size());
  for (const Edge& e : g.edges()) {
    a(e.src, e.dst) = e.weight;
    if (!e.directed) a(e.dst, e.src) = e.weight;
  }
  return a;
}

Matrix ShiftOperator(const Digraph& g, const ShiftKind& kind) {
  Matrix a = AdjacencyMatrix(g);
  if (kind.type == ShiftType::kAdjacency) return a;
  const Vector degree = kind.degree == DegreeConvention::kOut
                            ? Vector(a.rowwise().sum())
                            : Vector(a.colwise().sum().transpose());
  Matrix laplacian = a;
  laplacian.diagonal() -= degree;
  if (kind.sign == SignConvention::kDMinusA) laplacian = -laplacian;
  return laplacian;
}

Digraph UndirectedCycle(int n) {
  if (n < 3) throw InvalidArgumentError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0, false});
  return Digraph(n, std::move(edges));
}

Digraph DirectedCycle(int n) {
  if (n < 3) throw InvalidArgumentError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0, true});
  return Digraph(n, std::move(edges));
}

Digraph OrientRandomEdges(const Digraph& g, int count, std::uint64_t seed,
                          EdgeOrientation orientation) {
  std::vector<int> candidates;
  for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
    if (!g.edges()[i].directed) candidates.push_back(i);
  }
  if (count < 0 || count > static_cast<int>(candidates.size())) {
    throw InvalidArgumentError(
        "cannot orient " + std::to_string(count) + " edges; graph has " +
        std::to_string(candidates.size()) + " undirected edges");
  }
  // Partial Fisher-Yates: the first `count` slots become the sample.
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<int>(rng.Below(candidates.size() - i));
    std::swap(candidates[i], candidates[j]);
  }
  const int n = g.size();
  std::vector<Edge> edges = g.edges();
  for (int i = 0; i < count; ++i) {
    Edge& e = edges[candidates[i]];
    int lo = std::min(e.src, e.dst);
    int hi = std::max(e.src, e.dst);
    if (orientation == EdgeOrientation::kCyclicSuccessor &&
        (lo + 1) % n != hi && (hi + 1) % n == lo) {
      std::swap(lo, hi);
    }
    e.src = lo;
    e.dst = hi;
    e.directed = true;
  }
  return Digraph(n, std::move(edges));
}

Digraph PerturbedCycle(int n, int k, std::uint64_t seed) {
  return OrientRandomEdges(UndirectedCycle(n), 10 * k, seed,
                           EdgeOrientation::kCyclicSuccessor);
}

std::string FormatDouble(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 17);
  return std::string(buf, end);
}

namespace {

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T ParseNumber(const std::string& text, int line, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && text[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(std::string("bad ") + what + " '" + text + "'", line);
  }
  return value;
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Digraph ReadEdgeList(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<Edge> edges;
  int max_index = -1;
  int declared_n = -1;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    if (line[0] == '#') {
      // Optional "# n=<count>" comment preserves isolated trailing nodes.
      const auto pos = line.find("n=");
      if (pos != std::string::npos) {
        declared_n = ParseNumber<int>(SplitCsv(line.substr(pos + 2))[0],
                                      line_no, "node count");
      }
      continue;
    }
    const auto fields = SplitCsv(line);
    if (!header_seen) {
      header_seen = true;
      if (!fields.empty() && fields[0] == "src") continue;
    }
    if (fields.size() != 4) {
      throw ParseError("expected 4 fields src,dst,weight,dir, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    Edge e;
    e.src = ParseNumber<int>(fields[0], line_no, "src");
    e.dst = ParseNumber<int>(fields[1], line_no, "dst");
    e.weight = ParseNumber<double>(fields[2], line_no, "weight");
    if (fields[3] == "d") {
      e.directed = true;
    } else if (fields[3] == "u") {
      e.directed = false;
    } else {
      throw ParseError("dir must be 'd' or 'u', got '" + fields[3] + "'",
                       line_no);
    }
    if (e.src < 0 || e.dst < 0) {
      throw ValidationError("negative node index on line " +
                            std::to_string(line_no));
    }
    if (e.src == e.dst) {
      throw ValidationError("self-loop at node " + std::to_string(e.src) +
                            " on line " + std::to_string(line_no));
    }
    max_index = std::max({max_index, e.src, e.dst});
    edges.push_back(e);
  }
  const int n = declared_n > 0 ? declared_n : max_index + 1;
  if (n < 1) throw ValidationError("edge list has no nodes");
  return Digraph(n, std::move(edges));
}

void WriteEdgeList(const Digraph& g, std::ostream& out) {
  out << "# n=" << g.size() << "\n";
  out << "src,dst,weight,dir\n";
  for (const Edge& e : g.edges()) {
    out << e.src << ',' << e.dst << ',' << FormatDouble(e.weight) << ','
        << (e.directed ? 'd' : 'u') << '\n';
  }
}

Digraph LoadEdgeList(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open " + path);
  return ReadEdgeList(in);
}

void SaveEdgeList(const Digraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  WriteEdgeList(g, out);
}

Vector ReadSignal(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line) || line[0] == '#') continue;
    values.push_back(ParseNumber<double>(SplitCsv(line).at(0), line_no,
                                         "signal value"));
  }
  return Eigen::Map<Vector>(values.data(), values.size());
}

void WriteSignal(const Vector& f, std::ostream& out) {
  for (double x : f) out << FormatDouble(x) << '\n';
}

Vector LoadSignal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open " + path);
  return ReadSignal(in);
}

void SaveSignal(const Vector& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  WriteSignal(f, out);
}

}  // namespace dgsp
