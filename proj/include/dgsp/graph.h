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

#ifndef DGSP_GRAPH_H_
#define DGSP_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dgsp/types.h"

namespace dgsp {

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 1.0;
  // An undirected edge is stored once and acts in both orientations.
  bool directed = true;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Weighted simple graph on nodes 0..n-1 that may mix directed and undirected
// edges. Immutable once constructed; the constructor rejects self-loops,
// out-of-range endpoints, non-finite weights and duplicate orientations.
class Digraph {
 public:
  Digraph(int n, std::vector<Edge> edges);

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int CountUndirected() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

enum class ShiftType { kAdjacency, kLaplacian };
enum class DegreeConvention { kOut, kIn };
// kAMinusD is A - D, kDMinusA is D - A.
enum class SignConvention { kAMinusD, kDMinusA };

struct ShiftKind {
  ShiftType type = ShiftType::kLaplacian;
  DegreeConvention degree = DegreeConvention::kOut;
  SignConvention sign = SignConvention::kAMinusD;

  static ShiftKind Adjacency() { return {ShiftType::kAdjacency}; }
  static ShiftKind Laplacian(DegreeConvention degree = DegreeConvention::kOut,
                             SignConvention sign = SignConvention::kAMinusD) {
    return {ShiftType::kLaplacian, degree, sign};
  }
};

// Entry (i, j) is the weight of edge i -> j, with undirected edges filled in
// both orientations.
Matrix AdjacencyMatrix(const Digraph& g);

// Adjacency, or a Laplacian built from weighted out- or in-degree sums.
Matrix ShiftOperator(const Digraph& g, const ShiftKind& kind);

// Cycle 0-1-...-(n-1)-0 with unit undirected edges. Requires n >= 3.
Digraph UndirectedCycle(int n);

// Unit edges i -> (i+1 mod n). Requires n >= 3.
Digraph DirectedCycle(int n);

enum class EdgeOrientation {
  // Every chosen edge points from the lower to the higher node index.
  kLowToHigh,
  // An edge {u, u+1 mod n} points u -> u+1 mod n, so the wrap-around edge of
  // a cycle becomes (n-1) -> 0. Any other pair falls back to kLowToHigh.
  kCyclicSuccessor,
};

// Copy of `g` in which `count` undirected edges, drawn uniformly without
// replacement, become directed. Deterministic for a fixed seed.
Digraph OrientRandomEdges(const Digraph& g, int count, std::uint64_t seed,
                          EdgeOrientation orientation =
                              EdgeOrientation::kLowToHigh);

// The graph G_k of the spread experiment: undirected_cycle(n) with 10k edges
// oriented along the cycle. G_0 is the undirected cycle and, for n = 50,
// G_5 is the directed cycle.
Digraph PerturbedCycle(int n, int k, std::uint64_t seed);

// Edge-list CSV with header `src,dst,weight,dir`, dir in {d,u}.
Digraph ReadEdgeList(std::istream& in);
void WriteEdgeList(const Digraph& g, std::ostream& out);
Digraph LoadEdgeList(const std::string& path);
void SaveEdgeList(const Digraph& g, const std::string& path);

// Signal CSV: one value per line in node order.
Vector ReadSignal(std::istream& in);
void WriteSignal(const Vector& f, std::ostream& out);
Vector LoadSignal(const std::string& path);
void SaveSignal(const Vector& f, const std::string& path);

// 17 significant digits, enough to parse back to exactly `x`.
std::string FormatDouble(double x);

}  // namespace dgsp

#endif  // DGSP_GRAPH_H_
