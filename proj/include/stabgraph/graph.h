// Copyright 2026 The stabgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABGRAPH_GRAPH_H_
#define STABGRAPH_GRAPH_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stabgraph/f2.h"
#include "stabgraph/pauli.h"

namespace stabgraph {

// Vertex sets are bitmasks over 0-based vertex indices.
using VertexSet = uint64_t;

VertexSet vertex_set(const std::vector<int>& vertices);
std::vector<int> vertex_list(VertexSet s);

// Simple undirected graph on at most 64 vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Checks symmetry and zero diagonal.
  static Graph from_matrix(const BinMatrix& adj);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& e);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);
  static Graph complete(int n);

  int n() const { return n_; }
  const std::vector<uint64_t>& rows() const { return rows_; }
  uint64_t neighbors(int v) const { return rows_[v]; }
  bool has_edge(int a, int b) const { return (rows_[a] >> b) & 1; }
  void set_edge(int a, int b, bool on);
  void toggle_edge(int a, int b);
  int degree(int v) const { return popcount(rows_[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  BinMatrix adjacency() const;
  uint64_t all_vertices() const {
    return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Graph& a, const Graph& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.rows_ < b.rows_;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> rows_;
};

// Generator a is X_a Z_{N(a)}; the check matrix is [I | G].
StabilizerGroup standard_generators(const Graph& g);

struct CliffordStep {
  int qubit;
  ElemGate gate;
};

// Gates applied to the state, in order. Replaying them on a stabilizer maps
// each generator P to U P U^dagger.
struct LocalCliffordRecord {
  std::vector<CliffordStep> steps;

  bool empty() const { return steps.empty(); }
  LocalCliffordRecord inverse() const;
};

PauliOperator apply_record(const LocalCliffordRecord& r, PauliOperator p);
CheckMatrix apply_record(const LocalCliffordRecord& r, const CheckMatrix& c);

struct GraphConversion {
  Graph graph;
  LocalCliffordRecord record;
};

// Throws std::invalid_argument when s is not a valid stabilizer state.
// Replaying the record on s yields generators of the standard stabilizer of
// the returned graph, signs included.
GraphConversion stab_to_graph(const StabilizerGroup& s);

Graph local_complement(const Graph& g, int v);

enum class Basis { X, Y, Z };
Graph measure(const Graph& g, int v, Basis basis,
              std::optional<int> b = std::nullopt);

// Rank of the block of G with rows in a and columns outside a.
int schmidt_rank(const Graph& g, VertexSet a);

// Generators of the subgroup acting as identity on a.
CheckMatrix find_id_on_A(const Graph& g, VertexSet a);

int entanglement_measure(const Graph& g, const std::vector<VertexSet>& parts);

}  // namespace stabgraph

#endif  // STABGRAPH_GRAPH_H_
