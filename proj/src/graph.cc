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

#include "stabgraph/graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stabgraph {

VertexSet vertex_set(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxQubits) throw std::out_of_range("vertex index");
    s |= uint64_t{1} << v;
  }
  return s;
}

std::vector<int> vertex_list(VertexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n), rows_(n, 0) {
  if (n < 0 || n > kMaxQubits) {
    throw std::invalid_argument("graph size out of range: " +
                                std::to_string(n));
  }
}

Graph Graph::from_matrix(const BinMatrix& adj) {
  if (adj.rows() != adj.cols()) {
    throw std::invalid_argument("adjacency matrix is not square");
  }
  int n = static_cast<int>(adj.rows());
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    if (adj.get(a, a)) {
      throw std::invalid_argument("nonzero diagonal at vertex " +
                                  std::to_string(a + 1));
    }
    for (int b = 0; b < n; ++b) {
      if (adj.get(a, b) != adj.get(b, a)) {
        throw std::invalid_argument("adjacency matrix is not symmetric");
      }
      if (adj.get(a, b)) g.rows_[a] |= uint64_t{1} << b;
    }
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& e) {
  Graph g(n);
  for (auto [a, b] : e) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw std::invalid_argument("bad edge");
    }
    g.set_edge(a, b, true);
  }
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1, true);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.set_edge(0, n - 1, true);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.set_edge(0, i, true);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.set_edge(a, b, true);
  }
  return g;
}

void Graph::set_edge(int a, int b, bool on) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) {
    throw std::out_of_range("set_edge: bad vertex pair");
  }
  uint64_t ba = uint64_t{1} << a, bb = uint64_t{1} << b;
  if (on) {
    rows_[a] |= bb;
    rows_[b] |= ba;
  } else {
    rows_[a] &= ~bb;
    rows_[b] &= ~ba;
  }
}

void Graph::toggle_edge(int a, int b) { set_edge(a, b, !has_edge(a, b)); }

int Graph::edge_count() const {
  int s = 0;
  for (uint64_t r : rows_) s += popcount(r);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (has_edge(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

BinMatrix Graph::adjacency() const {
  BinMatrix m(n_, n_);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) m.set(a, b, has_edge(a, b));
  }
  return m;
}

StabilizerGroup standard_generators(const Graph& g) {
  CheckMatrix c(g.n());
  for (int a = 0; a < g.n(); ++a) {
    c.append(PauliOperator{g.n(), uint64_t{1} << a, g.neighbors(a), 0});
  }
  return StabilizerGroup(c);
}

LocalCliffordRecord LocalCliffordRecord::inverse() const {
  LocalCliffordRecord r;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    ElemGate g = it->gate;
    if (g == ElemGate::S) {
      g = ElemGate::Sdg;
    } else if (g == ElemGate::Sdg) {
      g = ElemGate::S;
    }
    r.steps.push_back({it->qubit, g});
  }
  return r;
}

PauliOperator apply_record(const LocalCliffordRecord& r, PauliOperator p) {
  for (const auto& s : r.steps) p = conjugate(p, s.gate, s.qubit);
  return p;
}

CheckMatrix apply_record(const LocalCliffordRecord& r, const CheckMatrix& c) {
  CheckMatrix out(c.n());
  for (const auto& p : c.paulis()) out.append(apply_record(r, p));
  return out;
}

GraphConversion stab_to_graph(const StabilizerGroup& s) {
  const int n = s.n();
  if (s.m() != n) {
    throw std::invalid_argument("not a stabilizer state: " +
                                std::to_string(s.m()) + " generators on " +
                                std::to_string(n) + " qubits");
  }
  if (!pairwise_commuting(s.generators())) {
    throw std::invalid_argument("generators do not commute");
  }
  if (!is_valid_stabilizer(s.generators())) {
    throw std::invalid_argument("generators are dependent or generate -I");
  }
  GraphConversion out{Graph(n), {}};
  std::vector<PauliOperator> rows = s.generators().paulis();
  auto apply_gate = [&](ElemGate gate, int q) {
    for (auto& p : rows) p = conjugate(p, gate, q);
    out.record.steps.push_back({q, gate});
  };

  // Greedy pivoting on the X block. A column with no X entry among the
  // unpivoted rows always has a Z entry there, so one Hadamard suffices.
  for (int c = 0; c < n; ++c) {
    uint64_t bit = uint64_t{1} << c;
    int p = c;
    while (p < n && !(rows[p].x & bit)) ++p;
    if (p == n) {
      apply_gate(ElemGate::H, c);
      p = c;
      while (p < n && !(rows[p].x & bit)) ++p;
      if (p == n) throw std::logic_error("stab_to_graph: no pivot");
    }
    std::swap(rows[c], rows[p]);
    for (int i = 0; i < n; ++i) {
      if (i != c && (rows[i].x & bit)) rows[i] = multiply(rows[i], rows[c]);
    }
  }
  // Now row a has X part e_a. Clear Y on the diagonal, then fix signs.
  for (int a = 0; a < n; ++a) {
    if ((rows[a].z >> a) & 1) apply_gate(ElemGate::Sdg, a);
  }
  for (int a = 0; a < n; ++a) {
    if (rows[a].phase == 2) apply_gate(ElemGate::Z, a);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((rows[a].z >> b) & 1) out.graph.set_edge(a, b, true);
    }
  }
  return out;
}

Graph local_complement(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("local_complement: vertex");
  Graph h = g;
  std::vector<int> nb = vertex_list(g.neighbors(v));
  for (size_t i = 0; i < nb.size(); ++i) {
    for (size_t j = i + 1; j < nb.size(); ++j) h.toggle_edge(nb[i], nb[j]);
  }
  return h;
}

namespace {

Graph isolate(Graph g, int v) {
  for (int u : vertex_list(g.neighbors(v))) g.set_edge(u, v, false);
  return g;
}

}  // namespace

Graph measure(const Graph& g, int v, Basis basis, std::optional<int> b) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("measure: vertex");
  switch (basis) {
    case Basis::Z:
      return isolate(g, v);
    case Basis::Y:
      return isolate(local_complement(g, v), v);
    case Basis::X: {
      if (g.degree(v) == 0) return g;
      if (!b) throw std::invalid_argument("X measurement needs a neighbor b");
      if (*b < 0 || *b >= g.n() || !g.has_edge(v, *b)) {
        throw std::invalid_argument("b is not a neighbor of the measured vertex");
      }
      Graph h = local_complement(g, *b);
      h = isolate(local_complement(h, v), v);
      return local_complement(h, *b);
    }
  }
  return g;
}

int schmidt_rank(const Graph& g, VertexSet a) {
  VertexSet all = g.all_vertices();
  if ((a & ~all) != 0) throw std::invalid_argument("schmidt_rank: bad set");
  if (a == 0 || a == all) {
    throw std::invalid_argument("schmidt_rank: bipartition side is empty");
  }
  VertexSet rest = all & ~a;
  BinMatrix block(0, g.n());
  for (int v : vertex_list(a)) block.append_row_word(g.neighbors(v) & rest);
  return static_cast<int>(rank(block));
}

CheckMatrix find_id_on_A(const Graph& g, VertexSet a) {
  const int n = g.n();
  if ((a & ~g.all_vertices()) != 0) {
    throw std::invalid_argument("find_id_on_A: bad set");
  }
  // Subset T of generators: T avoids a and every vertex of a sees an even
  // number of T's members.
  BinMatrix cond(0, n);
  for (int v : vertex_list(a)) {
    cond.append_row_word(uint64_t{1} << v);
    cond.append_row_word(g.neighbors(v));
  }
  BinMatrix ker = kernel(cond);
  CheckMatrix gens = standard_generators(g).generators();
  CheckMatrix out(n);
  for (size_t r = 0; r < ker.rows(); ++r) {
    out.append(subset_product(gens, ker.row_word(r)));
  }
  return out;
}

int entanglement_measure(const Graph& g, const std::vector<VertexSet>& parts) {
  VertexSet seen = 0;
  for (VertexSet p : parts) {
    if (p & seen) throw std::invalid_argument("partition blocks overlap");
    seen |= p;
  }
  if (seen != g.all_vertices()) {
    throw std::invalid_argument("partition does not cover every vertex");
  }
  BinMatrix stacked(0, 2 * g.n());
  for (VertexSet p : parts) {
    CheckMatrix c = find_id_on_A(g, p);
    for (int r = 0; r < c.m(); ++r) stacked.append_row(c.bits(), r);
  }
  return g.n() - static_cast<int>(rank(stacked));
}

}  // namespace stabgraph
