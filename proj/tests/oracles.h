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

// Slow reference implementations shared by the tests. They deliberately
// avoid the library's own fast paths.

#ifndef STABGRAPH_TESTS_ORACLES_H_
#define STABGRAPH_TESTS_ORACLES_H_

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include "stabgraph/graph.h"
#include "stabgraph/orbit.h"
#include "stabgraph/pauli.h"

namespace stabgraph::oracle {

using Dense = Eigen::MatrixXcd;

inline Dense single(char c) {
  using cd = std::complex<double>;
  Dense m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1;
  }
  return m;
}

inline Dense kron(const Dense& a, const Dense& b) {
  Dense out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Basis index bit q is qubit q, so qubit n-1 is the leftmost factor.
inline Dense dense(const PauliOperator& p) {
  Dense m = Dense::Identity(1, 1);
  for (int q = p.n - 1; q >= 0; --q) m = kron(m, single(p.at(q)));
  static const std::complex<double> ipow[4] = {1, {0, 1}, -1, {0, -1}};
  return ipow[p.phase & 3] * m;
}

inline Dense gate_matrix(ElemGate g) {
  using cd = std::complex<double>;
  Dense m(2, 2);
  const double s = 1 / std::sqrt(2.0);
  switch (g) {
    case ElemGate::H: m << s, s, s, -s; break;
    case ElemGate::S: m << 1, 0, 0, cd(0, 1); break;
    case ElemGate::Sdg: m << 1, 0, 0, cd(0, -1); break;
    case ElemGate::X: m << 0, 1, 1, 0; break;
    case ElemGate::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Dense on_qubit(const Dense& u, int q, int n) {
  Dense m = Dense::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    m = kron(m, k == q ? u : Dense::Identity(2, 2));
  }
  return m;
}

inline Dense record_matrix(const LocalCliffordRecord& r, int n) {
  Dense m = Dense::Identity(1 << n, 1 << n);
  for (const auto& step : r.steps) m = on_qubit(gate_matrix(step.gate), step.qubit, n) * m;
  return m;
}

// Amplitude of x is (-1)^{edges inside x} / sqrt(2^n).
inline Eigen::VectorXcd graph_state(const Graph& g) {
  const int n = g.n();
  Eigen::VectorXcd v(1 << n);
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    int inside = 0;
    for (auto [a, b] : g.edges()) inside += ((x >> a) & 1) && ((x >> b) & 1);
    v(x) = (inside & 1 ? -1.0 : 1.0) / std::sqrt(double(1 << n));
  }
  return v;
}

// Every subset product, multiplied left to right.
inline std::vector<PauliOperator> group_by_products(const StabilizerGroup& s) {
  std::vector<PauliOperator> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << s.m()); ++mask) {
    PauliOperator acc = PauliOperator::identity(s.n());
    for (int i = 0; i < s.m(); ++i) {
      if ((mask >> i) & 1) acc = multiply(acc, s.generator(i));
    }
    out.push_back(acc);
  }
  return out;
}

// log2 of the number of distinct row combinations.
inline size_t rank_by_span(const BinMatrix& m) {
  std::set<std::vector<bool>> span;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m.rows()); ++mask) {
    std::vector<bool> v(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
      if (!((mask >> r) & 1)) continue;
      for (size_t c = 0; c < m.cols(); ++c) v[c] = v[c] ^ m.get(r, c);
    }
    span.insert(v);
  }
  size_t k = 0;
  while ((size_t{1} << k) < span.size()) ++k;
  return k;
}

inline Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (edge(rng)) g.set_edge(a, b, true);
    }
  }
  return g;
}

inline Graph random_connected_graph(int n, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, rng);
    if (connected(g)) return g;
  }
}

}  // namespace stabgraph::oracle

#endif  // STABGRAPH_TESTS_ORACLES_H_
