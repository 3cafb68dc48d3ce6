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

#include "stabgraph/classify.h"

#include <limits>
#include <stdexcept>

#include "stabgraph/orbit.h"

namespace stabgraph {
namespace {

// Weight of the product of the standard generators in t.
int subset_weight(const Graph& g, uint64_t t) {
  uint64_t z = 0;
  for (uint64_t s = t; s; s &= s - 1) z ^= g.neighbors(__builtin_ctzll(s));
  return popcount(t | z);
}

// Next mask with the same popcount.
uint64_t next_combination(uint64_t v) {
  uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
}

}  // namespace

bool distance_two(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 1) return true;
  }
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      if (subset_weight(g, (uint64_t{1} << a) | (uint64_t{1} << b)) == 2) {
        return true;
      }
    }
  }
  return false;
}

int distance(const Graph& g) {
  const int n = g.n();
  if (n == 0) throw std::invalid_argument("distance of an empty graph");
  if (n > 63) throw GuardError("distance limited to n <= 63");
  int delta = std::numeric_limits<int>::max();
  for (int i = 1; i < delta && i <= n; ++i) {
    uint64_t end = uint64_t{1} << n;
    for (uint64_t t = (uint64_t{1} << i) - 1; t < end; t = next_combination(t)) {
      int w = subset_weight(g, t);
      if (w < delta) {
        delta = w;
        if (delta == i) return delta;
      }
      if (i == n) break;
    }
  }
  return delta;
}

int brute_force_distance(const Graph& g) {
  if (g.n() == 0 || g.n() > 30) throw GuardError("brute force needs 1..30");
  int best = g.n();
  for (uint64_t t = 1; t < (uint64_t{1} << g.n()); ++t) {
    best = std::min(best, subset_weight(g, t));
  }
  return best;
}

std::vector<MinimalSupport> minimal_elements(const StabilizerGroup& s,
                                             int max_n) {
  const int n = s.n();
  if (n > max_n) {
    throw GuardError("minimal element search limited to n <= " +
                     std::to_string(max_n));
  }
  const uint64_t size = uint64_t{1} << n;
  std::vector<std::vector<PauliOperator>> by_support(size);
  for_each_element(s, [&](const PauliOperator& p) {
    if (!p.is_identity_pattern()) by_support[support_mask(p)].push_back(p);
  });
  // below[m]: some nonidentity element has support contained in m.
  std::vector<uint8_t> below(size, 0);
  for (uint64_t m = 1; m < size; ++m) below[m] = !by_support[m].empty();
  for (int b = 0; b < n; ++b) {
    for (uint64_t m = 0; m < size; ++m) {
      if ((m >> b) & 1) below[m] |= below[m ^ (uint64_t{1} << b)];
    }
  }
  std::vector<MinimalSupport> out;
  for (uint64_t m = 1; m < size; ++m) {
    if (by_support[m].empty()) continue;
    bool minimal = true;
    for (uint64_t r = m; r && minimal; r &= r - 1) {
      if (below[m & ~(r & -r)]) minimal = false;
    }
    if (minimal) out.push_back({m, std::move(by_support[m])});
  }
  return out;
}

std::vector<MinimalSupport> minimal_elements(const Graph& g) {
  return minimal_elements(standard_generators(g));
}

std::vector<int> minimal_generator_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v) {
    uint64_t vb = uint64_t{1} << v;
    uint64_t w = vb | g.neighbors(v);
    bool minimal = true;
    // Elements supported inside w come from generator subsets inside w.
    for (uint64_t t = w; t && minimal; t = (t - 1) & w) {
      if (t == vb) continue;
      uint64_t z = 0;
      for (uint64_t r = t; r; r &= r - 1) z ^= g.neighbors(__builtin_ctzll(r));
      uint64_t supp = t | z;
      if ((supp & ~w) == 0 && supp != w) minimal = false;
    }
    if (minimal) out.push_back(v);
  }
  return out;
}

namespace {

// Bit 0: X seen, bit 1: Z seen, bit 2: Y seen, per qubit.
std::vector<int> pauli_types_per_qubit(const std::vector<MinimalSupport>& ms,
                                       int n) {
  std::vector<int> seen(n, 0);
  for (const auto& m : ms) {
    for (const auto& p : m.elements) {
      for (int q = 0; q < n; ++q) {
        char c = p.at(q);
        if (c == 'X') seen[q] |= 1;
        if (c == 'Z') seen[q] |= 2;
        if (c == 'Y') seen[q] |= 4;
      }
    }
  }
  return seen;
}

}  // namespace

bool satisfies_msc(const Graph& g) {
  auto seen = pauli_types_per_qubit(minimal_elements(g), g.n());
  // Two distinct nonidentity Paulis already generate the third.
  for (int s : seen) {
    if (popcount(static_cast<uint64_t>(s)) < 2) return false;
  }
  return true;
}

bool satisfies_msc_column_check(const Graph& g) {
  auto seen = pauli_types_per_qubit(minimal_elements(g), g.n());
  for (int s : seen) {
    bool x_col = s & (1 | 4);
    bool z_col = s & (2 | 4);
    if (!x_col || !z_col) return false;
  }
  return true;
}

bool m_equals_s(const Graph& g) {
  CheckMatrix c(g.n());
  for (const auto& m : minimal_elements(g)) {
    for (const auto& p : m.elements) c.append(p);
  }
  return rank(c.bits()) == static_cast<size_t>(g.n());
}

VertexPartition vertex_partition(const Graph& g) {
  VertexPartition p;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 1) p.v1 |= uint64_t{1} << v;
  }
  for (int v = 0; v < g.n(); ++v) {
    uint64_t vb = uint64_t{1} << v;
    if (!(p.v1 & vb) && (g.neighbors(v) & p.v1)) p.v2 |= vb;
  }
  for (int v = 0; v < g.n(); ++v) {
    uint64_t vb = uint64_t{1} << v;
    if ((p.v1 | p.v2) & vb) continue;
    uint64_t nb = g.neighbors(v);
    if (nb != 0 && (nb & ~p.v2) == 0) p.v3 |= vb;
  }
  p.v4 = g.all_vertices() & ~(p.v1 | p.v2 | p.v3);
  return p;
}

bool has_short_cycles(const Graph& g) {
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      int common = popcount(g.neighbors(a) & g.neighbors(b));
      if (g.has_edge(a, b) && common >= 1) return true;
      if (common >= 2) return true;
    }
  }
  return false;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Tree: return "Tree";
    case Verdict::DistanceTwo: return "DistanceTwo";
    case Verdict::SatisfiesMSC: return "SatisfiesMSC";
    case Verdict::Failed: return "Failed";
  }
  return "?";
}

ClassificationVerdict analyze(const Graph& g) {
  if (!connected(g)) throw std::invalid_argument("analyze: graph is disconnected");
  if (g.edge_count() == g.n() - 1) return {Verdict::Tree, "tree"};
  if (distance_two(g)) return {Verdict::DistanceTwo, "distance 2"};
  if (satisfies_msc(g)) {
    return {Verdict::SatisfiesMSC,
            m_equals_s(g) ? "distance " + std::to_string(distance(g)) + ", M=S"
                          : "distance " + std::to_string(distance(g)) + ", M!=S"};
  }
  return {Verdict::Failed, "distance " + std::to_string(distance(g))};
}

}  // namespace stabgraph
