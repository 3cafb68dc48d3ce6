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

#include "stabgraph/orbit.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace stabgraph {

bool connected(const Graph& g) {
  if (g.n() == 0) return true;
  uint64_t seen = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    for (int v : vertex_list(frontier)) next |= g.neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Bit position of pair a < b inside the code.
int pair_bit(int n, int a, int b) {
  int idx = a * n - a * (a + 1) / 2 + (b - a - 1);
  return pair_count(n) - 1 - idx;
}

void require_code_size(int n) {
  if (n < 0 || n > 11) {
    throw std::invalid_argument("upper-triangle codes need n <= 11");
  }
}

}  // namespace

uint64_t upper_triangle_code(const Graph& g) {
  require_code_size(g.n());
  uint64_t code = 0;
  for (auto [a, b] : g.edges()) code |= uint64_t{1} << pair_bit(g.n(), a, b);
  return code;
}

Graph graph_from_code(int n, uint64_t code) {
  require_code_size(n);
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((code >> pair_bit(n, a, b)) & 1) g.set_edge(a, b, true);
    }
  }
  return g;
}

bool upper_triangle_less(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  for (int i = 0; i < a.n(); ++i) {
    for (int j = i + 1; j < a.n(); ++j) {
      bool x = a.has_edge(i, j), y = b.has_edge(i, j);
      if (x != y) return y;
    }
  }
  return false;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) {
    throw std::invalid_argument("permutation length differs from n");
  }
  Graph h(g.n());
  for (auto [a, b] : g.edges()) h.set_edge(perm[a], perm[b], true);
  return h;
}

std::vector<Graph> lc_orbit(const Graph& g, size_t guard) {
  std::set<Graph> seen{g};
  std::vector<Graph> stack{g};
  while (!stack.empty()) {
    Graph cur = std::move(stack.back());
    stack.pop_back();
    for (int v = 0; v < g.n(); ++v) {
      Graph next = local_complement(cur, v);
      if (seen.insert(next).second) {
        if (seen.size() > guard) {
          throw GuardError("LC orbit exceeds guard of " +
                           std::to_string(guard) + " graphs");
        }
        stack.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Graph lc_representative(const Graph& g, size_t guard) {
  std::vector<Graph> orbit = lc_orbit(g, guard);
  Graph best = orbit.front();
  for (const Graph& h : orbit) {
    int eh = h.edge_count(), eb = best.edge_count();
    if (eh < eb || (eh == eb && upper_triangle_less(h, best))) best = h;
  }
  return best;
}

uint64_t brute_force_class_key(const Graph& g) {
  if (g.n() > kMaxEnumerationVertices) {
    throw GuardError("brute-force class key limited to n <= 8");
  }
  std::vector<int> perm(g.n());
  uint64_t best = ~uint64_t{0};
  for (const Graph& h : lc_orbit(g)) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      best = std::min(best, upper_triangle_code(permute(h, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

namespace {

// Table-driven moves on codes for n <= 8. Codes are split into 7-bit
// chunks; each move is a sum of per-chunk lookups.
class CodeSpace {
 public:
  explicit CodeSpace(int n) : n_(n), e_(pair_count(n)), chunks_((e_ + 6) / 7) {
    rows_.assign(n * chunks_ * 128, 0);
    swaps_.assign(std::max(n - 1, 0) * chunks_ * 128, 0);
    for (int c = 0; c < chunks_; ++c) {
      for (int val = 0; val < 128; ++val) {
        uint64_t part = static_cast<uint64_t>(val) << (7 * c);
        Graph g = decode_slow(part);
        for (int v = 0; v < n; ++v) {
          rows_[(v * chunks_ + c) * 128 + val] =
              static_cast<uint8_t>(g.neighbors(v));
        }
        for (int i = 0; i + 1 < n; ++i) {
          std::vector<int> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          std::swap(perm[i], perm[i + 1]);
          swaps_[(i * chunks_ + c) * 128 + val] =
              encode_slow(permute(g, perm));
        }
      }
    }
    clique_.assign(1 << n, 0);
    for (int s = 0; s < (1 << n); ++s) {
      uint64_t m = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (((s >> a) & 1) && ((s >> b) & 1)) m |= uint64_t{1} << pair_bit(n, a, b);
        }
      }
      clique_[s] = m;
    }
  }

  int pairs() const { return e_; }

  uint32_t row(uint64_t code, int v) const {
    uint32_t r = 0;
    const uint8_t* t = &rows_[v * chunks_ * 128];
    for (int c = 0; c < chunks_; ++c) r |= t[c * 128 + ((code >> (7 * c)) & 127)];
    return r;
  }

  uint64_t lc(uint64_t code, int v) const { return code ^ clique_[row(code, v)]; }

  uint64_t swap_adjacent(uint64_t code, int i) const {
    uint64_t r = 0;
    const uint64_t* t = &swaps_[i * chunks_ * 128];
    for (int c = 0; c < chunks_; ++c) r |= t[c * 128 + ((code >> (7 * c)) & 127)];
    return r;
  }

  bool is_connected(uint64_t code) const {
    if (n_ <= 1) return true;
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
      uint32_t next = 0;
      for (int v = 0; v < n_; ++v) {
        if ((frontier >> v) & 1) next |= row(code, v);
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1u << n_) - 1;
  }

 private:
  Graph decode_slow(uint64_t code) const { return graph_from_code(n_, code); }
  uint64_t encode_slow(const Graph& g) const { return upper_triangle_code(g); }

  int n_;
  int e_;
  int chunks_;
  std::vector<uint8_t> rows_;
  std::vector<uint64_t> swaps_;
  std::vector<uint64_t> clique_;
};

class Bitmap {
 public:
  explicit Bitmap(uint64_t bits) : words_((bits + 63) / 64, 0) {}
  bool test(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  // Returns true when the bit was newly set.
  bool set(uint64_t i) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (words_[i >> 6] & m) return false;
    words_[i >> 6] |= m;
    return true;
  }

 private:
  std::vector<uint64_t> words_;
};

// Marks the class of start and returns (minimum code, size).
std::pair<uint64_t, uint64_t> flood_class(const CodeSpace& cs, int n,
                                          uint64_t start, Bitmap& seen,
                                          std::vector<uint64_t>& stack) {
  uint64_t min_code = start, size = 1;
  seen.set(start);
  stack.assign(1, start);
  while (!stack.empty()) {
    uint64_t c = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      uint64_t d = cs.lc(c, v);
      if (seen.set(d)) {
        ++size;
        min_code = std::min(min_code, d);
        stack.push_back(d);
      }
    }
    for (int i = 0; i + 1 < n; ++i) {
      uint64_t d = cs.swap_adjacent(c, i);
      if (seen.set(d)) {
        ++size;
        min_code = std::min(min_code, d);
        stack.push_back(d);
      }
    }
  }
  return {min_code, size};
}

void require_enumerable(int n) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw GuardError("class enumeration supports 1 <= n <= 8, got " +
                     std::to_string(n));
  }
}

}  // namespace

std::vector<LcIsoClass> enumerate_lc_iso_class_details(int n) {
  require_enumerable(n);
  CodeSpace cs(n);
  uint64_t total = uint64_t{1} << cs.pairs();
  Bitmap seen(total);
  std::vector<uint64_t> stack;
  std::vector<LcIsoClass> out;
  for (uint64_t code = 0; code < total; ++code) {
    if (seen.test(code)) continue;
    if (!cs.is_connected(code)) {
      seen.set(code);
      continue;
    }
    // Codes are scanned in increasing order, so the first unseen member of
    // a class is its minimum.
    auto [min_code, size] = flood_class(cs, n, code, seen, stack);
    out.push_back({graph_from_code(n, min_code), min_code, size});
  }
  return out;
}

std::vector<Graph> enumerate_lc_iso_classes(int n) {
  std::vector<Graph> out;
  for (auto& c : enumerate_lc_iso_class_details(n)) out.push_back(c.key);
  return out;
}

uint64_t class_key(const Graph& g) {
  require_enumerable(g.n());
  CodeSpace cs(g.n());
  Bitmap seen(uint64_t{1} << cs.pairs());
  std::vector<uint64_t> stack;
  return flood_class(cs, g.n(), upper_triangle_code(g), seen, stack).first;
}

}  // namespace stabgraph
