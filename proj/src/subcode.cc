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

#include "stabgraph/subcode.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "stabgraph/classify.h"

namespace stabgraph {
namespace {

void check_guard(const StabilizerGroup& s) {
  if (s.m() > kSubcodeGuard || s.n() > kSubcodeGuard) {
    throw GuardError("subcode operations limited to n, m <= " +
                     std::to_string(kSubcodeGuard));
  }
}

// Generator subsets whose product vanishes outside omega.
Subgroup restrict_to(const StabilizerGroup& s, VertexSet omega) {
  const int n = s.n(), m = s.m();
  const CheckMatrix& g = s.generators();
  BinMatrix cond(0, m);
  for (int q = 0; q < n; ++q) {
    if ((omega >> q) & 1) continue;
    for (int block = 0; block < 2; ++block) {
      BinMatrix row(1, m);
      for (int r = 0; r < m; ++r) row.set(0, r, g.bits().get(r, block * n + q));
      cond.append_row(row, 0);
    }
  }
  BinMatrix ker = kernel(cond);
  CheckMatrix raw(n);
  for (size_t r = 0; r < ker.rows(); ++r) {
    uint64_t mask = 0;
    for (int c = 0; c < m; ++c) {
      if (ker.get(r, c)) mask |= uint64_t{1} << c;
    }
    raw.append(subset_product(g, mask));
  }
  Subgroup out{reduce_generators(raw), {}};
  if (out.generators.m() <= kSubcodeGuard) {
    out.elements = enumerate_group(StabilizerGroup(out.generators));
  }
  return out;
}

}  // namespace

Subgroup subcode_stabilizer(const StabilizerGroup& s, VertexSet omega) {
  check_guard(s);
  return restrict_to(s, omega);
}

IndexedSubgroup single_qubit_subgroup(const StabilizerGroup& s, int i) {
  check_guard(s);
  if (i < 0 || i >= s.n()) throw std::out_of_range("qubit index");
  VertexSet all = (uint64_t{1} << s.n()) - 1;
  IndexedSubgroup out{restrict_to(s, all & ~(uint64_t{1} << i)), 1};
  out.index = 1 << (s.m() - out.subgroup.generators.m());
  return out;
}

PiSubgroup pi_subgroup(const StabilizerGroup& s) {
  check_guard(s);
  CheckMatrix all(s.n());
  for (int i = 0; i < s.n(); ++i) {
    for (const auto& p : single_qubit_subgroup(s, i).subgroup.generators.paulis()) {
      all.append(p);
    }
  }
  PiSubgroup out;
  out.generators = reduce_generators(all);
  out.index = 1 << (s.m() - out.generators.m());
  if (out.index == 4 && s.m() == 2) {
    PauliOperator a = s.generator(0), b = s.generator(1);
    PauliOperator c = multiply(a, b);
    uint64_t full = (uint64_t{1} << s.n()) - 1;
    bool ok = support_mask(a) == full && support_mask(b) == full &&
              support_mask(c) == full;
    for (int q = 0; q < s.n() && ok; ++q) {
      char x = a.at(q), y = b.at(q), w = c.at(q);
      ok = x != y && y != w && x != w;
    }
    out.xz_form = ok;
  }
  return out;
}

std::vector<PauliOperator> restricted_minimal_elements(const StabilizerGroup& s,
                                                       int j) {
  check_guard(s);
  if (j < 0 || j >= s.n()) throw std::out_of_range("qubit index");
  const uint64_t size = uint64_t{1} << s.n();
  const uint64_t jb = uint64_t{1} << j;
  std::vector<std::vector<PauliOperator>> by_support(size);
  for_each_element(s, [&](const PauliOperator& p) {
    if (support_mask(p) & jb) by_support[support_mask(p)].push_back(p);
  });
  std::vector<uint8_t> below(size, 0);
  for (uint64_t m = 0; m < size; ++m) below[m] = !by_support[m].empty();
  for (int b = 0; b < s.n(); ++b) {
    for (uint64_t m = 0; m < size; ++m) {
      if ((m >> b) & 1) below[m] |= below[m ^ (uint64_t{1} << b)];
    }
  }
  std::vector<PauliOperator> out;
  for (uint64_t m = 0; m < size; ++m) {
    if (by_support[m].empty()) continue;
    bool minimal = true;
    for (uint64_t r = m; r && minimal; r &= r - 1) {
      if (below[m & ~(r & -r)]) minimal = false;
    }
    if (minimal) out.insert(out.end(), by_support[m].begin(), by_support[m].end());
  }
  return out;
}

std::vector<std::pair<int, int>> detect_bell_pairs(const StabilizerGroup& s) {
  check_guard(s);
  std::vector<std::pair<int, int>> out;
  for (const auto& ms : minimal_elements(s)) {
    if (popcount(ms.support) == 2 && ms.elements.size() == 3) {
      std::vector<int> v = vertex_list(ms.support);
      out.emplace_back(v[0], v[1]);
    }
  }
  return out;
}

VertexSet trivially_encoded(const StabilizerGroup& s) {
  VertexSet used = 0;
  for (const auto& p : s.generators().paulis()) used |= support_mask(p);
  VertexSet all = s.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << s.n()) - 1;
  return all & ~used;
}

GeneralizedPauli generalized_pauli(int d) {
  if (d < 2) throw std::invalid_argument("generalized_pauli needs d >= 2");
  GeneralizedPauli out{Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d)};
  for (int k = 0; k < d; ++k) {
    out.x((k + 1) % d, k) = 1.0;
    out.z(k, k) = std::polar(1.0, 2 * std::numbers::pi * k / d);
  }
  return out;
}

}  // namespace stabgraph
