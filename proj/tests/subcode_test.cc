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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.h"
#include "stabgraph/orbit.h"

namespace stabgraph {
namespace {

std::set<std::string> as_set(const std::vector<PauliOperator>& v) {
  std::set<std::string> out;
  for (const auto& p : v) out.insert(to_string(p));
  return out;
}

TEST(Subcode, MatchesEnumerationFilter) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(1 + rng() % 6, rng);
    StabilizerGroup s = standard_generators(g);
    VertexSet omega = rng() & g.all_vertices();
    std::vector<PauliOperator> want;
    for (const auto& p : oracle::group_by_products(s)) {
      if ((support_mask(p) & ~omega) == 0) want.push_back(p);
    }
    Subgroup sub = subcode_stabilizer(s, omega);
    EXPECT_EQ(as_set(sub.elements), as_set(want));
    EXPECT_EQ(sub.elements.size(), want.size());
  }
}

TEST(SingleQubit, IndexMatchesCounting) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(2 + rng() % 5, rng);
    StabilizerGroup s = standard_generators(g);
    int i = rng() % g.n();
    size_t kept = 0;
    for (const auto& p : oracle::group_by_products(s)) kept += !((support_mask(p) >> i) & 1);
    IndexedSubgroup sub = single_qubit_subgroup(s, i);
    EXPECT_EQ(static_cast<size_t>(sub.index) * kept, size_t{1} << g.n());
    EXPECT_TRUE(sub.index == 1 || sub.index == 2 || sub.index == 4);
  }
}

TEST(Pi, BellPairHasIndexFourAndXzForm) {
  PiSubgroup pi = pi_subgroup(StabilizerGroup::from_strings({"XX", "ZZ"}));
  EXPECT_EQ(pi.index, 4);
  EXPECT_EQ(pi.generators.m(), 0);
  EXPECT_TRUE(pi.xz_form);
}

TEST(Pi, ProductStateHasIndexOne) {
  PiSubgroup pi = pi_subgroup(StabilizerGroup::from_strings({"XI", "IZ"}));
  EXPECT_EQ(pi.index, 1);
  EXPECT_FALSE(pi.xz_form);
}

TEST(Pi, GhzThreeHasIndexTwo) {
  // Single-qubit subgroups are generated by the ZZ pairs; XXX is missing.
  PiSubgroup pi = pi_subgroup(StabilizerGroup::from_strings({"XXX", "ZZI", "IZZ"}));
  EXPECT_EQ(pi.index, 2);
}

TEST(RestrictedMinimal, CoverTheQubitAndAreMinimal) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_connected_graph(2 + rng() % 5, rng);
    StabilizerGroup s = standard_generators(g);
    int j = rng() % g.n();
    auto all = oracle::group_by_products(s);
    std::set<std::string> want;
    for (const auto& p : all) {
      uint64_t sp = support_mask(p);
      if (!((sp >> j) & 1)) continue;
      bool minimal = true;
      for (const auto& q : all) {
        uint64_t sq = support_mask(q);
        if (((sq >> j) & 1) && sq != sp && (sq & ~sp) == 0) minimal = false;
      }
      if (minimal) want.insert(to_string(p));
    }
    EXPECT_EQ(as_set(restricted_minimal_elements(s, j)), want);
  }
}

TEST(BellPairs, DetectedAsFactors) {
  StabilizerGroup s = StabilizerGroup::from_strings({"XXII", "ZZII", "IIXZ", "IIZX"});
  auto pairs = detect_bell_pairs(s);
  EXPECT_EQ(pairs, (std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(detect_bell_pairs(standard_generators(Graph::path(3))).empty());
}

TEST(TriviallyEncoded, UnusedQubits) {
  StabilizerGroup s = StabilizerGroup::from_strings({"XIX", "ZIZ"});
  EXPECT_EQ(trivially_encoded(s), 0b010u);
}

TEST(GeneralizedPauli, CommutationRelation) {
  for (int d = 2; d <= 11; ++d) {
    GeneralizedPauli gp = generalized_pauli(d);
    std::complex<double> q = std::polar(1.0, 2 * std::numbers::pi / d);
    EXPECT_LT((gp.z * gp.x - q * gp.x * gp.z).cwiseAbs().maxCoeff(), 1e-12) << d;
    EXPECT_LT((gp.x.adjoint() * gp.x - Eigen::MatrixXcd::Identity(d, d)).norm(), 1e-12);
  }
  EXPECT_THROW(generalized_pauli(1), std::invalid_argument);
}

TEST(Guard, LargeGroupsRejected) {
  Graph g = Graph::path(17);
  EXPECT_THROW(pi_subgroup(standard_generators(g)), GuardError);
}

}  // namespace
}  // namespace stabgraph
