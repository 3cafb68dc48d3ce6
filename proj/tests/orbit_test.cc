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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.h"
#include "stabgraph/graph.h"

namespace stabgraph {
namespace {

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(Codes, RoundTripAndOrder) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(1 + rng() % 8, rng);
    EXPECT_EQ(graph_from_code(g.n(), upper_triangle_code(g)), g);
  }
  // Edge (0,1) is the most significant bit.
  EXPECT_EQ(upper_triangle_code(Graph::from_edges(3, {{0, 1}})), 0b100u);
  EXPECT_EQ(upper_triangle_code(Graph::from_edges(3, {{1, 2}})), 0b001u);
  EXPECT_TRUE(upper_triangle_less(Graph::from_edges(3, {{1, 2}}),
                                  Graph::from_edges(3, {{0, 1}})));
}

TEST(Connected, Examples) {
  EXPECT_TRUE(connected(Graph::path(5)));
  EXPECT_FALSE(connected(Graph(2)));
  EXPECT_TRUE(connected(Graph(1)));
}

TEST(Orbit, ClosedUnderLocalComplement) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_graph(2 + rng() % 4, rng);
    auto orbit = lc_orbit(g);
    std::set<Graph> set(orbit.begin(), orbit.end());
    EXPECT_TRUE(set.count(g));
    for (const Graph& h : orbit) {
      for (int v = 0; v < h.n(); ++v) EXPECT_TRUE(set.count(local_complement(h, v)));
    }
  }
}

TEST(Orbit, KnownSizes) {
  // The star and the complete graph are one orbit together with the other
  // stars.
  auto orbit = lc_orbit(Graph::complete(4));
  EXPECT_EQ(orbit.size(), 5u);
  EXPECT_EQ(lc_representative(Graph::complete(4)).edge_count(), 3);
  EXPECT_THROW(lc_orbit(Graph::cycle(6), 3), GuardError);
}

TEST(ClassKey, InvariantUnderMovesAndAgreesWithBruteForce) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_connected_graph(2 + rng() % 4, rng);
    uint64_t key = class_key(g);
    Graph h = permute(local_complement(g, rng() % g.n()), random_perm(g.n(), rng));
    EXPECT_EQ(class_key(h), key);
    EXPECT_EQ(brute_force_class_key(g), key);
  }
}

TEST(Enumerate, CountsUpToSeven) {
  const size_t want[] = {0, 0, 1, 1, 2, 4, 11, 26};
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(enumerate_lc_iso_classes(n).size(), want[n]) << n;
}

TEST(Enumerate, LabeledCountsCoverConnectedGraphs) {
  // Connected labeled graphs on 1..6 vertices: 1, 1, 4, 38, 728, 26704.
  const uint64_t connected_labeled[] = {0, 1, 1, 4, 38, 728, 26704};
  for (int n = 2; n <= 6; ++n) {
    uint64_t total = 0;
    for (const auto& c : enumerate_lc_iso_class_details(n)) total += c.labeled;
    EXPECT_EQ(total, connected_labeled[n]) << n;
  }
}

TEST(Enumerate, ClassesAreDistinctAndKeyed) {
  for (int n = 2; n <= 6; ++n) {
    std::set<uint64_t> seen;
    for (const auto& c : enumerate_lc_iso_class_details(n)) {
      EXPECT_TRUE(connected(c.key));
      EXPECT_EQ(c.code, upper_triangle_code(c.key));
      EXPECT_EQ(brute_force_class_key(c.key), c.code);
      EXPECT_TRUE(seen.insert(c.code).second);
    }
  }
}

TEST(Enumerate, RejectsLargeN) {
  EXPECT_THROW(enumerate_lc_iso_classes(9), GuardError);
}

}  // namespace
}  // namespace stabgraph
