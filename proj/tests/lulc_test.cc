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

#include "stabgraph/lulc.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "stabgraph/classify.h"
#include "stabgraph/orbit.h"

namespace stabgraph {
namespace {

bool equal_up_to_phase(const Mat2& a, const Mat2& b) {
  std::complex<double> ip = (b.adjoint() * a).trace() / 2.0;
  return std::abs(std::abs(ip) - 1) < 1e-10 && (a - ip * b).cwiseAbs().maxCoeff() < 1e-10;
}

TEST(CliffordTable, TwentyFourDistinctCliffords) {
  const auto& t = clifford_table();
  ASSERT_EQ(t.size(), 24u);
  EXPECT_TRUE(equal_up_to_phase(t[0], Mat2::Identity()));
  Mat2 h;
  h << 1, 1, 1, -1;
  EXPECT_TRUE(equal_up_to_phase(t[1], h / std::sqrt(2.0)));
  Mat2 s;
  s << 1, 0, 0, std::complex<double>(0, 1);
  EXPECT_TRUE(equal_up_to_phase(t[2], s));
  for (size_t i = 0; i < t.size(); ++i) {
    EXPECT_TRUE(is_unitary(t[i]));
    EXPECT_EQ(clifford_index(t[i] * std::polar(1.0, 0.3 * i)), static_cast<int>(i));
    for (size_t j = 0; j < i; ++j) EXPECT_FALSE(equal_up_to_phase(t[i], t[j]));
    for (char c : {'X', 'Y', 'Z'}) {
      PauliOperator p;
      EXPECT_TRUE(as_signed_pauli(t[i] * pauli_matrix(c) * t[i].adjoint(), &p));
    }
  }
  EXPECT_EQ(clifford_index(rotation_x(0.3)), -1);
}

TEST(CliffordTable, ConjugatingIndexMapsToZ) {
  for (const char* s : {"X", "-X", "Y", "-Y", "Z", "-Z"}) {
    PauliOperator b = parse_pauli(s);
    int f = find_clifford_conjugating(b);
    const Mat2& m = clifford_table()[f];
    PauliOperator got;
    ASSERT_TRUE(as_signed_pauli(m * oracle::dense(b) * m.adjoint(), &got));
    EXPECT_EQ(to_string(got), "Z") << s;
  }
}

TEST(StateVectors, GraphStateMatchesOracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(1 + rng() % 6, rng);
    EXPECT_LT((graph_state_vector(g) - oracle::graph_state(g)).norm(), 1e-12);
    EXPECT_NEAR(overlap(stabilizer_state_vector(standard_generators(g)),
                        oracle::graph_state(g)),
                1.0, 1e-10);
  }
}

TEST(StateVectors, ApplyPauliMatchesDense) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + rng() % 4;
    PauliOperator p{n, rng() & ((1u << n) - 1), rng() & ((1u << n) - 1),
                    static_cast<int>(rng() % 4)};
    Eigen::VectorXcd v = Eigen::VectorXcd::Random(1 << n);
    EXPECT_LT((apply_pauli(p, v) - oracle::dense(p) * v).norm(), 1e-12);
  }
}

TEST(StateVectors, SchmidtNumberIsPowerOfSchmidtRank) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(2 + rng() % 4, rng);
    StateVector v = graph_state_vector(g);
    for (VertexSet a = 1; a < g.all_vertices(); ++a) {
      EXPECT_EQ(schmidt_number(v, g.n(), a), 1 << schmidt_rank(g, a));
    }
  }
}

TEST(StateVectors, MeasurementRulesMatchProjection) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_connected_graph(2 + rng() % 4, rng);
    int v = rng() % g.n();
    StateVector psi = graph_state_vector(g);
    for (Basis basis : {Basis::X, Basis::Y, Basis::Z}) {
      std::optional<int> b;
      if (g.degree(v)) b = __builtin_ctzll(g.neighbors(v));
      Graph h = measure(g, v, basis, b);
      StateVector post;
      ASSERT_TRUE(project_plus(psi, v, basis, &post));
      for (VertexSet a = 1; a < g.all_vertices(); ++a) {
        EXPECT_EQ(schmidt_number(post, g.n(), a), 1 << schmidt_rank(h, a));
      }
    }
  }
}

TEST(Rotations, TwistFixesGraphState) {
  Graph g = Graph::path(4);
  std::mt19937_64 rng(65);
  LuInstance inst = make_twisted_instance(g, rng, 0.41);
  ASSERT_GE(inst.leaf, 0);
  EXPECT_EQ(clifford_index(inst.u[inst.leaf]), -1);
  EXPECT_NEAR(overlap(graph_state_vector(g),
                      apply_local_unitary(inst.u, stabilizer_state_vector(inst.psi_prime))),
              1.0, 1e-10);
}

TEST(LcFromLu, RecoversCliffordOnTrees) {
  std::mt19937_64 rng(66);
  for (const Graph& g : {Graph::path(2), Graph::path(3), Graph::path(5), Graph::star(4),
                         Graph::cycle(5)}) {
    for (int trial = 0; trial < 10; ++trial) {
      LuInstance inst = make_twisted_instance(g, rng, 0.2 + 0.1 * trial);
      LcConstruction c = construct_lc_from_lu(g, inst.psi_prime, inst.u);
      ASSERT_EQ(c.tags.size(), static_cast<size_t>(g.n()));
      for (const Mat2& k : c.k) EXPECT_GE(clifford_index(k), 0);
      EXPECT_GT(c.fidelity, 1 - 1e-8);
    }
  }
}

TEST(LcFromLu, DegenerateCoreFlag) {
  std::mt19937_64 rng(67);
  LuInstance inst = make_twisted_instance(Graph::star(3), rng, 0.3);
  EXPECT_TRUE(construct_lc_from_lu(Graph::star(3), inst.psi_prime, inst.u).degenerate_core);
  inst = make_twisted_instance(Graph::path(5), rng, 0.3);
  EXPECT_FALSE(construct_lc_from_lu(Graph::path(5), inst.psi_prime, inst.u).degenerate_core);
}

TEST(LcFromLu, RejectsBadInputs) {
  std::mt19937_64 rng(68);
  Graph tri = Graph::complete(3);
  LuInstance inst = make_twisted_instance(tri, rng, 0.3);
  EXPECT_THROW(construct_lc_from_lu(tri, inst.psi_prime, inst.u), LuLcError);

  Graph p = Graph::path(3);
  inst = make_twisted_instance(p, rng, 0.3);
  LocalUnitary bad = inst.u;
  bad[0] *= 2.0;
  EXPECT_THROW(construct_lc_from_lu(p, inst.psi_prime, bad), LuLcError);
  bad = inst.u;
  bad[1] = rotation_z(0.7) * bad[1];
  EXPECT_THROW(construct_lc_from_lu(p, inst.psi_prime, bad), LuLcError);
  EXPECT_THROW(construct_lc_from_lu(Graph(3), inst.psi_prime, inst.u), LuLcError);
}

}  // namespace
}  // namespace stabgraph
