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

#ifndef STABGRAPH_LULC_H_
#define STABGRAPH_LULC_H_

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabgraph/graph.h"
#include "stabgraph/pauli.h"

namespace stabgraph {

using Mat2 = Eigen::Matrix2cd;
using StateVector = Eigen::VectorXcd;
// One factor per qubit.
using LocalUnitary = std::vector<Mat2>;

// Basis index bit q holds the value of qubit q.
constexpr int kMaxStateQubits = 12;

Mat2 pauli_matrix(char c);
bool is_unitary(const Mat2& u, double tol = 1e-12);

// The 24 single-qubit Cliffords modulo phase, built breadth-first from words
// in H and S starting at the identity. Entry 0 is I, entry 1 is H, entry 2 is
// S.
const std::vector<Mat2>& clifford_table();
const std::vector<std::string>& clifford_words();
// Index of the table entry equal to u up to global phase, or -1.
int clifford_index(const Mat2& u, double tol = 1e-10);

// If m = s * P for a Pauli P and s = +-1, returns P with phase 0 or 2.
bool as_signed_pauli(const Mat2& m, PauliOperator* out, double tol = 1e-9);

// Lowest table index F with F b F^dagger = Z. b is a one-qubit +-X/Y/Z.
int find_clifford_conjugating(const PauliOperator& b);

// U p U^dagger for a local unitary whose factors are Clifford.
PauliOperator conjugate_local(const PauliOperator& p, const LocalUnitary& u);

StateVector graph_state_vector(const Graph& g);
StateVector stabilizer_state_vector(const StabilizerGroup& s);
StateVector apply_local_unitary(const LocalUnitary& u, const StateVector& v);
StateVector apply_pauli(const PauliOperator& p, const StateVector& v);
// |<a|b>| for unit vectors.
double overlap(const StateVector& a, const StateVector& b);
// Number of singular values above tol across (a, complement).
int schmidt_number(const StateVector& v, int n, VertexSet a, double tol = 1e-8);
// (I + P_q)/2 applied and renormalized; returns false when the branch has
// zero weight.
bool project_plus(const StateVector& v, int q, Basis basis, StateVector* out);

class LuLcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LcConstruction {
  LocalUnitary k;
  std::vector<int> tags;         // clifford_table index per qubit
  bool degenerate_core = false;  // V3 and V4 both empty
  std::vector<std::string> log;  // one line per processed V2 vertex
  double fidelity = 0;           // |<psi_G| K |psi'>|
};

// Builds K with K |psi'> = |psi_G>. Throws LuLcError on precondition
// violations or when a branch cannot be identified.
LcConstruction construct_lc_from_lu(const Graph& g,
                                    const StabilizerGroup& psi_prime,
                                    const LocalUnitary& u);

Mat2 rotation_x(double theta);  // exp(i theta X)
Mat2 rotation_z(double theta);  // exp(i theta Z)

struct LuInstance {
  StabilizerGroup psi_prime;
  LocalUnitary u;
  std::vector<int> lc_tags;  // the hidden LC K' with psi' = K'^dagger psi_G
  int leaf = -1;             // twisted leaf, -1 when the graph has none
  int anchor = -1;           // its neighbor
  double theta = 0;
};

// u = T K' where T = exp(i theta X_leaf) exp(-i theta Z_anchor) fixes
// |psi_G> because X_leaf Z_anchor is a stabilizer element.
LuInstance make_twisted_instance(const Graph& g, std::mt19937_64& rng,
                                 double theta);

}  // namespace stabgraph

#endif  // STABGRAPH_LULC_H_
