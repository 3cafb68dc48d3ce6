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

#ifndef STABGRAPH_SUBCODE_H_
#define STABGRAPH_SUBCODE_H_

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "stabgraph/graph.h"
#include "stabgraph/pauli.h"

namespace stabgraph {

constexpr int kSubcodeGuard = 16;

struct Subgroup {
  CheckMatrix generators;              // row-reduced
  std::vector<PauliOperator> elements; // filled when m <= kSubcodeGuard
};

// Elements with support inside omega.
Subgroup subcode_stabilizer(const StabilizerGroup& s, VertexSet omega);

struct IndexedSubgroup {
  Subgroup subgroup;
  int index = 1;  // |S| / |subgroup|
};

// Elements acting as identity on qubit i.
IndexedSubgroup single_qubit_subgroup(const StabilizerGroup& s, int i);

struct PiSubgroup {
  CheckMatrix generators;
  int index = 1;
  // Only meaningful when index == 4: S = <A, B> with A and B of full support
  // and X, Y, Z all appearing at every qubit among A, B, AB.
  bool xz_form = false;
};

PiSubgroup pi_subgroup(const StabilizerGroup& s);

// Elements covering j with no covering element of strictly smaller support.
std::vector<PauliOperator> restricted_minimal_elements(const StabilizerGroup& s,
                                                       int j);

// Pairs (i, j), i < j, that are size-2 minimal supports carrying 3 elements.
std::vector<std::pair<int, int>> detect_bell_pairs(const StabilizerGroup& s);

VertexSet trivially_encoded(const StabilizerGroup& s);

struct GeneralizedPauli {
  Eigen::MatrixXcd x;
  Eigen::MatrixXcd z;
};

// Z = diag(q^k), X |k> = |k+1 mod d>, q = exp(2 pi i / d); ZX = qXZ.
GeneralizedPauli generalized_pauli(int d);

}  // namespace stabgraph

#endif  // STABGRAPH_SUBCODE_H_
