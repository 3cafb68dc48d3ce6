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

#ifndef STABGRAPH_CLASSIFY_H_
#define STABGRAPH_CLASSIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "stabgraph/graph.h"
#include "stabgraph/pauli.h"

namespace stabgraph {

bool distance_two(const Graph& g);

// Loop over sums of i standard generators with the weight >= i bound.
int distance(const Graph& g);

// Minimum weight over all 2^n - 1 nonidentity elements.
int brute_force_distance(const Graph& g);

constexpr int kMinimalElementGuard = 16;

struct MinimalSupport {
  uint64_t support = 0;
  std::vector<PauliOperator> elements;
};

// Sorted by support mask. Works for codes as well as states.
std::vector<MinimalSupport> minimal_elements(
    const StabilizerGroup& s, int max_n = kMinimalElementGuard);
std::vector<MinimalSupport> minimal_elements(const Graph& g);

// Vertices whose standard generator is a minimal element, found by only
// searching products of generators inside that generator's support.
std::vector<int> minimal_generator_vertices(const Graph& g);

// Every qubit sees X, Y and Z inside the group generated by the minimal
// elements, i.e. the (x_i, z_i) columns of the minimal elements have rank 2.
bool satisfies_msc(const Graph& g);
// Weaker test: neither column of any qubit is all zero.
bool satisfies_msc_column_check(const Graph& g);

bool m_equals_s(const Graph& g);

struct VertexPartition {
  VertexSet v1 = 0, v2 = 0, v3 = 0, v4 = 0;
};

VertexPartition vertex_partition(const Graph& g);

bool has_short_cycles(const Graph& g);

enum class Verdict { Tree, DistanceTwo, SatisfiesMSC, Failed };

struct ClassificationVerdict {
  Verdict tag = Verdict::Failed;
  std::string notes;
};

const char* verdict_name(Verdict v);

// Throws std::invalid_argument for disconnected input.
ClassificationVerdict analyze(const Graph& g);

}  // namespace stabgraph

#endif  // STABGRAPH_CLASSIFY_H_
