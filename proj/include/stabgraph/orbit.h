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

#ifndef STABGRAPH_ORBIT_H_
#define STABGRAPH_ORBIT_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stabgraph/graph.h"

namespace stabgraph {

constexpr size_t kDefaultOrbitGuard = 1000000;

bool connected(const Graph& g);

// Upper-triangle bitstring in row-major pair order (0,1), (0,2), ...,
// (1,2), ...; the first pair is the most significant bit of the code, so
// lexicographic order on bitstrings is numeric order on codes. n <= 11.
uint64_t upper_triangle_code(const Graph& g);
Graph graph_from_code(int n, uint64_t code);
// Lexicographic comparison of the upper-triangle bitstrings, any n.
bool upper_triangle_less(const Graph& a, const Graph& b);

// h has edge {perm[a], perm[b]} exactly when g has edge {a, b}.
Graph permute(const Graph& g, const std::vector<int>& perm);

// Closure of {g} under local complementation, sorted.
std::vector<Graph> lc_orbit(const Graph& g, size_t guard = kDefaultOrbitGuard);

// Fewest edges, ties broken by the least upper-triangle bitstring.
Graph lc_representative(const Graph& g, size_t guard = kDefaultOrbitGuard);

// Minimum code over every vertex permutation of every orbit member. Slow;
// intended as a cross-check for small n.
uint64_t brute_force_class_key(const Graph& g);

struct LcIsoClass {
  Graph key;              // member with the minimum code
  uint64_t code = 0;      // upper_triangle_code(key)
  uint64_t labeled = 0;   // number of labeled graphs in the class
};

constexpr int kMaxEnumerationVertices = 8;

// Classes of connected n-vertex graphs under local complementation and
// vertex relabeling, ordered by key code. n <= 8.
std::vector<LcIsoClass> enumerate_lc_iso_class_details(int n);
std::vector<Graph> enumerate_lc_iso_classes(int n);

// Key of the class containing g, using the same search as the enumeration.
uint64_t class_key(const Graph& g);

}  // namespace stabgraph

#endif  // STABGRAPH_ORBIT_H_
