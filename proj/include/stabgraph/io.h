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

#ifndef STABGRAPH_IO_H_
#define STABGRAPH_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "stabgraph/graph.h"
#include "stabgraph/pauli.h"

namespace stabgraph {

// Adjacency files hold square 0/1 matrices, one row per line with entries
// separated by single spaces. Matrices are separated by blank lines and
// lines starting with '#' are ignored. Throws ParseError with a 1-based line.
std::vector<Graph> parse_adjacency(std::string_view text);
// Canonical form: no comments, one blank line between matrices, trailing
// newline.
std::string format_adjacency(const std::vector<Graph>& graphs);
std::string format_adjacency(const Graph& g);

// One Pauli string per line; blank and '#' lines are ignored.
StabilizerGroup parse_stabilizer(std::string_view text);
std::string format_stabilizer(const CheckMatrix& c);

// Undirected DOT with 1-based labels; vertices in filled are drawn black.
std::string to_dot(const Graph& g, VertexSet filled = 0);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace stabgraph

#endif  // STABGRAPH_IO_H_
