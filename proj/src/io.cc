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

#include "stabgraph/io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stabgraph {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::string where(size_t line) { return "line " + std::to_string(line + 1) + ": "; }

}  // namespace

std::vector<Graph> parse_adjacency(std::string_view text) {
  std::vector<Graph> graphs;
  std::vector<std::vector<int>> rows;
  size_t first_line = 0;
  auto flush = [&] {
    if (rows.empty()) return;
    const size_t n = rows.size();
    if (n > static_cast<size_t>(kMaxQubits)) {
      throw ParseError(where(first_line) + "matrix larger than 64");
    }
    BinMatrix adj(n, n);
    for (size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) {
        throw ParseError(where(first_line + r) + "expected " + std::to_string(n) +
                         " entries, got " + std::to_string(rows[r].size()));
      }
      for (size_t c = 0; c < n; ++c) {
        if (rows[r][c]) adj.set(r, c, true);
      }
    }
    try {
      graphs.push_back(Graph::from_matrix(adj));
    } catch (const std::invalid_argument& e) {
      throw ParseError(where(first_line) + e.what());
    }
    rows.clear();
  };
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (!line.empty() && line.front() == '#') continue;
    if (is_blank(line)) {
      flush();
      continue;
    }
    if (rows.empty()) first_line = i;
    std::vector<int> row;
    for (size_t j = 0; j < line.size(); ++j) {
      char ch = line[j];
      if (ch == ' ' || ch == '\t') continue;
      if (ch != '0' && ch != '1') {
        throw ParseError(where(i) + "unexpected character '" + std::string(1, ch) + "'");
      }
      row.push_back(ch - '0');
    }
    rows.push_back(std::move(row));
  }
  flush();
  return graphs;
}

std::string format_adjacency(const Graph& g) {
  std::string out;
  for (int r = 0; r < g.n(); ++r) {
    for (int c = 0; c < g.n(); ++c) {
      if (c) out += ' ';
      out += g.has_edge(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string format_adjacency(const std::vector<Graph>& graphs) {
  std::string out;
  for (size_t i = 0; i < graphs.size(); ++i) {
    if (i) out += '\n';
    out += format_adjacency(graphs[i]);
  }
  return out;
}

StabilizerGroup parse_stabilizer(std::string_view text) {
  std::vector<PauliOperator> ps;
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (is_blank(line) || line.front() == '#') continue;
    size_t a = line.find_first_not_of(" \t"), b = line.find_last_not_of(" \t");
    PauliOperator p;
    try {
      p = parse_pauli(line.substr(a, b - a + 1));
    } catch (const ParseError& e) {
      throw ParseError(where(i) + e.what());
    }
    if (!ps.empty() && p.n != ps.front().n) {
      throw ParseError(where(i) + "length " + std::to_string(p.n) + " differs from " +
                       std::to_string(ps.front().n));
    }
    ps.push_back(p);
  }
  if (ps.empty()) throw ParseError("no generators");
  return StabilizerGroup(CheckMatrix::from_paulis(ps.front().n, ps));
}

std::string format_stabilizer(const CheckMatrix& c) {
  std::string out;
  for (const auto& p : c.paulis()) out += to_string(p) + "\n";
  return out;
}

std::string to_dot(const Graph& g, VertexSet filled) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) {
    os << "  " << v + 1;
    if ((filled >> v) & 1) os << " [style=filled, fillcolor=black, fontcolor=white]";
    os << ";\n";
  }
  for (auto [a, b] : g.edges()) os << "  " << a + 1 << " -- " << b + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace stabgraph
