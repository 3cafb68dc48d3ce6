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

#include "cli.h"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stabgraph/classify.h"
#include "stabgraph/graph.h"
#include "stabgraph/io.h"
#include "stabgraph/lulc.h"
#include "stabgraph/orbit.h"
#include "stabgraph/reptheory.h"
#include "stabgraph/subcode.h"

namespace stabgraph::cli {
namespace {

struct Options {
  std::string in, out, dot, passed, failed;
  bool mark_minimal = false;
  int vertex = 0, neighbor = 0;
  std::string basis = "Z", set, partition;
  size_t guard = kDefaultOrbitGuard;
  uint64_t seed = 1;
  double tol = 0;  // 0 keeps each command's default
  double theta = 0.3;
  int instances = 10;
  std::string group, mu1, mu2;
  int size = 0;
};

std::string format_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : vertex_list(s)) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

// "1,3,4" with 1-based vertices.
VertexSet parse_set(const std::string& text, int n) {
  VertexSet s = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v;
    try {
      size_t used;
      v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad vertex '" + item + "'");
    }
    if (v < 1 || v > n) throw ParseError("vertex " + item + " out of range 1.." + std::to_string(n));
    s |= uint64_t{1} << (v - 1);
  }
  return s;
}

std::vector<Graph> load_graphs(const Options& o) {
  auto graphs = parse_adjacency(read_file(o.in));
  if (graphs.empty()) throw ParseError(o.in + ": no adjacency matrices");
  return graphs;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

void emit_dot(const Options& o, const std::vector<Graph>& graphs) {
  if (o.dot.empty()) return;
  std::string text;
  for (const Graph& g : graphs) {
    VertexSet filled = 0;
    if (o.mark_minimal) filled = vertex_set(minimal_generator_vertices(g));
    text += to_dot(g, filled);
  }
  write_file(o.dot, text);
}

int check_vertex(int v, const Graph& g) {
  if (v < 1 || v > g.n()) {
    throw ParseError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(g.n()));
  }
  return v - 1;
}

std::string record_text(const LocalCliffordRecord& r) {
  std::string out;
  for (const auto& s : r.steps) {
    if (!out.empty()) out += ' ';
    out += gate_name(s.gate);
    out += std::to_string(s.qubit + 1);
  }
  return out.empty() ? "(none)" : out;
}

void cmd_stab2graph(const Options& o, std::ostream& out) {
  StabilizerGroup s = parse_stabilizer(read_file(o.in));
  if (!is_valid_stabilizer(s.generators()) || s.m() != s.n()) {
    throw std::invalid_argument("input is not a valid stabilizer state");
  }
  GraphConversion c = stab_to_graph(s);
  emit(o, out, format_adjacency(c.graph));
  out << "# local Clifford: " << record_text(c.record) << "\n";
  emit_dot(o, {c.graph});
}

void map_graphs(const Options& o, std::ostream& out,
                const std::function<Graph(const Graph&)>& f) {
  std::vector<Graph> result;
  for (const Graph& g : load_graphs(o)) result.push_back(f(g));
  emit(o, out, format_adjacency(result));
  emit_dot(o, result);
}

void cmd_orbit(const Options& o, std::ostream& out) {
  std::string text;
  auto graphs = load_graphs(o);
  for (size_t i = 0; i < graphs.size(); ++i) {
    auto orbit = lc_orbit(graphs[i], o.guard);
    if (i) text += "\n";
    text += "# orbit of graph " + std::to_string(i + 1) + ": " +
            std::to_string(orbit.size()) + " members\n";
    text += format_adjacency(orbit);
  }
  emit(o, out, text);
}

void cmd_standardise(const Options& o, std::ostream& out) {
  std::vector<Graph> reps;
  size_t dropped = 0;
  for (const Graph& g : load_graphs(o)) {
    if (!connected(g)) {
      ++dropped;
      continue;
    }
    reps.push_back(lc_representative(g, o.guard));
  }
  emit(o, out, format_adjacency(reps));
  if (!o.out.empty()) {
    out << reps.size() << " representatives written, " << dropped
        << " disconnected graphs dropped\n";
  }
}

void cmd_distance(const Options& o, std::ostream& out) {
  auto graphs = load_graphs(o);
  for (size_t i = 0; i < graphs.size(); ++i) {
    out << "graph " << i + 1 << ": distance " << distance(graphs[i]) << "\n";
  }
}

void cmd_classify(const Options& o, std::ostream& out) {
  if (o.passed.empty() || o.failed.empty()) {
    throw ParseError("classify needs --passed and --failed");
  }
  std::string passed, failed;
  std::map<std::string, int> counts;
  int n_passed = 0, n_failed = 0;
  for (const Graph& g : load_graphs(o)) {
    // Disconnected graphs are outside the analysis and go to the failed file.
    std::string name = "Disconnected", notes = "not analyzed";
    bool pass = false;
    if (connected(g)) {
      ClassificationVerdict v = analyze(g);
      name = verdict_name(v.tag);
      notes = v.notes;
      pass = v.tag != Verdict::Failed;
    }
    std::string record = "# " + name + ": " + notes + "\n" + format_adjacency(g);
    ++counts[name];
    std::string& dst = pass ? passed : failed;
    int& n = pass ? n_passed : n_failed;
    if (n++) dst += "\n";
    dst += record;
  }
  write_file(o.passed, passed);
  write_file(o.failed, failed);
  out << "passed " << n_passed << ", failed " << n_failed << "\n";
  for (const auto& [name, c] : counts) out << "  " << name << ": " << c << "\n";
}

void cmd_msc(const Options& o, std::ostream& out) {
  auto graphs = load_graphs(o);
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    bool msc = satisfies_msc(g);
    out << "graph " << i + 1 << ": msc " << (msc ? "yes" : "no") << ", M=S "
        << (m_equals_s(g) ? "yes" : "no") << "\n";
    for (const auto& m : minimal_elements(g)) {
      out << "  " << format_set(m.support) << ":";
      for (const auto& p : m.elements) out << " " << to_string(p);
      out << "\n";
    }
  }
  emit_dot(o, graphs);
}

void cmd_schmidt(const Options& o, std::ostream& out) {
  auto graphs = load_graphs(o);
  for (size_t i = 0; i < graphs.size(); ++i) {
    VertexSet a = parse_set(o.set, graphs[i].n());
    out << "graph " << i + 1 << ": schmidt rank " << schmidt_rank(graphs[i], a) << "\n";
  }
}

void cmd_entanglement(const Options& o, std::ostream& out) {
  auto graphs = load_graphs(o);
  for (size_t i = 0; i < graphs.size(); ++i) {
    std::vector<VertexSet> parts;
    std::stringstream ss(o.partition);
    std::string block;
    while (std::getline(ss, block, '|')) parts.push_back(parse_set(block, graphs[i].n()));
    out << "graph " << i + 1 << ": entanglement " << entanglement_measure(graphs[i], parts)
        << "\n";
  }
}

void cmd_partition(const Options& o, std::ostream& out) {
  auto graphs = load_graphs(o);
  for (size_t i = 0; i < graphs.size(); ++i) {
    VertexPartition p = vertex_partition(graphs[i]);
    out << "graph " << i + 1 << ": V1 " << format_set(p.v1) << " V2 " << format_set(p.v2)
        << " V3 " << format_set(p.v3) << " V4 " << format_set(p.v4) << "\n";
  }
}

void cmd_audit(const Options& o, std::ostream& out) {
  StabilizerGroup s = parse_stabilizer(read_file(o.in));
  if (!is_valid_stabilizer(s.generators())) {
    throw std::invalid_argument("generators are not a valid stabilizer group");
  }
  out << "qubit  index\n";
  for (int i = 0; i < s.n(); ++i) {
    out << std::setw(5) << i + 1 << "  " << single_qubit_subgroup(s, i).index << "\n";
  }
  PiSubgroup pi = pi_subgroup(s);
  out << "[S:Pi] " << pi.index << (pi.xz_form ? " (XZ form)" : "") << "\n";
  out << "bell pairs:";
  for (auto [a, b] : detect_bell_pairs(s)) out << " (" << a + 1 << "," << b + 1 << ")";
  out << "\ntrivially encoded: " << format_set(trivially_encoded(s)) << "\n";
}

void cmd_lulc_verify(const Options& o, std::ostream& out) {
  const double tol = o.tol > 0 ? o.tol : 1e-8;
  std::mt19937_64 rng(o.seed);
  int ok = 0, total = 0;
  auto graphs = load_graphs(o);
  for (size_t i = 0; i < graphs.size(); ++i) {
    for (int t = 0; t < o.instances; ++t) {
      LuInstance inst = make_twisted_instance(graphs[i], rng, o.theta);
      LcConstruction c = construct_lc_from_lu(graphs[i], inst.psi_prime, inst.u);
      bool good = 1 - c.fidelity < tol;
      ok += good;
      ++total;
      out << "graph " << i + 1 << " instance " << t + 1 << ": "
          << (good ? "ok" : "FAIL") << " tags";
      for (int tag : c.tags) out << " " << clifford_words()[tag];
      out << (c.degenerate_core ? " (degenerate core)" : "") << "\n";
    }
  }
  out << ok << "/" << total << " recovered\n";
  if (ok != total) throw std::runtime_error("fidelity deficit above tolerance");
}

void print_matrix(std::ostream& out, const Matrix& m) {
  out << std::fixed << std::setprecision(6);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      double re = std::abs(m(r, c).real()) < 5e-7 ? 0.0 : m(r, c).real();
      double im = std::abs(m(r, c).imag()) < 5e-7 ? 0.0 : m(r, c).imag();
      out << (c ? " " : "") << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    }
    out << "\n";
  }
  out.unsetf(std::ios::floatfield);
}

void cmd_cg(const Options& o, std::ostream& out) {
  if (o.group != "dihedral" && o.group != "heisenberg") {
    throw ParseError("--group must be dihedral or heisenberg");
  }
  const Group g = o.group == "dihedral" ? Group::dihedral(o.size)
                                            : Group::heisenberg(o.size);
  Irrep a = parse_irrep(g, o.mu1), b = parse_irrep(g, o.mu2);
  FusionResult r = fuse(g, a, b);
  VerifyReport rep = verify_decomposition(g, a, b, o.tol > 0 ? o.tol : 1e-9);
  out << irrep_label(g, a) << " x " << irrep_label(g, b) << " (type " << r.type_tag << ") ->";
  for (const auto& [mu, m] : r.outputs) {
    out << " " << irrep_label(g, mu);
    if (m > 1) out << "^" << m;
  }
  out << "\nblocks:";
  for (const auto& blk : r.blocks) out << " " << irrep_label(g, blk.irrep);
  out << "\nverified: " << (rep.ok ? "yes" : "no") << " (max deviation " << rep.max_deviation
      << ")\nunitary:\n";
  print_matrix(out, r.unitary);
  if (!rep.ok) throw std::runtime_error("decomposition check failed");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilizer and graph-state analysis"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for generated test data");
  app.add_option("--tol", o.tol, "Override numeric tolerance");

  auto in_opt = [&](CLI::App* sub, const char* what) {
    sub->add_option("--in", o.in, what)->required();
  };
  auto out_opt = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output file (default stdout)");
  };
  auto dot_opt = [&](CLI::App* sub) {
    sub->add_option("--dot", o.dot, "Write Graphviz DOT");
    sub->add_flag("--mark-minimal", o.mark_minimal, "Fill minimal-element vertices black");
  };

  auto* stab2graph = app.add_subcommand("stab2graph", "Convert a stabilizer state to a graph");
  in_opt(stab2graph, "Stabilizer generators, one per line");
  out_opt(stab2graph);
  dot_opt(stab2graph);

  auto* lc = app.add_subcommand("lc", "Local complementation at a vertex");
  in_opt(lc, "Adjacency file");
  lc->add_option("--vertex", o.vertex, "1-based vertex")->required();
  out_opt(lc);
  dot_opt(lc);

  auto* meas = app.add_subcommand("measure", "Pauli measurement rule");
  in_opt(meas, "Adjacency file");
  meas->add_option("--vertex", o.vertex, "1-based vertex")->required();
  meas->add_option("--basis", o.basis, "X, Y or Z")->check(CLI::IsMember({"X", "Y", "Z"}));
  meas->add_option("--neighbor", o.neighbor, "Neighbor used by X measurements");
  out_opt(meas);
  dot_opt(meas);

  auto* orbit = app.add_subcommand("orbit", "LC orbit of each graph");
  in_opt(orbit, "Adjacency file");
  orbit->add_option("--guard", o.guard, "Maximum orbit size");
  out_opt(orbit);

  auto* rep = app.add_subcommand("representative", "Fewest-edge member of each LC orbit");
  in_opt(rep, "Adjacency file");
  rep->add_option("--guard", o.guard, "Maximum orbit size");
  out_opt(rep);
  dot_opt(rep);

  auto* stdz = app.add_subcommand("standardise", "Representatives, disconnected graphs dropped");
  in_opt(stdz, "Adjacency file");
  stdz->add_option("--guard", o.guard, "Maximum orbit size");
  out_opt(stdz);

  auto* dist = app.add_subcommand("distance", "Distance of each graph state");
  in_opt(dist, "Adjacency file");

  auto* cls = app.add_subcommand("classify", "Split graphs into passed and failed");
  in_opt(cls, "Adjacency file");
  cls->add_option("--passed", o.passed, "Passed records")->required();
  cls->add_option("--failed", o.failed, "Failed records")->required();

  auto* msc = app.add_subcommand("msc", "Minimal supports and the MSC");
  in_opt(msc, "Adjacency file");
  dot_opt(msc);

  auto* sch = app.add_subcommand("schmidt", "Schmidt rank across a bipartition");
  in_opt(sch, "Adjacency file");
  sch->add_option("--set", o.set, "Side A, e.g. 1,3")->required();

  auto* ent = app.add_subcommand("entanglement", "Entanglement measure of a partition");
  in_opt(ent, "Adjacency file");
  ent->add_option("--partition", o.partition, "Blocks, e.g. 1,2|3|4,5")->required();

  auto* part = app.add_subcommand("partition", "Vertex classes V1 to V4");
  in_opt(part, "Adjacency file");

  auto* audit = app.add_subcommand("audit", "Single-qubit subgroup indices and Bell pairs");
  in_opt(audit, "Stabilizer generators, one per line");

  auto* lulc = app.add_subcommand("lulc-verify", "Recover LC operations from twisted LU");
  in_opt(lulc, "Adjacency file");
  lulc->add_option("--theta", o.theta, "Twist angle");
  lulc->add_option("--instances", o.instances, "Instances per graph");

  auto* cg = app.add_subcommand("cg", "Clebsch-Gordan decomposition");
  cg->add_option("--group", o.group, "dihedral or heisenberg")->required();
  cg->add_option("--n,--p", o.size, "n for D_n, p for H_p")->required();
  cg->add_option("--mu1", o.mu1, "First irrep label")->required();
  cg->add_option("--mu2", o.mu2, "Second irrep label")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (stab2graph->parsed()) {
      cmd_stab2graph(o, out);
    } else if (lc->parsed()) {
      map_graphs(o, out, [&](const Graph& g) { return local_complement(g, check_vertex(o.vertex, g)); });
    } else if (meas->parsed()) {
      Basis b = o.basis == "X" ? Basis::X : o.basis == "Y" ? Basis::Y : Basis::Z;
      map_graphs(o, out, [&](const Graph& g) {
        std::optional<int> nb;
        if (o.neighbor) nb = check_vertex(o.neighbor, g);
        return measure(g, check_vertex(o.vertex, g), b, nb);
      });
    } else if (orbit->parsed()) {
      cmd_orbit(o, out);
    } else if (rep->parsed()) {
      map_graphs(o, out, [&](const Graph& g) { return lc_representative(g, o.guard); });
    } else if (stdz->parsed()) {
      cmd_standardise(o, out);
    } else if (dist->parsed()) {
      cmd_distance(o, out);
    } else if (cls->parsed()) {
      cmd_classify(o, out);
    } else if (msc->parsed()) {
      cmd_msc(o, out);
    } else if (sch->parsed()) {
      cmd_schmidt(o, out);
    } else if (ent->parsed()) {
      cmd_entanglement(o, out);
    } else if (part->parsed()) {
      cmd_partition(o, out);
    } else if (audit->parsed()) {
      cmd_audit(o, out);
    } else if (lulc->parsed()) {
      cmd_lulc_verify(o, out);
    } else if (cg->parsed()) {
      cmd_cg(o, out);
    }
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace stabgraph::cli
