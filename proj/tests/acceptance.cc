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

// Acceptance run: one PASS/FAIL line per criterion. The n = 8 extended run
// is on by default; set STABGRAPH_ACCEPTANCE_QUICK=1 to skip it.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "oracles.h"
#include "stabgraph/classify.h"
#include "stabgraph/lulc.h"
#include "stabgraph/orbit.h"
#include "stabgraph/reptheory.h"
#include "stabgraph/subcode.h"

namespace stabgraph {
namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void skip(int id, const std::string& detail) {
  std::printf("[SKIP] criterion %2d: %s\n", id, detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::set<std::string> as_set(const std::vector<PauliOperator>& v) {
  std::set<std::string> out;
  for (const auto& p : v) out.insert(to_string(p));
  return out;
}

int run() {
  const bool extended = std::getenv("STABGRAPH_ACCEPTANCE_QUICK") == nullptr;
  const int max_n = extended ? 8 : 7;

  // 1. Class counts.
  std::map<int, std::vector<Graph>> classes;
  const size_t want_counts[] = {0, 0, 1, 1, 2, 4, 11, 26, 101};
  auto t0 = std::chrono::steady_clock::now();
  bool counts_ok = true;
  std::string counts;
  for (int n = 2; n <= 7; ++n) {
    classes[n] = enumerate_lc_iso_classes(n);
    counts_ok &= classes[n].size() == want_counts[n];
    counts += fmt("%s%d->%zu", n > 2 ? " " : "", n, classes[n].size());
  }
  double t_small = seconds_since(t0);
  report(1, counts_ok && t_small < 300,
         fmt("class counts %s (want 1 1 2 4 11 26), %.1fs < 300s", counts.c_str(), t_small));
  if (extended) {
    auto t8 = std::chrono::steady_clock::now();
    classes[8] = enumerate_lc_iso_classes(8);
    double s = seconds_since(t8);
    report(1, classes[8].size() == want_counts[8] && s < 3600,
           fmt("extended n=8 -> %zu classes (want 101), %.1fs < 3600s", classes[8].size(), s));
  } else {
    skip(1, "extended n=8 run disabled");
  }

  // 2-6 and 10 share one pass over the classes.
  std::map<int, int> beyond, msc_not_s, failed, lemma, prop, index_bad;
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : classes[n]) {
      const bool msc = satisfies_msc(g);
      if (distance(g) > 2 && !msc) ++beyond[n];
      if (msc && !m_equals_s(g)) ++msc_not_s[n];
      if (analyze(g).tag == Verdict::Failed) ++failed[n];
      if (n > 7) continue;
      for (const auto& m : minimal_elements(g)) {
        size_t c = m.elements.size();
        if (!(c == 1 || (c == 3 && popcount(m.support) % 2 == 0))) ++lemma[n];
      }
      if (distance_two(g) && msc) ++prop[n];
      StabilizerGroup s = standard_generators(g);
      for (int i = 0; i < n; ++i) {
        int idx = single_qubit_subgroup(s, i).index;
        if (idx != 1 && idx != 2 && idx != 4) ++index_bad[n];
      }
      int pi = pi_subgroup(s).index;
      if (pi != 1 && pi != 2 && pi != 4) ++index_bad[n];
    }
  }
  auto sum = [](std::map<int, int>& m, int lo, int hi) {
    int s = 0;
    for (int n = lo; n <= hi; ++n) s += m[n];
    return s;
  };

  report(2, sum(beyond, 2, 7) == 0,
         fmt("classes n<=7 with distance>2 and no MSC: %d (want 0)", sum(beyond, 2, 7)));
  if (extended) {
    report(2, beyond[8] == 0, fmt("n=8 classes with distance>2 and no MSC: %d (want 0)", beyond[8]));
    report(3, msc_not_s[8] == 2 && sum(msc_not_s, 2, 7) == 0,
           fmt("MSC with S!=M: n=8 -> %d (want 2), n<=7 -> %d (want 0)", msc_not_s[8],
               sum(msc_not_s, 2, 7)));
  } else {
    report(3, sum(msc_not_s, 2, 7) == 0,
           fmt("MSC with S!=M at n<=7: %d (want 0)", sum(msc_not_s, 2, 7)));
    skip(3, "n=8 count needs the extended run");
  }
  report(4, sum(failed, 2, max_n) == 0,
         fmt("Failed verdicts for n<=%d: %d (want 0)", max_n, sum(failed, 2, max_n)));
  report(5, sum(lemma, 2, 7) == 0,
         fmt("minimal supports n<=7 with count outside {1, 3 on even support}: %d (want 0)",
             sum(lemma, 2, 7)));
  // The single edge has distance 2 yet satisfies the MSC; the proposition's
  // argument needs a qubit outside the weight-2 support, so n = 2 is out of
  // scope and reported separately.
  report(6, sum(prop, 3, 7) == 0,
         fmt("distance-2 classes n=3..7 satisfying MSC: %d (want 0); n=2 single edge: %d",
             sum(prop, 3, 7), prop[2]));

  // 7. Oracle equivalence.
  {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> pick_n(2, 8);
    int dist_bad = 0;
    for (int t = 0; t < 500; ++t) {
      Graph g = oracle::random_connected_graph(pick_n(rng), rng);
      int want = g.n();
      for (const auto& p : oracle::group_by_products(standard_generators(g))) {
        if (!p.is_identity_pattern()) want = std::min(want, weight(p));
      }
      if (distance(g) != want || brute_force_distance(g) != want) ++dist_bad;
    }
    report(7, dist_bad == 0,
           fmt("distance vs brute force on 500 random connected graphs n<=8: %d mismatches",
               dist_bad));
    std::uniform_int_distribution<int> pick_any(1, 8);
    int id_bad = 0;
    for (int t = 0; t < 200; ++t) {
      Graph g = oracle::random_graph(pick_any(rng), rng);
      VertexSet a = rng() & g.all_vertices();
      std::vector<PauliOperator> filtered;
      for (const auto& p : oracle::group_by_products(standard_generators(g))) {
        if ((support_mask(p) & a) == 0) filtered.push_back(p);
      }
      auto got = oracle::group_by_products(StabilizerGroup(find_id_on_A(g, a)));
      if (as_set(got) != as_set(filtered) || got.size() != filtered.size()) ++id_bad;
    }
    report(7, id_bad == 0,
           fmt("find_id_on_A vs enumeration filter on 200 random graphs n<=8: %d mismatches",
               id_bad));
  }

  // 8. Statevector consistency over every labeled graph with n <= 5.
  {
    double max_dev = 0;
    int schmidt_bad = 0, measure_bad = 0, graphs = 0;
    for (int n = 1; n <= 5; ++n) {
      const int pairs = n * (n - 1) / 2;
      for (uint64_t code = 0; code < (uint64_t{1} << pairs); ++code) {
        Graph g = graph_from_code(n, code);
        ++graphs;
        StateVector psi = oracle::graph_state(g);
        for (const auto& p : standard_generators(g).generators().paulis()) {
          max_dev = std::max(max_dev, (apply_pauli(p, psi) - psi).cwiseAbs().maxCoeff());
        }
        for (VertexSet a = 1; a < g.all_vertices(); ++a) {
          if (schmidt_number(psi, n, a) != 1 << schmidt_rank(g, a)) ++schmidt_bad;
        }
        for (int v = 0; v < n; ++v) {
          for (Basis basis : {Basis::X, Basis::Y, Basis::Z}) {
            std::optional<int> b;
            if (g.degree(v)) b = __builtin_ctzll(g.neighbors(v));
            Graph h = measure(g, v, basis, b);
            StateVector post;
            if (!project_plus(psi, v, basis, &post)) {
              ++measure_bad;
              continue;
            }
            for (VertexSet a = 1; a < g.all_vertices(); ++a) {
              if (schmidt_number(post, n, a) != 1 << schmidt_rank(h, a)) ++measure_bad;
            }
          }
        }
      }
    }
    report(8, max_dev < 1e-10,
           fmt("(a) generator eigenvalue deviation over %d graphs n<=5: %.2e < 1e-10", graphs,
               max_dev));
    report(8, schmidt_bad == 0, fmt("(b) Schmidt number != 2^rank: %d (want 0)", schmidt_bad));
    report(8, measure_bad == 0,
           fmt("(c) post-measurement Schmidt profiles mismatched: %d (want 0)", measure_bad));
  }

  // 9. LC recovery from twisted LU instances.
  {
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<int> pick_n(2, 6);
    std::uniform_real_distribution<double> angle(0.05, 2 * std::numbers::pi - 0.05);
    int ok = 0, total = 0;
    double worst = 0;
    std::string first_error;
    while (total < 200) {
      Graph g = oracle::random_connected_graph(pick_n(rng), rng);
      if (has_short_cycles(g)) continue;
      ++total;
      LuInstance inst = make_twisted_instance(g, rng, angle(rng));
      try {
        LcConstruction c = construct_lc_from_lu(g, inst.psi_prime, inst.u);
        bool clifford = true;
        for (const Mat2& k : c.k) clifford &= clifford_index(k) >= 0;
        worst = std::max(worst, 1 - c.fidelity);
        if (clifford && 1 - c.fidelity < 1e-8) ++ok;
      } catch (const LuLcError& e) {
        if (first_error.empty()) first_error = e.what();
      }
    }
    report(9, ok == total,
           fmt("%d/%d instances recovered, worst fidelity deficit %.2e < 1e-8%s%s", ok, total,
               worst, first_error.empty() ? "" : "; first error: ", first_error.c_str()));
  }

  // 10. Subgroup indices.
  {
    PiSubgroup bell = pi_subgroup(StabilizerGroup::from_strings({"XX", "ZZ"}));
    report(10, sum(index_bad, 2, 7) == 0 && bell.index == 4,
           fmt("indices outside {1,2,4} over classes n<=7: %d; Bell pair [S:Pi] = %d (want 4)",
               sum(index_bad, 2, 7), bell.index));
  }

  // 11. Clebsch-Gordan.
  {
    auto t = std::chrono::steady_clock::now();
    std::vector<Group> specs = {Group::dihedral(4), Group::dihedral(6),
                                    Group::dihedral(8), Group::dihedral(12),
                                    Group::heisenberg(3), Group::heisenberg(5)};
    std::string detail;
    bool ok = true;
    for (const Group& g : specs) {
      int pairs = 0, bad_verify = 0, bad_oracle = 0;
      double worst = 0;
      for (const Irrep& a : all_irreps(g)) {
        for (const Irrep& b : all_irreps(g)) {
          ++pairs;
          VerifyReport rep = verify_decomposition(g, a, b, 1e-9);
          worst = std::max(worst, rep.max_deviation);
          bad_verify += !rep.ok;
          bad_oracle += fuse(g, a, b).outputs != character_fusion_oracle(g, a, b);
        }
      }
      ok &= bad_verify == 0 && bad_oracle == 0;
      detail += fmt("%s%c%d: %d pairs, max dev %.1e, oracle mismatches %d",
                    detail.empty() ? "" : "; ",
                    g.kind == Group::Dihedral ? 'D' : 'H', g.param, pairs, worst,
                    bad_oracle);
    }
    double s = seconds_since(t);
    report(11, ok && s < 120, detail + fmt("; %.1fs < 120s", s));
  }

  // 12. mu2 recovery.
  {
    std::string detail;
    bool ok = true;
    for (const Group& g : {Group::dihedral(8), Group::heisenberg(3),
                               Group::heisenberg(5)}) {
      int checked = 0, bad = 0, canonical_only_ambiguous = 0;
      for (const Irrep& a : all_irreps(g)) {
        for (const Irrep& b : all_irreps(g)) {
          if (irrep_dim(g, a) > irrep_dim(g, b)) continue;
          for (const FusionBlock& blk : fuse(g, a, b).blocks) {
            ++checked;
            if (recover_mu2(g, a, blk.raw) != b) ++bad;
            try {
              if (!(recover_mu2(g, a, blk.irrep) == b)) ++canonical_only_ambiguous;
            } catch (const std::invalid_argument&) {
              ++canonical_only_ambiguous;
            }
          }
        }
      }
      ok &= bad == 0;
      detail += fmt("%s%c%d: %d blocks, %d wrong (canonical label alone: %d ambiguous)",
                    detail.empty() ? "" : "; ",
                    g.kind == Group::Dihedral ? 'D' : 'H', g.param, checked, bad,
                    canonical_only_ambiguous);
    }
    report(12, ok, detail);
  }

  // 13. Generalized Pauli.
  {
    double worst = 0;
    for (int d = 2; d <= 11; ++d) {
      GeneralizedPauli gp = generalized_pauli(d);
      std::complex<double> q = std::polar(1.0, 2 * std::numbers::pi / d);
      worst = std::max(worst, (gp.z * gp.x - q * gp.x * gp.z).cwiseAbs().maxCoeff());
    }
    report(13, worst < 1e-12, fmt("max |ZX - qXZ| for d=2..11: %.2e < 1e-12", worst));
  }

  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace stabgraph

int main() { return stabgraph::run(); }
