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

#include <cmath>
#include <complex>
#include <deque>

#include "stabgraph/classify.h"
#include "stabgraph/orbit.h"

namespace stabgraph {
namespace {

using cd = std::complex<double>;
const cd kI(0, 1);

void check_state_size(int n) {
  if (n < 0 || n > kMaxStateQubits) {
    throw GuardError("statevector limited to n <= " +
                     std::to_string(kMaxStateQubits));
  }
}

// Removes the global phase so that the first sizable entry is real positive.
Mat2 dephase(const Mat2& u) {
  for (int i = 0; i < 4; ++i) {
    cd c = u(i / 2, i % 2);
    if (std::abs(c) > 1e-6) return u * (std::abs(c) / c);
  }
  return u;
}

struct Table {
  std::vector<Mat2> mats;
  std::vector<std::string> words;
};

const Table& table() {
  static const Table t = [] {
    Mat2 h, s;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    s << 1, 0, 0, kI;
    Table out;
    std::deque<std::pair<Mat2, std::string>> queue{{Mat2::Identity(), ""}};
    while (!queue.empty()) {
      auto [m, w] = queue.front();
      queue.pop_front();
      Mat2 d = dephase(m);
      bool dup = false;
      for (const auto& e : out.mats) {
        if ((e - d).cwiseAbs().maxCoeff() < 1e-9) dup = true;
      }
      if (dup) continue;
      out.mats.push_back(d);
      out.words.push_back(w.empty() ? "I" : w);
      queue.push_back({m * h, w + "H"});
      queue.push_back({m * s, w + "S"});
    }
    return out;
  }();
  return t;
}

}  // namespace

Mat2 pauli_matrix(char c) {
  Mat2 m;
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -kI, kI, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_matrix: bad letter");
  }
  return m;
}

bool is_unitary(const Mat2& u, double tol) {
  return (u * u.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff() < tol;
}

const std::vector<Mat2>& clifford_table() { return table().mats; }
const std::vector<std::string>& clifford_words() { return table().words; }

int clifford_index(const Mat2& u, double tol) {
  Mat2 d = dephase(u);
  const auto& t = clifford_table();
  for (size_t i = 0; i < t.size(); ++i) {
    if ((t[i] - d).cwiseAbs().maxCoeff() < tol) return static_cast<int>(i);
  }
  return -1;
}

bool as_signed_pauli(const Mat2& m, PauliOperator* out, double tol) {
  static const char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  for (char c : kLetters) {
    Mat2 p = pauli_matrix(c);
    for (double sign : {1.0, -1.0}) {
      if ((m - sign * p).cwiseAbs().maxCoeff() < tol) {
        *out = parse_pauli(std::string(1, c));
        if (sign < 0) out->phase = 2;
        return true;
      }
    }
  }
  return false;
}

int find_clifford_conjugating(const PauliOperator& b) {
  if (b.n != 1 || b.is_identity_pattern() || !b.is_hermitian()) {
    throw std::invalid_argument("expected a one-qubit +-X, +-Y or +-Z");
  }
  Mat2 bm = pauli_matrix(b.at(0)) * (b.phase == 2 ? -1.0 : 1.0);
  Mat2 z = pauli_matrix('Z');
  const auto& t = clifford_table();
  for (size_t i = 0; i < t.size(); ++i) {
    if ((t[i] * bm * t[i].adjoint() - z).cwiseAbs().maxCoeff() < 1e-9) {
      return static_cast<int>(i);
    }
  }
  throw std::logic_error("Clifford table is not complete");
}

PauliOperator conjugate_local(const PauliOperator& p, const LocalUnitary& u) {
  if (static_cast<int>(u.size()) != p.n) {
    throw std::invalid_argument("conjugate_local: size mismatch");
  }
  PauliOperator out = PauliOperator::identity(p.n);
  out.phase = p.phase;
  for (int q = 0; q < p.n; ++q) {
    char c = p.at(q);
    if (c == 'I') continue;
    PauliOperator img;
    if (!as_signed_pauli(u[q] * pauli_matrix(c) * u[q].adjoint(), &img)) {
      throw std::invalid_argument("conjugate_local: factor is not Clifford");
    }
    uint64_t bit = uint64_t{1} << q;
    if (img.x & 1) out.x |= bit;
    if (img.z & 1) out.z |= bit;
    out.phase = (out.phase + img.phase) & 3;
  }
  return out;
}

StateVector graph_state_vector(const Graph& g) {
  check_state_size(g.n());
  const uint64_t dim = uint64_t{1} << g.n();
  StateVector v(dim);
  double amp = std::pow(2.0, -0.5 * g.n());
  auto edges = g.edges();
  for (uint64_t y = 0; y < dim; ++y) {
    int f = 0;
    for (auto [a, b] : edges) f += ((y >> a) & 1) & ((y >> b) & 1);
    v[y] = (f & 1) ? -amp : amp;
  }
  return v;
}

namespace {

// p |y> = coefficient * |y ^ p.x>.
cd pauli_coefficient(const PauliOperator& p, uint64_t y) {
  int k = (p.phase + popcount(p.x & p.z) + 2 * popcount(p.z & y)) & 3;
  static const cd kPow[4] = {1, kI, -1, -kI};
  return kPow[k];
}

}  // namespace

StateVector apply_pauli(const PauliOperator& p, const StateVector& v) {
  StateVector out = StateVector::Zero(v.size());
  for (uint64_t y = 0; y < static_cast<uint64_t>(v.size()); ++y) {
    out[y ^ p.x] += pauli_coefficient(p, y) * v[y];
  }
  return out;
}

StateVector stabilizer_state_vector(const StabilizerGroup& s) {
  check_state_size(s.n());
  if (s.m() != s.n() || !is_valid_stabilizer(s.generators())) {
    throw std::invalid_argument("not a valid stabilizer state");
  }
  const uint64_t dim = uint64_t{1} << s.n();
  std::vector<PauliOperator> elems = enumerate_group(s);
  for (uint64_t start = 0; start < dim; ++start) {
    StateVector v = StateVector::Zero(dim);
    for (const auto& e : elems) v[start ^ e.x] += pauli_coefficient(e, start);
    double norm = v.norm();
    if (norm > 1e-6) return v / norm;
  }
  throw std::logic_error("stabilizer projector vanished on every basis state");
}

StateVector apply_local_unitary(const LocalUnitary& u, const StateVector& v) {
  int n = static_cast<int>(u.size());
  if (v.size() != (int64_t{1} << n)) {
    throw std::invalid_argument("apply_local_unitary: dimension mismatch");
  }
  StateVector out = v;
  for (int q = 0; q < n; ++q) {
    uint64_t bit = uint64_t{1} << q;
    for (uint64_t i = 0; i < static_cast<uint64_t>(out.size()); ++i) {
      if (i & bit) continue;
      cd a = out[i], b = out[i | bit];
      out[i] = u[q](0, 0) * a + u[q](0, 1) * b;
      out[i | bit] = u[q](1, 0) * a + u[q](1, 1) * b;
    }
  }
  return out;
}

double overlap(const StateVector& a, const StateVector& b) {
  return std::abs(a.dot(b));
}

int schmidt_number(const StateVector& v, int n, VertexSet a, double tol) {
  std::vector<int> av = vertex_list(a);
  std::vector<int> bv = vertex_list(((uint64_t{1} << n) - 1) & ~a);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(int64_t{1} << av.size(),
                                              int64_t{1} << bv.size());
  for (uint64_t y = 0; y < static_cast<uint64_t>(v.size()); ++y) {
    uint64_t r = 0, c = 0;
    for (size_t i = 0; i < av.size(); ++i) r |= ((y >> av[i]) & 1) << i;
    for (size_t i = 0; i < bv.size(); ++i) c |= ((y >> bv[i]) & 1) << i;
    m(r, c) = v[y];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int count = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > tol) ++count;
  }
  return count;
}

bool project_plus(const StateVector& v, int q, Basis basis, StateVector* out) {
  int n = 0;
  while ((int64_t{1} << n) < v.size()) ++n;
  PauliOperator p = PauliOperator::identity(n);
  uint64_t bit = uint64_t{1} << q;
  if (basis != Basis::Z) p.x = bit;
  if (basis != Basis::X) p.z = bit;
  StateVector w = 0.5 * (v + apply_pauli(p, v));
  double norm = w.norm();
  if (norm < 1e-9) return false;
  *out = w / norm;
  return true;
}

Mat2 rotation_x(double theta) {
  Mat2 m;
  m << std::cos(theta), kI * std::sin(theta), kI * std::sin(theta),
      std::cos(theta);
  return m;
}

Mat2 rotation_z(double theta) {
  Mat2 m;
  m << std::exp(kI * theta), 0, 0, std::exp(-kI * theta);
  return m;
}

namespace {

struct Center {
  int v;
  std::vector<int> leaves;
};

PauliOperator one_qubit(const Mat2& m, const char* what, int q) {
  PauliOperator p;
  if (!as_signed_pauli(m, &p) || p.is_identity_pattern()) {
    throw LuLcError(std::string(what) + " at qubit " + std::to_string(q + 1) +
                    " is not a signed Pauli");
  }
  return p;
}

bool is_diagonal(const Mat2& m, double tol) {
  return std::abs(m(0, 1)) < tol && std::abs(m(1, 0)) < tol;
}

bool is_antidiagonal(const Mat2& m, double tol) {
  return std::abs(m(0, 0)) < tol && std::abs(m(1, 1)) < tol;
}

bool signed_pauli_ok(const Mat2& m) {
  PauliOperator p;
  return as_signed_pauli(m, &p) && !p.is_identity_pattern();
}

}  // namespace

LcConstruction construct_lc_from_lu(const Graph& g,
                                    const StabilizerGroup& psi_prime,
                                    const LocalUnitary& u) {
  const int n = g.n();
  constexpr double kBranchTol = 1e-9;
  if (n < 2 || n > 10) throw LuLcError("graph size must be 2..10");
  if (!connected(g)) throw LuLcError("graph is not connected");
  if (has_short_cycles(g)) throw LuLcError("graph has a 3- or 4-cycle");
  if (static_cast<int>(u.size()) != n) throw LuLcError("u has wrong length");
  for (int q = 0; q < n; ++q) {
    if (!is_unitary(u[q], 1e-10)) {
      throw LuLcError("factor " + std::to_string(q + 1) + " is not unitary");
    }
  }
  if (psi_prime.n() != n || psi_prime.m() != n ||
      !is_valid_stabilizer(psi_prime.generators())) {
    throw LuLcError("psi' is not a valid stabilizer state on n qubits");
  }
  StateVector psi_g = graph_state_vector(g);
  StateVector psi_p = stabilizer_state_vector(psi_prime);
  if (overlap(psi_g, apply_local_unitary(u, psi_p)) < 1 - 1e-8) {
    throw LuLcError("u does not map psi' to the graph state");
  }

  const Mat2 z = pauli_matrix('Z');
  const Mat2 x = pauli_matrix('X');
  Mat2 h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);

  VertexPartition part = vertex_partition(g);
  LcConstruction out;
  out.k = u;  // V3 and V4 keep U_i
  out.degenerate_core = (part.v3 | part.v4) == 0;

  std::vector<Center> centers;
  if (n == 2) {
    // Both ends are leaves; take the first orientation where both
    // conjugated Paulis stay Pauli.
    for (int c = 0; c < 2; ++c) {
      int w = 1 - c;
      if (signed_pauli_ok(u[c].adjoint() * z * u[c]) &&
          signed_pauli_ok(u[w].adjoint() * x * u[w])) {
        centers.push_back({c, {w}});
        break;
      }
    }
    if (centers.empty()) centers.push_back({0, {1}});
  } else {
    for (int v : vertex_list(part.v2)) {
      centers.push_back({v, vertex_list(g.neighbors(v) & part.v1)});
    }
  }

  const auto& table = clifford_table();
  for (const Center& c : centers) {
    const int v = c.v;
    PauliOperator bv = one_qubit(u[v].adjoint() * z * u[v], "U^dagger Z U", v);
    int fv = find_clifford_conjugating(bv);
    Mat2 ut_v = u[v] * table[fv].adjoint();

    std::vector<int> fw;
    std::vector<Mat2> ut_w;
    for (int w : c.leaves) {
      PauliOperator bw =
          one_qubit(u[w].adjoint() * x * u[w], "U^dagger X U", w);
      fw.push_back(find_clifford_conjugating(bw));
      ut_w.push_back(h * u[w] * table[fw.back()].adjoint());
    }

    Mat2 kt_v;
    std::string branch;
    if (is_diagonal(ut_v, kBranchTol)) {
      branch = "diagonal";
      kt_v = ut_v;
      for (size_t j = 0; j < c.leaves.size(); ++j) {
        if (!is_diagonal(ut_w[j], kBranchTol)) {
          throw LuLcError("leaf " + std::to_string(c.leaves[j] + 1) +
                          " is not diagonal after conjugation");
        }
        kt_v = kt_v * ut_w[j];
        out.k[c.leaves[j]] = h * table[fw[j]];
      }
    } else if (is_antidiagonal(ut_v, kBranchTol)) {
      branch = "antidiagonal";
      kt_v = ut_v * x;
      for (size_t j = 0; j < c.leaves.size(); ++j) {
        if (!is_antidiagonal(ut_w[j], kBranchTol)) {
          throw LuLcError("leaf " + std::to_string(c.leaves[j] + 1) +
                          " is not antidiagonal after conjugation");
        }
        kt_v = kt_v * ut_w[j] * x;
        out.k[c.leaves[j]] = h * x * table[fw[j]];
      }
    } else {
      throw LuLcError("vertex " + std::to_string(v + 1) +
                      ": U F^dagger is neither diagonal nor antidiagonal");
    }
    out.k[v] = kt_v * table[fv];
    out.log.push_back("vertex " + std::to_string(v + 1) + ": " + branch +
                      ", F=" + clifford_words()[fv] + ", leaves " +
                      std::to_string(c.leaves.size()));
  }

  for (int q = 0; q < n; ++q) {
    int t = clifford_index(out.k[q], 1e-10);
    if (t < 0) {
      throw LuLcError("factor " + std::to_string(q + 1) +
                      " of the result is not Clifford");
    }
    out.tags.push_back(t);
  }
  out.fidelity = overlap(psi_g, apply_local_unitary(out.k, psi_p));
  if (out.fidelity < 1 - 1e-8) {
    throw LuLcError("constructed LC does not reproduce the graph state");
  }
  return out;
}

LuInstance make_twisted_instance(const Graph& g, std::mt19937_64& rng,
                                 double theta) {
  const int n = g.n();
  LuInstance inst;
  std::uniform_int_distribution<int> pick(0, 23);
  LocalUnitary kprime, kdag;
  for (int q = 0; q < n; ++q) {
    int t = pick(rng);
    inst.lc_tags.push_back(t);
    kprime.push_back(clifford_table()[t]);
    kdag.push_back(clifford_table()[t].adjoint());
  }
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) leaves.push_back(v);
  }
  inst.u = kprime;
  if (!leaves.empty()) {
    std::uniform_int_distribution<size_t> pl(0, leaves.size() - 1);
    inst.leaf = leaves[pl(rng)];
    inst.anchor = __builtin_ctzll(g.neighbors(inst.leaf));
    inst.theta = theta;
    inst.u[inst.leaf] = rotation_x(theta) * kprime[inst.leaf];
    inst.u[inst.anchor] = rotation_z(-theta) * kprime[inst.anchor];
  }
  CheckMatrix gens(n);
  for (const auto& p : standard_generators(g).generators().paulis()) {
    gens.append(conjugate_local(p, kdag));
  }
  inst.psi_prime = StabilizerGroup(gens);
  return inst;
}

}  // namespace stabgraph
