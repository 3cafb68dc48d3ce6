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

#include "stabgraph/pauli.h"

#include <string>

namespace stabgraph {
namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " +
                                std::to_string(n));
  }
}

void check_same_n(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) throw std::invalid_argument("Pauli length mismatch");
}

}  // namespace

char PauliOperator::at(int q) const {
  bool xb = (x >> q) & 1;
  bool zb = (z >> q) & 1;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

PauliOperator parse_pauli(std::string_view s) {
  PauliOperator p;
  size_t pos = 0;
  if (s.substr(0, 2) == "-i") {
    p.phase = 3;
    pos = 2;
  } else if (s.substr(0, 2) == "+i") {
    p.phase = 1;
    pos = 2;
  } else if (!s.empty() && s[0] == 'i') {
    p.phase = 1;
    pos = 1;
  } else if (!s.empty() && s[0] == '-') {
    p.phase = 2;
    pos = 1;
  } else if (!s.empty() && s[0] == '+') {
    pos = 1;
  }
  int n = static_cast<int>(s.size() - pos);
  if (n == 0) throw ParseError("empty Pauli string");
  if (n > kMaxQubits) throw ParseError("Pauli string longer than 64 qubits");
  p.n = n;
  for (int q = 0; q < n; ++q) {
    char c = s[pos + q];
    switch (c) {
      case 'I': break;
      case 'X': p.x |= uint64_t{1} << q; break;
      case 'Z': p.z |= uint64_t{1} << q; break;
      case 'Y':
        p.x |= uint64_t{1} << q;
        p.z |= uint64_t{1} << q;
        break;
      default:
        throw ParseError("invalid Pauli character '" + std::string(1, c) +
                         "' at position " + std::to_string(pos + q + 1));
    }
  }
  return p;
}

std::string to_string(const PauliOperator& p) {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string s = kPrefix[p.phase & 3];
  for (int q = 0; q < p.n; ++q) s.push_back(p.at(q));
  return s;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  check_same_n(a, b);
  uint64_t ax = a.x & ~a.z, ay = a.x & a.z, az = ~a.x & a.z;
  uint64_t bx = b.x & ~b.z, by = b.x & b.z, bz = ~b.x & b.z;
  // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
  int plus = popcount((ax & by) | (ay & bz) | (az & bx));
  int minus = popcount((ax & bz) | (ay & bx) | (az & by));
  PauliOperator r;
  r.n = a.n;
  r.x = a.x ^ b.x;
  r.z = a.z ^ b.z;
  r.phase = (a.phase + b.phase + plus - minus) & 3;
  return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  check_same_n(p, q);
  return (popcount((p.x & q.z) ^ (p.z & q.x)) & 1) == 0;
}

uint64_t support_mask(const PauliOperator& p) { return p.x | p.z; }

std::vector<int> support(const PauliOperator& p) {
  std::vector<int> out;
  uint64_t m = support_mask(p);
  for (int q = 0; q < p.n; ++q) {
    if ((m >> q) & 1) out.push_back(q);
  }
  return out;
}

int weight(const PauliOperator& p) { return popcount(support_mask(p)); }

PauliOperator conjugate(const PauliOperator& p, ElemGate g, int qubit) {
  if (qubit < 0 || qubit >= p.n) throw std::out_of_range("conjugate: qubit");
  char c = p.at(qubit);
  if (c == 'I') return p;
  char out = c;
  bool neg = false;
  switch (g) {
    case ElemGate::H:
      out = c == 'X' ? 'Z' : c == 'Z' ? 'X' : 'Y';
      neg = c == 'Y';
      break;
    case ElemGate::S:
      out = c == 'X' ? 'Y' : c == 'Y' ? 'X' : 'Z';
      neg = c == 'Y';
      break;
    case ElemGate::Sdg:
      out = c == 'X' ? 'Y' : c == 'Y' ? 'X' : 'Z';
      neg = c == 'X';
      break;
    case ElemGate::X:
      neg = c != 'X';
      break;
    case ElemGate::Z:
      neg = c != 'Z';
      break;
  }
  PauliOperator r = p;
  uint64_t bit = uint64_t{1} << qubit;
  r.x &= ~bit;
  r.z &= ~bit;
  if (out == 'X' || out == 'Y') r.x |= bit;
  if (out == 'Z' || out == 'Y') r.z |= bit;
  if (neg) r.phase = (r.phase + 2) & 3;
  return r;
}

char gate_name(ElemGate g) {
  switch (g) {
    case ElemGate::H: return 'H';
    case ElemGate::S: return 'S';
    case ElemGate::Sdg: return 'D';
    case ElemGate::X: return 'X';
    case ElemGate::Z: return 'Z';
  }
  return '?';
}

CheckMatrix::CheckMatrix(const BinMatrix& bits, std::vector<int> phases)
    : n_(static_cast<int>(bits.cols() / 2)),
      bits_(bits),
      phases_(std::move(phases)) {
  if (bits.cols() % 2 != 0) {
    throw std::invalid_argument("check matrix needs an even column count");
  }
  check_n(n_);
  if (phases_.empty()) phases_.assign(bits.rows(), 0);
  if (phases_.size() != bits.rows()) {
    throw std::invalid_argument("phase vector length differs from rows");
  }
  for (int& ph : phases_) ph &= 3;
}

CheckMatrix CheckMatrix::from_paulis(int n,
                                     const std::vector<PauliOperator>& ps) {
  CheckMatrix c(n);
  for (const auto& p : ps) c.append(p);
  return c;
}

CheckMatrix CheckMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw ParseError("no generators given");
  std::vector<PauliOperator> ps;
  for (const auto& r : rows) ps.push_back(parse_pauli(r));
  for (const auto& p : ps) {
    if (p.n != ps[0].n) throw ParseError("generators of unequal length");
  }
  return from_paulis(ps[0].n, ps);
}

PauliOperator CheckMatrix::row(int r) const {
  PauliOperator p;
  p.n = n_;
  for (int q = 0; q < n_; ++q) {
    if (bits_.get(r, q)) p.x |= uint64_t{1} << q;
    if (bits_.get(r, n_ + q)) p.z |= uint64_t{1} << q;
  }
  p.phase = phases_[r];
  return p;
}

std::vector<PauliOperator> CheckMatrix::paulis() const {
  std::vector<PauliOperator> out;
  for (int r = 0; r < m(); ++r) out.push_back(row(r));
  return out;
}

void CheckMatrix::append(const PauliOperator& p) {
  if (p.n != n_) throw std::invalid_argument("append: Pauli length mismatch");
  BinMatrix one(1, 2 * n_);
  for (int q = 0; q < n_; ++q) {
    if ((p.x >> q) & 1) one.set(0, q, true);
    if ((p.z >> q) & 1) one.set(0, n_ + q, true);
  }
  bits_.append_row(one, 0);
  phases_.push_back(p.phase & 3);
}

BinMatrix CheckMatrix::x_block() const {
  BinMatrix b(bits_.rows(), n_);
  for (size_t r = 0; r < bits_.rows(); ++r) {
    for (int q = 0; q < n_; ++q) b.set(r, q, bits_.get(r, q));
  }
  return b;
}

BinMatrix CheckMatrix::z_block() const {
  BinMatrix b(bits_.rows(), n_);
  for (size_t r = 0; r < bits_.rows(); ++r) {
    for (int q = 0; q < n_; ++q) b.set(r, q, bits_.get(r, n_ + q));
  }
  return b;
}

StabilizerGroup StabilizerGroup::from_strings(
    const std::vector<std::string>& rows) {
  return StabilizerGroup(CheckMatrix::from_strings(rows));
}

namespace {

void visit(const std::vector<PauliOperator>& g, int bit,
           const PauliOperator& acc,
           const std::function<void(const PauliOperator&)>& f) {
  if (bit < 0) {
    f(acc);
    return;
  }
  visit(g, bit - 1, acc, f);
  visit(g, bit - 1, multiply(g[bit], acc), f);
}

}  // namespace

void for_each_element(const StabilizerGroup& s,
                      const std::function<void(const PauliOperator&)>& f,
                      int max_m) {
  if (s.m() > max_m) {
    throw GuardError("enumeration guard exceeded: m=" + std::to_string(s.m()) +
                     " > " + std::to_string(max_m));
  }
  visit(s.generators().paulis(), s.m() - 1, PauliOperator::identity(s.n()), f);
}

std::vector<PauliOperator> enumerate_group(const StabilizerGroup& s,
                                           int max_m) {
  std::vector<PauliOperator> out;
  for_each_element(s, [&](const PauliOperator& p) { out.push_back(p); },
                   max_m);
  return out;
}

bool pairwise_commuting(const CheckMatrix& gens) {
  auto ps = gens.paulis();
  for (size_t i = 0; i < ps.size(); ++i) {
    for (size_t j = i + 1; j < ps.size(); ++j) {
      if (!commutes(ps[i], ps[j])) return false;
    }
  }
  return true;
}

bool is_valid_stabilizer(const CheckMatrix& gens) {
  if (!pairwise_commuting(gens)) return false;
  if (rank(gens.bits()) != static_cast<size_t>(gens.m())) return false;
  // With commuting, independent generators the only way to reach -I is a
  // generator squaring to -I, i.e. an imaginary phase.
  for (int ph : gens.phases()) {
    if (ph & 1) return false;
  }
  return true;
}

PauliOperator subset_product(const CheckMatrix& gens, uint64_t mask) {
  PauliOperator acc = PauliOperator::identity(gens.n());
  for (int i = 0; i < gens.m(); ++i) {
    if ((mask >> i) & 1) acc = multiply(acc, gens.row(i));
  }
  return acc;
}

CheckMatrix reduce_generators(const CheckMatrix& gens) {
  std::vector<PauliOperator> rows = gens.paulis();
  int n = gens.n();
  size_t r = 0;
  for (int c = 0; c < 2 * n && r < rows.size(); ++c) {
    auto has = [&](const PauliOperator& p) {
      return c < n ? ((p.x >> c) & 1) : ((p.z >> (c - n)) & 1);
    };
    size_t p = r;
    while (p < rows.size() && !has(rows[p])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != r && has(rows[i])) rows[i] = multiply(rows[i], rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return CheckMatrix::from_paulis(n, rows);
}

}  // namespace stabgraph
