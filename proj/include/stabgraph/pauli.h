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

#ifndef STABGRAPH_PAULI_H_
#define STABGRAPH_PAULI_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stabgraph/f2.h"

namespace stabgraph {

constexpr int kMaxQubits = 64;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration or size guard is exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// i^phase * P_0 (x) ... (x) P_{n-1} with P_j in {I, X, Y, Z} Hermitian and
// Y = iXZ. Qubit j is bit j of x and z.
struct PauliOperator {
  int n = 0;
  uint64_t x = 0;
  uint64_t z = 0;
  int phase = 0;

  static PauliOperator identity(int n) { return {n, 0, 0, 0}; }

  bool is_identity_pattern() const { return x == 0 && z == 0; }
  // Hermitian operators have real phase.
  bool is_hermitian() const { return (phase & 1) == 0; }
  char at(int q) const;

  friend bool operator==(const PauliOperator& a, const PauliOperator& b) {
    return a.n == b.n && a.x == b.x && a.z == b.z &&
           ((a.phase - b.phase) & 3) == 0;
  }
};

// Optional sign prefix (+, -, i, -i, +i) then characters from IXYZ.
PauliOperator parse_pauli(std::string_view s);
// Sign prefix only when the phase is nonzero.
std::string to_string(const PauliOperator& p);

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliOperator& p, const PauliOperator& q);
uint64_t support_mask(const PauliOperator& p);
// 0-based qubit indices.
std::vector<int> support(const PauliOperator& p);
int weight(const PauliOperator& p);

// Elementary single-qubit Cliffords used for conversion records. The state
// is acted on by U, the Pauli is mapped to U P U^dagger.
enum class ElemGate { H, S, Sdg, X, Z };
PauliOperator conjugate(const PauliOperator& p, ElemGate g, int qubit);
char gate_name(ElemGate g);

// Generators as rows of [B|C] with per-row i-exponents.
class CheckMatrix {
 public:
  CheckMatrix() = default;
  explicit CheckMatrix(int n) : n_(n), bits_(0, 2 * n) {}
  CheckMatrix(const BinMatrix& bits, std::vector<int> phases);

  static CheckMatrix from_paulis(int n, const std::vector<PauliOperator>& ps);
  static CheckMatrix from_strings(const std::vector<std::string>& rows);

  int n() const { return n_; }
  int m() const { return static_cast<int>(bits_.rows()); }
  const BinMatrix& bits() const { return bits_; }
  const std::vector<int>& phases() const { return phases_; }

  PauliOperator row(int r) const;
  std::vector<PauliOperator> paulis() const;
  void append(const PauliOperator& p);

  // X block and Z block as separate n-column matrices.
  BinMatrix x_block() const;
  BinMatrix z_block() const;

 private:
  int n_ = 0;
  BinMatrix bits_;
  std::vector<int> phases_;
};

// Generators are assumed valid (see is_valid_stabilizer).
class StabilizerGroup {
 public:
  StabilizerGroup() = default;
  explicit StabilizerGroup(CheckMatrix gens) : gens_(std::move(gens)) {}
  static StabilizerGroup from_strings(const std::vector<std::string>& rows);

  int n() const { return gens_.n(); }
  int m() const { return gens_.m(); }
  const CheckMatrix& generators() const { return gens_; }
  PauliOperator generator(int i) const { return gens_.row(i); }

 private:
  CheckMatrix gens_;
};

constexpr int kDefaultEnumerationGuard = 24;

// Visits all 2^m products of generator subsets; subset s is visited at
// position s (bit i selects generator i), so the identity comes first.
void for_each_element(const StabilizerGroup& s,
                      const std::function<void(const PauliOperator&)>& f,
                      int max_m = kDefaultEnumerationGuard);
std::vector<PauliOperator> enumerate_group(
    const StabilizerGroup& s, int max_m = kDefaultEnumerationGuard);

bool pairwise_commuting(const CheckMatrix& gens);
bool is_valid_stabilizer(const CheckMatrix& gens);

// Product of the generators selected by mask, in ascending index order.
PauliOperator subset_product(const CheckMatrix& gens, uint64_t mask);

// Row-reduced generators of the F2 span, phases tracked.
CheckMatrix reduce_generators(const CheckMatrix& gens);

}  // namespace stabgraph

#endif  // STABGRAPH_PAULI_H_
