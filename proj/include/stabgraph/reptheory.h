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

#ifndef STABGRAPH_REPTHEORY_H_
#define STABGRAPH_REPTHEORY_H_

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stabgraph {

// Dihedral D_n (n even, order 2n) or Heisenberg H_p (p odd prime, order p^3).
struct Group {
  enum Kind { Dihedral, Heisenberg } kind;
  int param;  // n or p

  static Group dihedral(int n);
  static Group heisenberg(int p);
  int order() const;
};

// Dihedral r^t s^k is {t, k, 0}; Heisenberg (x, y, z) is {x, y, z}.
//   dihedral:   (t1,k1)(t2,k2) = (t1+t2, (-1)^t2 k1 + k2)
//   heisenberg: (x,y,z)(x',y',z') = (x+x', y+y'+z x', z+z')
struct GroupElement {
  int c0 = 0, c1 = 0, c2 = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// OneDim carries (a, b); Higher carries k (h for rho, k for sigma).
struct Irrep {
  enum Kind { OneDim, Higher } kind = OneDim;
  int a = 0, b = 0, k = 0;

  static Irrep chi(int a, int b) { return {OneDim, a, b, 0}; }
  static Irrep higher(int k) { return {Higher, 0, 0, k}; }

  friend bool operator==(const Irrep&, const Irrep&) = default;
  friend bool operator<(const Irrep& x, const Irrep& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.k < y.k;
  }
};

using Matrix = Eigen::MatrixXcd;
using Multiset = std::vector<std::pair<Irrep, int>>;

std::vector<GroupElement> group_elements(const Group& g);
GroupElement group_multiply(const Group& g, const GroupElement& x,
                            const GroupElement& y);
std::vector<Irrep> all_irreps(const Group& g);
int irrep_dim(const Group& g, const Irrep& mu);

// Throws std::invalid_argument for labels outside the canonical ranges.
void validate_irrep(const Group& g, const Irrep& mu);
// rho_h is reduced to 1..n/2-1 using rho_h ~ rho_-h; other labels reduced
// mod 2 or mod p. Throws when rho_h is reducible (h = 0 or n/2 mod n).
Irrep canonical_irrep(const Group& g, Irrep mu);

Matrix irrep_matrix(const Group& g, const Irrep& mu, const GroupElement& x);

// "chi:a,b", "rho:h", "sigma:k".
std::string irrep_label(const Group& g, const Irrep& mu);
Irrep parse_irrep(const Group& g, std::string_view s);

struct FusionBlock {
  Irrep irrep;   // canonical label
  Irrep raw;     // index as produced by the change of basis, before
                 // canonicalization; equal to irrep except for dihedral rho
  int offset = 0;
  int dim = 0;
};

struct FusionResult {
  Matrix unitary;                 // U (R1 x R2) U^dagger is block diagonal
  std::vector<FusionBlock> blocks;
  Multiset outputs;               // sorted, multiplicities aggregated
  int type_tag = 0;
};

FusionResult dihedral_fuse(int n, const Irrep& mu1, const Irrep& mu2);
FusionResult heisenberg_fuse(int p, const Irrep& mu1, const Irrep& mu2);
FusionResult fuse(const Group& g, const Irrep& mu1, const Irrep& mu2);

// mu may be a raw block label. Throws std::invalid_argument when no case of
// the recovery table fits.
Irrep recover_mu2(const Group& g, const Irrep& mu1, const Irrep& mu);

struct VerifyReport {
  bool ok = false;
  double max_deviation = 0;
};

VerifyReport verify_decomposition(const Group& g, const Irrep& mu1,
                                  const Irrep& mu2, double tol = 1e-9);

// Multiplicities from character inner products.
Multiset character_fusion_oracle(const Group& g, const Irrep& mu1,
                                 const Irrep& mu2);

bool is_odd_prime(int p);

}  // namespace stabgraph

#endif  // STABGRAPH_REPTHEORY_H_
