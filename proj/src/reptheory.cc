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

#include "stabgraph/reptheory.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>

namespace stabgraph {
namespace {

using cd = std::complex<double>;

int mod(int a, int n) { return ((a % n) + n) % n; }

cd root_of_unity(int e, int n) {
  return std::polar(1.0, 2 * std::numbers::pi * mod(e, n) / n);
}

int inverse_mod(int a, int p) {
  a = mod(a, p);
  for (int x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw std::invalid_argument("no inverse mod p");
}

// No range checks; rho_h accepts any h.
Matrix raw_matrix(const Group& g, const Irrep& mu, const GroupElement& e) {
  const int n = g.param;
  if (g.kind == Group::Dihedral) {
    if (mu.kind == Irrep::OneDim) {
      Matrix m(1, 1);
      m(0, 0) = ((mu.a * e.c0 + mu.b * e.c1) & 1) ? -1.0 : 1.0;
      return m;
    }
    Matrix m = Matrix::Zero(2, 2);
    cd w0 = root_of_unity(mu.k * e.c1, n), w1 = root_of_unity(-mu.k * e.c1, n);
    if (e.c0 == 0) {
      m(0, 0) = w0;
      m(1, 1) = w1;
    } else {
      m(1, 0) = w0;
      m(0, 1) = w1;
    }
    return m;
  }
  if (mu.kind == Irrep::OneDim) {
    Matrix m(1, 1);
    m(0, 0) = root_of_unity(mu.a * e.c0 + mu.b * e.c2, n);
    return m;
  }
  Matrix m = Matrix::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    m(mod(r + e.c0, n), r) = root_of_unity(mu.k * e.c1 + mu.k * e.c2 * r, n);
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

void add_block(FusionResult* r, Irrep canonical, Irrep raw, int dim) {
  int offset = r->blocks.empty()
                   ? 0
                   : r->blocks.back().offset + r->blocks.back().dim;
  r->blocks.push_back({canonical, raw, offset, dim});
}

void finish(FusionResult* r) {
  std::map<Irrep, int> counts;
  for (const auto& b : r->blocks) ++counts[b.irrep];
  r->outputs.assign(counts.begin(), counts.end());
}

// Z^a X^b on C^2.
Matrix w2(int a, int b) {
  Matrix z = Matrix::Identity(2, 2), x = Matrix::Identity(2, 2);
  if (a) z(1, 1) = -1.0;
  if (b) x << 0, 1, 1, 0;
  return z * x;
}

// Z^-a shifted by c: |t> -> omega^{-a t} |t + c>.
Matrix v2(int p, int a, int c) {
  Matrix m = Matrix::Zero(p, p);
  for (int t = 0; t < p; ++t) m(mod(t + c, p), t) = root_of_unity(-a * t, p);
  return m;
}

}  // namespace

Group Group::dihedral(int n) {
  if (n < 4 || n % 2) throw std::invalid_argument("dihedral n must be even and >= 4");
  return {Dihedral, n};
}

Group Group::heisenberg(int p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("heisenberg p must be an odd prime");
  return {Heisenberg, p};
}

int Group::order() const {
  return kind == Dihedral ? 2 * param : param * param * param;
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<GroupElement> group_elements(const Group& g) {
  std::vector<GroupElement> out;
  const int n = g.param;
  if (g.kind == Group::Dihedral) {
    for (int t = 0; t < 2; ++t) {
      for (int k = 0; k < n; ++k) out.push_back({t, k, 0});
    }
  } else {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

GroupElement group_multiply(const Group& g, const GroupElement& x,
                            const GroupElement& y) {
  const int n = g.param;
  if (g.kind == Group::Dihedral) {
    int k1 = y.c0 ? -x.c1 : x.c1;
    return {(x.c0 + y.c0) & 1, mod(k1 + y.c1, n), 0};
  }
  return {mod(x.c0 + y.c0, n), mod(x.c1 + y.c1 + x.c2 * y.c0, n),
          mod(x.c2 + y.c2, n)};
}

std::vector<Irrep> all_irreps(const Group& g) {
  std::vector<Irrep> out;
  const int n = g.param;
  const int one = g.kind == Group::Dihedral ? 2 : n;
  for (int a = 0; a < one; ++a) {
    for (int b = 0; b < one; ++b) out.push_back(Irrep::chi(a, b));
  }
  const int hi = g.kind == Group::Dihedral ? n / 2 - 1 : n - 1;
  for (int k = 1; k <= hi; ++k) out.push_back(Irrep::higher(k));
  return out;
}

int irrep_dim(const Group& g, const Irrep& mu) {
  if (mu.kind == Irrep::OneDim) return 1;
  return g.kind == Group::Dihedral ? 2 : g.param;
}

void validate_irrep(const Group& g, const Irrep& mu) {
  const int n = g.param;
  bool ok;
  if (mu.kind == Irrep::OneDim) {
    int one = g.kind == Group::Dihedral ? 2 : n;
    ok = mu.a >= 0 && mu.a < one && mu.b >= 0 && mu.b < one && mu.k == 0;
  } else {
    int hi = g.kind == Group::Dihedral ? n / 2 - 1 : n - 1;
    ok = mu.k >= 1 && mu.k <= hi && mu.a == 0 && mu.b == 0;
  }
  if (!ok) throw std::invalid_argument("invalid irrep " + irrep_label(g, mu));
}

Irrep canonical_irrep(const Group& g, Irrep mu) {
  const int n = g.param;
  if (mu.kind == Irrep::OneDim) {
    int one = g.kind == Group::Dihedral ? 2 : n;
    return Irrep::chi(mod(mu.a, one), mod(mu.b, one));
  }
  int h = mod(mu.k, n);
  if (g.kind == Group::Heisenberg) {
    if (h == 0) throw std::invalid_argument("sigma_0 is not an irrep");
    return Irrep::higher(h);
  }
  h = std::min(h, n - h);
  if (h == 0 || 2 * h == n) {
    throw std::invalid_argument("rho_" + std::to_string(mu.k) + " is reducible");
  }
  return Irrep::higher(h);
}

Matrix irrep_matrix(const Group& g, const Irrep& mu, const GroupElement& x) {
  validate_irrep(g, mu);
  const int n = g.param;
  bool ok = g.kind == Group::Dihedral
                ? (x.c0 == 0 || x.c0 == 1) && x.c1 >= 0 && x.c1 < n && x.c2 == 0
                : x.c0 >= 0 && x.c0 < n && x.c1 >= 0 && x.c1 < n && x.c2 >= 0 &&
                      x.c2 < n;
  if (!ok) throw std::invalid_argument("group element out of range");
  return raw_matrix(g, mu, x);
}

std::string irrep_label(const Group& g, const Irrep& mu) {
  if (mu.kind == Irrep::OneDim) {
    return "chi:" + std::to_string(mu.a) + "," + std::to_string(mu.b);
  }
  return (g.kind == Group::Dihedral ? "rho:" : "sigma:") + std::to_string(mu.k);
}

Irrep parse_irrep(const Group& g, std::string_view s) {
  auto number = [&](std::string_view t) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
      throw std::invalid_argument("bad irrep label '" + std::string(s) + "'");
    }
    return v;
  };
  Irrep mu;
  const std::string_view higher = g.kind == Group::Dihedral ? "rho:" : "sigma:";
  if (s.starts_with("chi:")) {
    std::string_view rest = s.substr(4);
    size_t comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("bad irrep label '" + std::string(s) + "'");
    }
    mu = Irrep::chi(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
  } else if (s.starts_with(higher)) {
    mu = Irrep::higher(number(s.substr(higher.size())));
  } else {
    throw std::invalid_argument("bad irrep label '" + std::string(s) + "'");
  }
  validate_irrep(g, mu);
  return mu;
}

FusionResult dihedral_fuse(int n, const Irrep& mu1, const Irrep& mu2) {
  const Group g = Group::dihedral(n);
  validate_irrep(g, mu1);
  validate_irrep(g, mu2);
  FusionResult r;
  if (mu1.kind == Irrep::OneDim && mu2.kind == Irrep::OneDim) {
    r.type_tag = 1;
    r.unitary = Matrix::Identity(1, 1);
    Irrep out = Irrep::chi(mu1.a ^ mu2.a, mu1.b ^ mu2.b);
    add_block(&r, out, out, 1);
  } else if (mu1.kind != mu2.kind) {
    const Irrep& chi = mu1.kind == Irrep::OneDim ? mu1 : mu2;
    const Irrep& rho = mu1.kind == Irrep::OneDim ? mu2 : mu1;
    r.type_tag = mu1.kind == Irrep::OneDim ? 2 : 3;
    r.unitary = w2(chi.a, chi.b);
    Irrep out = Irrep::higher(chi.b ? n / 2 - rho.k : rho.k);
    add_block(&r, out, out, 2);
  } else {
    r.type_tag = 4;
    // Old basis 00, 01, 10, 11 goes to positions 0, 2, 3, 1.
    Matrix w4 = Matrix::Zero(4, 4);
    w4(0, 0) = w4(2, 1) = w4(3, 2) = w4(1, 3) = 1.0;

    struct Piece {
      Irrep irrep, raw;
      int dim;
      Matrix rows;  // rows of the final change of basis in the W4 basis
    };
    std::vector<Piece> ones, twos;
    const double s = 1 / std::sqrt(2.0);
    const int raws[2] = {mod(mu1.k + mu2.k, n), mod(mu1.k - mu2.k, n)};
    for (int half = 0; half < 2; ++half) {
      const int h = raws[half], o = 2 * half;
      if (h == 0 || 2 * h == n) {
        int b = h == 0 ? 0 : 1;
        Matrix plus = Matrix::Zero(1, 4), minus = Matrix::Zero(1, 4);
        plus(0, o) = plus(0, o + 1) = s;
        minus(0, o) = s;
        minus(0, o + 1) = -s;
        ones.push_back({Irrep::chi(0, b), Irrep::chi(0, b), 1, plus});
        ones.push_back({Irrep::chi(1, b), Irrep::chi(1, b), 1, minus});
      } else {
        Matrix rows = Matrix::Zero(2, 4);
        if (2 * h < n) {
          rows(0, o) = rows(1, o + 1) = 1.0;
        } else {
          rows(0, o + 1) = rows(1, o) = 1.0;
        }
        twos.push_back({Irrep::higher(std::min(h, n - h)), Irrep::higher(h), 2, rows});
      }
    }
    std::stable_sort(ones.begin(), ones.end(), [](const Piece& x, const Piece& y) {
      return std::pair(x.irrep.b, x.irrep.a) < std::pair(y.irrep.b, y.irrep.a);
    });
    Matrix m(4, 4);
    int row = 0;
    for (auto* list : {&ones, &twos}) {
      for (const Piece& p : *list) {
        m.middleRows(row, p.dim) = p.rows;
        row += p.dim;
        add_block(&r, p.irrep, p.raw, p.dim);
      }
    }
    r.unitary = m * w4;
  }
  finish(&r);
  return r;
}

FusionResult heisenberg_fuse(int p, const Irrep& mu1, const Irrep& mu2) {
  const Group g = Group::heisenberg(p);
  validate_irrep(g, mu1);
  validate_irrep(g, mu2);
  FusionResult r;
  if (mu1.kind == Irrep::OneDim && mu2.kind == Irrep::OneDim) {
    r.type_tag = 1;
    r.unitary = Matrix::Identity(1, 1);
    Irrep out = Irrep::chi(mod(mu1.a + mu2.a, p), mod(mu1.b + mu2.b, p));
    add_block(&r, out, out, 1);
  } else if (mu1.kind != mu2.kind) {
    const Irrep& chi = mu1.kind == Irrep::OneDim ? mu1 : mu2;
    const Irrep& sigma = mu1.kind == Irrep::OneDim ? mu2 : mu1;
    r.type_tag = mu1.kind == Irrep::OneDim ? 2 : 3;
    r.unitary = v2(p, chi.a, mod(inverse_mod(sigma.k, p) * chi.b, p));
    add_block(&r, sigma, sigma, p);
  } else if (mod(mu1.k + mu2.k, p) != 0) {
    r.type_tag = 4;
    const int kk = mod(mu1.k + mu2.k, p), inv = inverse_mod(kk, p);
    r.unitary = Matrix::Zero(p * p, p * p);
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        int u = mod(a - b, p), v = mod((mu1.k * a + mu2.k * b) * inv, p);
        r.unitary(u * p + v, a * p + b) = 1.0;
      }
    }
    for (int w = 0; w < p; ++w) add_block(&r, Irrep::higher(kk), Irrep::higher(kk), p);
  } else {
    r.type_tag = 5;
    r.unitary = Matrix::Zero(p * p, p * p);
    const double s = 1 / std::sqrt(double(p));
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        for (int c = 0; c < p; ++c) {
          r.unitary(mod(a - b, p) * p + c, a * p + b) = s * root_of_unity((a + b) * c, p);
        }
      }
    }
    // Position w * p + v carries a = 2v, b = k1 w.
    for (int w = 0; w < p; ++w) {
      for (int v = 0; v < p; ++v) {
        Irrep out = Irrep::chi(mod(2 * v, p), mod(mu1.k * w, p));
        add_block(&r, out, out, 1);
      }
    }
  }
  finish(&r);
  return r;
}

FusionResult fuse(const Group& g, const Irrep& mu1, const Irrep& mu2) {
  return g.kind == Group::Dihedral ? dihedral_fuse(g.param, mu1, mu2)
                                       : heisenberg_fuse(g.param, mu1, mu2);
}

Irrep recover_mu2(const Group& g, const Irrep& mu1, const Irrep& mu) {
  validate_irrep(g, mu1);
  const int n = g.param;
  const bool one1 = mu1.kind == Irrep::OneDim, one = mu.kind == Irrep::OneDim;
  if (g.kind == Group::Heisenberg) {
    if (one1 && one) return canonical_irrep(g, Irrep::chi(mu.a - mu1.a, mu.b - mu1.b));
    if (one1) return canonical_irrep(g, mu);
    if (one) return canonical_irrep(g, Irrep::higher(-mu1.k));
    if (mod(mu.k - mu1.k, n) == 0) {
      throw std::invalid_argument("no case matches " + irrep_label(g, mu1) + ", " +
                                  irrep_label(g, mu));
    }
    return canonical_irrep(g, Irrep::higher(mu.k - mu1.k));
  }
  if (one1 && one) return Irrep::chi((mu.a + mu1.a) & 1, (mu.b + mu1.b) & 1);
  if (one1) return canonical_irrep(g, Irrep::higher(mu1.b ? n / 2 - mu.k : mu.k));
  if (one) return canonical_irrep(g, Irrep::higher(mu.b ? n / 2 - mu1.k : mu1.k));
  int h = mod(mu.k - mu1.k, n);
  if (h == 0 || 2 * h == n) {
    throw std::invalid_argument("no case matches " + irrep_label(g, mu1) + ", " +
                                irrep_label(g, mu));
  }
  return canonical_irrep(g, Irrep::higher(h));
}

VerifyReport verify_decomposition(const Group& g, const Irrep& mu1,
                                  const Irrep& mu2, double tol) {
  FusionResult r = fuse(g, mu1, mu2);
  VerifyReport rep;
  const Matrix& u = r.unitary;
  for (const GroupElement& e : group_elements(g)) {
    Matrix lhs = u * kron(raw_matrix(g, mu1, e), raw_matrix(g, mu2, e)) * u.adjoint();
    Matrix rhs = Matrix::Zero(lhs.rows(), lhs.cols());
    for (const FusionBlock& b : r.blocks) {
      rhs.block(b.offset, b.offset, b.dim, b.dim) = raw_matrix(g, b.irrep, e);
    }
    rep.max_deviation = std::max(rep.max_deviation, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  rep.ok = rep.max_deviation < tol;
  return rep;
}

Multiset character_fusion_oracle(const Group& g, const Irrep& mu1,
                                 const Irrep& mu2) {
  validate_irrep(g, mu1);
  validate_irrep(g, mu2);
  const auto elems = group_elements(g);
  std::vector<cd> prod(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    prod[i] = raw_matrix(g, mu1, elems[i]).trace() * raw_matrix(g, mu2, elems[i]).trace();
  }
  Multiset out;
  for (const Irrep& mu : all_irreps(g)) {
    cd sum = 0;
    for (size_t i = 0; i < elems.size(); ++i) {
      sum += prod[i] * std::conj(raw_matrix(g, mu, elems[i]).trace());
    }
    sum /= double(elems.size());
    double m = std::round(sum.real());
    if (std::abs(sum - cd(m, 0)) > 1e-9) {
      throw std::logic_error("non-integer multiplicity for " + irrep_label(g, mu));
    }
    if (m > 0) out.emplace_back(mu, int(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stabgraph
