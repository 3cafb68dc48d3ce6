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

#include "stabgraph/f2.h"

#include <stdexcept>
#include <utility>

namespace stabgraph {

BinMatrix::BinMatrix(size_t rows, size_t cols)
    : rows_(rows),
      cols_(cols),
      wpr_((cols + 63) / 64),
      bits_(rows * ((cols + 63) / 64), 0) {}

BinMatrix BinMatrix::identity(size_t n) {
  BinMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinMatrix BinMatrix::from_strings(const std::vector<std::string>& rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  BinMatrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("ragged rows in BinMatrix::from_strings");
    }
    for (size_t c = 0; c < cols; ++c) {
      char ch = rows[r][c];
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("non-binary character in matrix row");
      }
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

bool BinMatrix::get(size_t r, size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BinMatrix::get");
  return (bits_[r * wpr_ + c / 64] >> (c % 64)) & 1;
}

void BinMatrix::set(size_t r, size_t c, bool v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BinMatrix::set");
  uint64_t mask = uint64_t{1} << (c % 64);
  uint64_t& w = bits_[r * wpr_ + c / 64];
  w = v ? (w | mask) : (w & ~mask);
}

void BinMatrix::flip(size_t r, size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BinMatrix::flip");
  bits_[r * wpr_ + c / 64] ^= uint64_t{1} << (c % 64);
}

void BinMatrix::xor_row(size_t dst, size_t src) {
  uint64_t* d = row(dst);
  const uint64_t* s = row(src);
  for (size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BinMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  uint64_t* x = row(a);
  uint64_t* y = row(b);
  for (size_t w = 0; w < wpr_; ++w) std::swap(x[w], y[w]);
}

bool BinMatrix::row_is_zero(size_t r) const {
  const uint64_t* x = row(r);
  for (size_t w = 0; w < wpr_; ++w) {
    if (x[w]) return false;
  }
  return true;
}

void BinMatrix::append_row(const BinMatrix& other, size_t r) {
  if (other.cols_ != cols_) throw std::invalid_argument("append_row: width");
  bits_.insert(bits_.end(), other.row(r), other.row(r) + wpr_);
  ++rows_;
}

void BinMatrix::append_row_word(uint64_t w) {
  if (cols_ > 64) throw std::invalid_argument("append_row_word: cols > 64");
  if (cols_ < 64) w &= (uint64_t{1} << cols_) - 1;
  if (wpr_ == 0) return;
  bits_.push_back(w);
  ++rows_;
}

void BinMatrix::resize_rows(size_t rows) {
  rows_ = rows;
  bits_.resize(rows * wpr_, 0);
}

BinMatrix BinMatrix::transpose() const {
  BinMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

std::string BinMatrix::to_string() const {
  std::string s;
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

RowReduction row_reduce(const BinMatrix& m) {
  RowReduction out{m, 0, {}};
  BinMatrix& a = out.reduced;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t word = c / 64;
    uint64_t mask = uint64_t{1} << (c % 64);
    size_t p = r;
    while (p < a.rows() && !(a.row(p)[word] & mask)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i != r && (a.row(i)[word] & mask)) a.xor_row(i, r);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

size_t rank(const BinMatrix& m) { return row_reduce(m).rank; }

BinMatrix kernel(const BinMatrix& m) {
  RowReduction rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivots) is_pivot[c] = true;
  BinMatrix k(0, m.cols());
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BinMatrix v(1, m.cols());
    v.set(0, f, true);
    for (size_t i = 0; i < rr.rank; ++i) {
      if (rr.reduced.get(i, f)) v.set(0, rr.pivots[i], true);
    }
    k.append_row(v, 0);
  }
  return k;
}

BinMatrix hstack(const BinMatrix& a, const BinMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count");
  BinMatrix out(a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) {
      if (a.get(r, c)) out.set(r, c, true);
    }
    for (size_t c = 0; c < b.cols(); ++c) {
      if (b.get(r, c)) out.set(r, a.cols() + c, true);
    }
  }
  return out;
}

BinMatrix vstack(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col count");
  BinMatrix out = a;
  for (size_t r = 0; r < b.rows(); ++r) out.append_row(b, r);
  return out;
}

BinMatrix multiply(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape");
  BinMatrix out(a.rows(), b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(r, k)) continue;
      uint64_t* d = out.row(r);
      const uint64_t* s = b.row(k);
      for (size_t w = 0; w < out.words_per_row(); ++w) d[w] ^= s[w];
    }
  }
  return out;
}

}  // namespace stabgraph
