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

#ifndef STABGRAPH_F2_H_
#define STABGRAPH_F2_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stabgraph {

// Dense matrix over F2, rows packed into 64-bit words. Column c of a row
// lives in word c / 64, bit c % 64.
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(size_t rows, size_t cols);

  static BinMatrix identity(size_t n);
  // Rows given as strings of '0'/'1'.
  static BinMatrix from_strings(const std::vector<std::string>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t words_per_row() const { return wpr_; }

  bool get(size_t r, size_t c) const;
  void set(size_t r, size_t c, bool v);
  void flip(size_t r, size_t c);

  uint64_t* row(size_t r) { return bits_.data() + r * wpr_; }
  const uint64_t* row(size_t r) const { return bits_.data() + r * wpr_; }
  // First word of row r. Convenient when cols <= 64.
  uint64_t row_word(size_t r) const { return bits_[r * wpr_]; }

  void xor_row(size_t dst, size_t src);
  void swap_rows(size_t a, size_t b);
  bool row_is_zero(size_t r) const;
  void append_row(const BinMatrix& other, size_t r);
  // Appends a row from a single word; requires cols <= 64.
  void append_row_word(uint64_t w);
  void resize_rows(size_t rows);

  BinMatrix transpose() const;
  std::string to_string() const;

  friend bool operator==(const BinMatrix& a, const BinMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  size_t wpr_ = 0;
  std::vector<uint64_t> bits_;
};

struct RowReduction {
  BinMatrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row-echelon form, pivots chosen left to right. Zero rows are kept
// at the bottom so the shape is unchanged.
RowReduction row_reduce(const BinMatrix& m);
size_t rank(const BinMatrix& m);
// Rows form a basis of {v : m v = 0}.
BinMatrix kernel(const BinMatrix& m);

BinMatrix hstack(const BinMatrix& a, const BinMatrix& b);
BinMatrix vstack(const BinMatrix& a, const BinMatrix& b);
BinMatrix multiply(const BinMatrix& a, const BinMatrix& b);

inline int popcount(uint64_t w) { return __builtin_popcountll(w); }

}  // namespace stabgraph

#endif  // STABGRAPH_F2_H_
