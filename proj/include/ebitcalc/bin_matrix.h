// Copyright 2026 The ebitcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EBITCALC_BIN_MATRIX_H
#define EBITCALC_BIN_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ebitcalc {

/// Dense matrix over GF(2).
///
/// Rows are bit-packed into 64-bit words, least significant bit first. Padding
/// bits past `cols()` in the last word of a row are always zero, so whole-word
/// comparisons and XORs are valid without masking.
class BinMatrix {
   public:
    BinMatrix() = default;
    BinMatrix(size_t rows, size_t cols);

    static BinMatrix identity(size_t n);
    /// Builds from rows of '0'/'1' characters. All rows must have equal length.
    static BinMatrix from_strings(std::span<const std::string> rows);
    static BinMatrix from_strings(std::initializer_list<std::string_view> rows);
    /// Builds from nested 0/1 integer lists (test and binding convenience).
    static BinMatrix from_ints(const std::vector<std::vector<int>> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t words_per_row() const {
        return stride_;
    }

    bool get(size_t r, size_t c) const {
        return (words_[r * stride_ + c / 64] >> (c % 64)) & 1;
    }
    void set(size_t r, size_t c, bool value) {
        uint64_t mask = uint64_t{1} << (c % 64);
        uint64_t &w = words_[r * stride_ + c / 64];
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(size_t r, size_t c) {
        words_[r * stride_ + c / 64] ^= uint64_t{1} << (c % 64);
    }

    std::span<uint64_t> row_words(size_t r) {
        return {words_.data() + r * stride_, stride_};
    }
    std::span<const uint64_t> row_words(size_t r) const {
        return {words_.data() + r * stride_, stride_};
    }

    /// row[dst] ^= row[src]
    void add_row(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);
    bool row_is_zero(size_t r) const;
    bool is_zero() const;

    BinMatrix transpose() const;
    BinMatrix select_rows(std::span<const size_t> indices) const;
    /// Columns [begin, end) as a new matrix.
    BinMatrix col_slice(size_t begin, size_t end) const;

    /// One line per row of '0'/'1' characters, each terminated by '\n'.
    std::string str() const;
    std::string row_str(size_t r) const;

    bool operator==(const BinMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> words_;
};

BinMatrix matmul(const BinMatrix &a, const BinMatrix &b);
/// Entrywise sum (XOR).
BinMatrix add(const BinMatrix &a, const BinMatrix &b);
BinMatrix direct_sum(const BinMatrix &a, const BinMatrix &b);
BinMatrix hstack(const BinMatrix &left, const BinMatrix &right);
BinMatrix vstack(const BinMatrix &top, const BinMatrix &bottom);

struct RowReduction {
    BinMatrix reduced;    ///< reduced row-echelon form R
    BinMatrix transform;  ///< invertible T with T * M == R
    std::vector<size_t> pivots;
    size_t rank = 0;
};

/// Reduced row-echelon form. Columns are scanned left to right; the pivot for a
/// column is the topmost unprocessed row with a one there, swapped upward.
RowReduction row_reduce(const BinMatrix &m);

/// Same value as row_reduce(m).rank without tracking the transform.
size_t rank(const BinMatrix &m);

/// Indices of rows lying in the span of the rows above them (first-come basis).
std::vector<size_t> dependent_rows(const BinMatrix &m);

}  // namespace ebitcalc

#endif
