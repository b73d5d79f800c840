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

#include "ebitcalc/bin_matrix.h"

#include <bit>
#include <utility>

#include "ebitcalc/errors.h"

namespace ebitcalc {

namespace {

size_t words_for(size_t cols) {
    return (cols + 63) / 64;
}

}  // namespace

BinMatrix::BinMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * stride_, 0) {
}

BinMatrix BinMatrix::identity(size_t n) {
    BinMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BinMatrix BinMatrix::from_strings(std::span<const std::string> rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    BinMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ShapeError("ragged rows: row " + std::to_string(r) + " has length " +
                             std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
        }
        for (size_t c = 0; c < cols; c++) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') {
                throw ShapeError(std::string("invalid GF(2) symbol '") + ch + "'");
            }
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

BinMatrix BinMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> copy(rows.begin(), rows.end());
    return from_strings(std::span<const std::string>(copy));
}

BinMatrix BinMatrix::from_ints(const std::vector<std::vector<int>> &rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    BinMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ShapeError("ragged rows in integer matrix");
        }
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, (rows[r][c] & 1) != 0);
        }
    }
    return m;
}

void BinMatrix::add_row(size_t src, size_t dst) {
    uint64_t *d = words_.data() + dst * stride_;
    const uint64_t *s = words_.data() + src * stride_;
    for (size_t w = 0; w < stride_; w++) {
        d[w] ^= s[w];
    }
}

void BinMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t w = 0; w < stride_; w++) {
        std::swap(words_[a * stride_ + w], words_[b * stride_ + w]);
    }
}

bool BinMatrix::row_is_zero(size_t r) const {
    for (uint64_t w : row_words(r)) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool BinMatrix::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

BinMatrix BinMatrix::transpose() const {
    BinMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t w = 0; w < stride_; w++) {
            uint64_t bits = words_[r * stride_ + w];
            while (bits) {
                size_t c = w * 64 + std::countr_zero(bits);
                t.set(c, r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BinMatrix BinMatrix::select_rows(std::span<const size_t> indices) const {
    BinMatrix out(indices.size(), cols_);
    for (size_t k = 0; k < indices.size(); k++) {
        auto src = row_words(indices[k]);
        auto dst = out.row_words(k);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return out;
}

BinMatrix BinMatrix::col_slice(size_t begin, size_t end) const {
    if (begin > end || end > cols_) {
        throw ShapeError("column slice out of range");
    }
    BinMatrix out(rows_, end - begin);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = begin; c < end; c++) {
            if (get(r, c)) {
                out.set(r, c - begin, true);
            }
        }
    }
    return out;
}

std::string BinMatrix::row_str(size_t r) const {
    std::string s(cols_, '0');
    for (size_t c = 0; c < cols_; c++) {
        if (get(r, c)) {
            s[c] = '1';
        }
    }
    return s;
}

std::string BinMatrix::str() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (size_t r = 0; r < rows_; r++) {
        s += row_str(r);
        s += '\n';
    }
    return s;
}

BinMatrix matmul(const BinMatrix &a, const BinMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    BinMatrix out(a.rows(), b.cols());
    const size_t stride = b.words_per_row();
    for (size_t i = 0; i < a.rows(); i++) {
        auto dst = out.row_words(i);
        auto arow = a.row_words(i);
        for (size_t w = 0; w < arow.size(); w++) {
            uint64_t bits = arow[w];
            while (bits) {
                size_t k = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                auto src = b.row_words(k);
                for (size_t x = 0; x < stride; x++) {
                    dst[x] ^= src[x];
                }
            }
        }
    }
    return out;
}

BinMatrix add(const BinMatrix &a, const BinMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("add: shape mismatch");
    }
    BinMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        auto dst = out.row_words(r);
        auto src = b.row_words(r);
        for (size_t w = 0; w < dst.size(); w++) {
            dst[w] ^= src[w];
        }
    }
    return out;
}

BinMatrix direct_sum(const BinMatrix &a, const BinMatrix &b) {
    BinMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            if (a.get(r, c)) {
                out.set(r, c, true);
            }
        }
    }
    for (size_t r = 0; r < b.rows(); r++) {
        for (size_t c = 0; c < b.cols(); c++) {
            if (b.get(r, c)) {
                out.set(a.rows() + r, a.cols() + c, true);
            }
        }
    }
    return out;
}

BinMatrix hstack(const BinMatrix &left, const BinMatrix &right) {
    if (left.rows() != right.rows()) {
        throw ShapeError("hstack: row count mismatch");
    }
    BinMatrix out(left.rows(), left.cols() + right.cols());
    for (size_t r = 0; r < left.rows(); r++) {
        for (size_t c = 0; c < left.cols(); c++) {
            if (left.get(r, c)) {
                out.set(r, c, true);
            }
        }
        for (size_t c = 0; c < right.cols(); c++) {
            if (right.get(r, c)) {
                out.set(r, left.cols() + c, true);
            }
        }
    }
    return out;
}

BinMatrix vstack(const BinMatrix &top, const BinMatrix &bottom) {
    if (top.cols() != bottom.cols()) {
        throw ShapeError("vstack: column count mismatch");
    }
    BinMatrix out(top.rows() + bottom.rows(), top.cols());
    for (size_t r = 0; r < top.rows(); r++) {
        auto src = top.row_words(r);
        std::copy(src.begin(), src.end(), out.row_words(r).begin());
    }
    for (size_t r = 0; r < bottom.rows(); r++) {
        auto src = bottom.row_words(r);
        std::copy(src.begin(), src.end(), out.row_words(top.rows() + r).begin());
    }
    return out;
}

RowReduction row_reduce(const BinMatrix &m) {
    RowReduction out{m, BinMatrix::identity(m.rows()), {}, 0};
    BinMatrix &r = out.reduced;
    BinMatrix &t = out.transform;
    size_t top = 0;
    for (size_t c = 0; c < m.cols() && top < m.rows(); c++) {
        size_t pivot = top;
        while (pivot < m.rows() && !r.get(pivot, c)) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        r.swap_rows(pivot, top);
        t.swap_rows(pivot, top);
        for (size_t k = 0; k < m.rows(); k++) {
            if (k != top && r.get(k, c)) {
                r.add_row(top, k);
                t.add_row(top, k);
            }
        }
        out.pivots.push_back(c);
        top++;
    }
    out.rank = top;
    return out;
}

size_t rank(const BinMatrix &m) {
    BinMatrix r = m;
    size_t top = 0;
    const size_t stride = r.words_per_row();
    for (size_t c = 0; c < m.cols() && top < m.rows(); c++) {
        size_t pivot = top;
        while (pivot < m.rows() && !r.get(pivot, c)) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        r.swap_rows(pivot, top);
        // Forward elimination only; words left of c/64 are already zero below the pivot.
        const size_t w0 = c / 64;
        const uint64_t *src = r.row_words(top).data();
        for (size_t k = top + 1; k < m.rows(); k++) {
            if (r.get(k, c)) {
                uint64_t *dst = r.row_words(k).data();
                for (size_t w = w0; w < stride; w++) {
                    dst[w] ^= src[w];
                }
            }
        }
        top++;
    }
    return top;
}

std::vector<size_t> dependent_rows(const BinMatrix &m) {
    // basis[i] has a one at lead[i] and every other basis vector has a zero there.
    std::vector<std::vector<uint64_t>> basis;
    std::vector<size_t> lead;
    std::vector<size_t> dependent;
    for (size_t r = 0; r < m.rows(); r++) {
        auto words = m.row_words(r);
        std::vector<uint64_t> v(words.begin(), words.end());
        for (size_t i = 0; i < basis.size(); i++) {
            if ((v[lead[i] / 64] >> (lead[i] % 64)) & 1) {
                for (size_t w = 0; w < v.size(); w++) {
                    v[w] ^= basis[i][w];
                }
            }
        }
        size_t first = m.cols();
        for (size_t w = 0; w < v.size(); w++) {
            if (v[w]) {
                first = w * 64 + std::countr_zero(v[w]);
                break;
            }
        }
        if (first == m.cols()) {
            dependent.push_back(r);
            continue;
        }
        for (size_t i = 0; i < basis.size(); i++) {
            if ((basis[i][first / 64] >> (first % 64)) & 1) {
                for (size_t w = 0; w < v.size(); w++) {
                    basis[i][w] ^= v[w];
                }
            }
        }
        basis.push_back(std::move(v));
        lead.push_back(first);
    }
    return dependent;
}

}  // namespace ebitcalc
