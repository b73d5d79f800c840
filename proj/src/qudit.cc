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

#include "ebitcalc/qudit.h"

#include <utility>

#include "ebitcalc/errors.h"

namespace ebitcalc {

bool is_prime(uint64_t d) {
    if (d < 2) {
        return false;
    }
    for (uint64_t p = 2; p * p <= d; p++) {
        if (d % p == 0) {
            return false;
        }
    }
    return true;
}

ModMatrix::ModMatrix(size_t rows, size_t cols, uint32_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
    if (!is_prime(modulus)) {
        throw DomainError("modulus " + std::to_string(modulus) +
                          " is not prime; rank over Z_d is only defined when Z_d is a field");
    }
}

ModMatrix ModMatrix::from_ints(const std::vector<std::vector<int64_t>> &rows, uint32_t modulus) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    ModMatrix m(rows.size(), cols, modulus);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ShapeError("ragged rows in Z_d matrix");
        }
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

void ModMatrix::set(size_t r, size_t c, int64_t value) {
    int64_t d = modulus_;
    data_[r * cols_ + c] = static_cast<uint32_t>(((value % d) + d) % d);
}

ModMatrix ModMatrix::transpose() const {
    ModMatrix t(cols_, rows_, modulus_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.data_[c * rows_ + r] = at(r, c);
        }
    }
    return t;
}

std::string ModMatrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (c) {
                s += ' ';
            }
            s += std::to_string(at(r, c));
        }
        s += '\n';
    }
    return s;
}

ModMatrix matmul(const ModMatrix &a, const ModMatrix &b) {
    if (a.modulus() != b.modulus()) {
        throw ShapeError("Z_d matmul: moduli differ");
    }
    if (a.cols() != b.rows()) {
        throw ShapeError("Z_d matmul: inner dimensions differ");
    }
    const uint64_t d = a.modulus();
    ModMatrix out(a.rows(), b.cols(), a.modulus());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < b.cols(); j++) {
            uint64_t acc = 0;
            for (size_t k = 0; k < a.cols(); k++) {
                acc = (acc + uint64_t{a.at(i, k)} * b.at(k, j)) % d;
            }
            out.set(i, j, static_cast<int64_t>(acc));
        }
    }
    return out;
}

ModMatrix subtract(const ModMatrix &a, const ModMatrix &b) {
    if (a.modulus() != b.modulus() || a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("Z_d subtract: shape or modulus mismatch");
    }
    ModMatrix out(a.rows(), a.cols(), a.modulus());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out.set(r, c, int64_t{a.at(r, c)} - int64_t{b.at(r, c)});
        }
    }
    return out;
}

uint32_t mod_inverse(uint32_t x, uint32_t d) {
    int64_t old_r = x % d, r = d;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) {
        throw DomainError(std::to_string(x) + " has no inverse mod " + std::to_string(d));
    }
    int64_t md = d;
    return static_cast<uint32_t>(((old_s % md) + md) % md);
}

size_t rank(const ModMatrix &m) {
    const uint64_t d = m.modulus();
    std::vector<std::vector<uint64_t>> a(m.rows(), std::vector<uint64_t>(m.cols()));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            a[r][c] = m.at(r, c);
        }
    }
    size_t top = 0;
    for (size_t c = 0; c < m.cols() && top < m.rows(); c++) {
        size_t pivot = top;
        while (pivot < m.rows() && a[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        std::swap(a[pivot], a[top]);
        uint64_t inv = mod_inverse(static_cast<uint32_t>(a[top][c]), static_cast<uint32_t>(d));
        for (size_t j = c; j < m.cols(); j++) {
            a[top][j] = a[top][j] * inv % d;
        }
        for (size_t k = 0; k < m.rows(); k++) {
            uint64_t f = a[k][c];
            if (k == top || f == 0) {
                continue;
            }
            for (size_t j = c; j < m.cols(); j++) {
                a[k][j] = (a[k][j] + (d - f) * a[top][j]) % d;
            }
        }
        top++;
    }
    return top;
}

ModMatrix qudit_symplectic_matrix(const ModMatrix &hz, const ModMatrix &hx) {
    if (hz.modulus() != hx.modulus()) {
        throw ShapeError("qudit check matrix blocks use different moduli");
    }
    if (hz.rows() != hx.rows() || hz.cols() != hx.cols()) {
        throw ShapeError("qudit check matrix blocks differ in shape");
    }
    ModMatrix xz = matmul(hx, hz.transpose());
    return subtract(xz, xz.transpose());
}

size_t qudit_ebits(const ModMatrix &hz, const ModMatrix &hx) {
    size_t r = rank(qudit_symplectic_matrix(hz, hx));
    if (r % 2 != 0) {
        throw InternalError("qudit symplectic matrix has odd rank " + std::to_string(r));
    }
    return r / 2;
}

}  // namespace ebitcalc
