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

#include "ebitcalc/classical_import.h"

#include <algorithm>
#include <utility>

#include "ebitcalc/errors.h"

namespace ebitcalc {

Gf4Matrix Gf4Matrix::from_strings(const std::vector<std::string> &rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    Gf4Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ShapeError("ragged rows in GF(4) matrix");
        }
        for (size_t c = 0; c < cols; c++) {
            auto e = Gf4::from_symbol(rows[r][c]);
            if (!e) {
                throw ShapeError(std::string("invalid GF(4) symbol '") + rows[r][c] + "'");
            }
            m.at(r, c) = *e;
        }
    }
    return m;
}

Gf4Matrix Gf4Matrix::identity(size_t n) {
    Gf4Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.at(k, k) = Gf4::one();
    }
    return m;
}

Gf4Matrix Gf4Matrix::transpose() const {
    Gf4Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

Gf4Matrix Gf4Matrix::conj() const {
    Gf4Matrix out = *this;
    for (auto &e : out.data_) {
        e = e.conj();
    }
    return out;
}

Gf4Matrix Gf4Matrix::conjugate_transpose() const {
    return transpose().conj();
}

Gf4Matrix Gf4Matrix::scaled(Gf4 s) const {
    Gf4Matrix out = *this;
    for (auto &e : out.data_) {
        e = s * e;
    }
    return out;
}

bool Gf4Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Gf4 e) { return e.is_zero(); });
}

std::string Gf4Matrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            s += at(r, c).symbol();
        }
        s += '\n';
    }
    return s;
}

Gf4Matrix matmul(const Gf4Matrix &a, const Gf4Matrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("GF(4) matmul: inner dimensions differ");
    }
    Gf4Matrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Gf4 s = a.at(i, k);
            if (s.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out.at(i, j) += s * b.at(k, j);
            }
        }
    }
    return out;
}

size_t rank(const Gf4Matrix &m) {
    Gf4Matrix r = m;
    size_t top = 0;
    for (size_t c = 0; c < r.cols() && top < r.rows(); c++) {
        size_t pivot = top;
        while (pivot < r.rows() && r.at(pivot, c).is_zero()) {
            pivot++;
        }
        if (pivot == r.rows()) {
            continue;
        }
        if (pivot != top) {
            for (size_t j = 0; j < r.cols(); j++) {
                std::swap(r.at(pivot, j), r.at(top, j));
            }
        }
        Gf4 inv = r.at(top, c).inverse();
        for (size_t j = c; j < r.cols(); j++) {
            r.at(top, j) = inv * r.at(top, j);
        }
        for (size_t k = 0; k < r.rows(); k++) {
            Gf4 f = r.at(k, c);
            if (k == top || f.is_zero()) {
                continue;
            }
            for (size_t j = c; j < r.cols(); j++) {
                r.at(k, j) += f * r.at(top, j);
            }
        }
        top++;
    }
    return top;
}

QuantumCheckMatrix css_construct(const BinMatrix &h1, const BinMatrix &h2, DependentRows policy) {
    if (h1.cols() != h2.cols()) {
        throw ShapeError("CSS import: parity check matrices have " + std::to_string(h1.cols()) + " and " +
                         std::to_string(h2.cols()) + " columns");
    }
    BinMatrix hz = vstack(h1, BinMatrix(h2.rows(), h2.cols()));
    BinMatrix hx = vstack(BinMatrix(h1.rows(), h1.cols()), h2);
    return QuantumCheckMatrix::from_blocks(std::move(hz), std::move(hx), policy);
}

size_t css_ebits(const BinMatrix &h1, const BinMatrix &h2) {
    if (h1.cols() != h2.cols()) {
        throw ShapeError("CSS import: parity check matrices have " + std::to_string(h1.cols()) + " and " +
                         std::to_string(h2.cols()) + " columns");
    }
    return rank(matmul(h1, h2.transpose()));
}

CodeParameters css_parameters(const BinMatrix &h1, const BinMatrix &h2, std::optional<size_t> d1,
                              std::optional<size_t> d2) {
    size_t c = css_ebits(h1, h2);
    std::optional<size_t> d;
    if (d1 && d2) {
        d = std::min(*d1, *d2);
    }
    return make_parameters(h1.cols(), rank(h1) + rank(h2), c, d);
}

SymplecticBits gamma(Gf4 e) {
    // a + b*w == (a+b)*w + a*v
    bool a = e.code() & 1;
    bool b = (e.code() >> 1) & 1;
    return SymplecticBits{a, a != b};
}

Gf4 gamma_inverse(bool z, bool x) {
    Gf4 e = Gf4::zero();
    if (x) {
        e += Gf4::omega();
    }
    if (z) {
        e += Gf4::omega_bar();
    }
    return e;
}

QuantumCheckMatrix gf4_to_binary(const Gf4Matrix &h, DependentRows policy) {
    const size_t m = h.rows();
    const size_t n = h.cols();
    BinMatrix hz(2 * m, n);
    BinMatrix hx(2 * m, n);
    const Gf4 scales[2] = {Gf4::omega(), Gf4::omega_bar()};
    for (size_t block = 0; block < 2; block++) {
        for (size_t r = 0; r < m; r++) {
            for (size_t c = 0; c < n; c++) {
                SymplecticBits bits = gamma(scales[block] * h.at(r, c));
                hz.set(block * m + r, c, bits.z);
                hx.set(block * m + r, c, bits.x);
            }
        }
    }
    return QuantumCheckMatrix::from_blocks(std::move(hz), std::move(hx), policy);
}

size_t gf4_ebits(const Gf4Matrix &h) {
    return rank(matmul(h, h.conjugate_transpose()));
}

CodeParameters gf4_parameters(const Gf4Matrix &h) {
    return make_parameters(h.cols(), 2 * rank(h), gf4_ebits(h));
}

}  // namespace ebitcalc
