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

#ifndef EBITCALC_CLASSICAL_IMPORT_H
#define EBITCALC_CLASSICAL_IMPORT_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ebitcalc/bin_matrix.h"
#include "ebitcalc/fields.h"
#include "ebitcalc/symplectic.h"

namespace ebitcalc {

class Gf4Matrix {
   public:
    Gf4Matrix() = default;
    Gf4Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    /// Rows of symbols from {0, 1, w, v}.
    static Gf4Matrix from_strings(const std::vector<std::string> &rows);
    static Gf4Matrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Gf4 at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    Gf4 &at(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }

    Gf4Matrix transpose() const;
    Gf4Matrix conj() const;
    /// H^dagger: entrywise conjugate of the transpose.
    Gf4Matrix conjugate_transpose() const;
    Gf4Matrix scaled(Gf4 s) const;
    bool is_zero() const;
    std::string str() const;

    bool operator==(const Gf4Matrix &) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Gf4> data_;
};

Gf4Matrix matmul(const Gf4Matrix &a, const Gf4Matrix &b);
/// Rank over GF(4) by Gauss-Jordan elimination (same pivot rule as the GF(2) routine).
size_t rank(const Gf4Matrix &m);

/// CSS check matrix [H1 0 | 0 H2]: H1 rows become Z-type generators, H2 rows X-type.
QuantumCheckMatrix css_construct(const BinMatrix &h1, const BinMatrix &h2,
                                 DependentRows policy = DependentRows::kReject);
/// rank(H1 H2^T) over GF(2).
size_t css_ebits(const BinMatrix &h1, const BinMatrix &h2);
/// [[n, k1 + k2 - n + c, min(d1, d2); c]] with k_i = n - rank(H_i).
CodeParameters css_parameters(const BinMatrix &h1, const BinMatrix &h2, std::optional<size_t> d1 = {},
                              std::optional<size_t> d2 = {});

/// Symplectic image of a GF(4) symbol: the coefficient of w is the X bit and
/// the coefficient of v is the Z bit (1 = w + v maps to both).
struct SymplecticBits {
    bool z = false;
    bool x = false;
    bool operator==(const SymplecticBits &) const = default;
};
SymplecticBits gamma(Gf4 e);
/// Inverse of gamma: w*x + v*z.
Gf4 gamma_inverse(bool z, bool x);

/// Quantum check matrix gamma([w H; v H]) with 2 * H.rows() generators.
QuantumCheckMatrix gf4_to_binary(const Gf4Matrix &h, DependentRows policy = DependentRows::kReject);
/// rank(H H^dagger) over GF(4).
size_t gf4_ebits(const Gf4Matrix &h);
/// [[n, 2k - n + c; c]] with k = n - rank(H).
CodeParameters gf4_parameters(const Gf4Matrix &h);

}  // namespace ebitcalc

#endif
