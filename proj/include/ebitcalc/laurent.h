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

#ifndef EBITCALC_LAURENT_H
#define EBITCALC_LAURENT_H

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ebitcalc/bin_matrix.h"
#include "ebitcalc/classical_import.h"
#include "ebitcalc/errors.h"
#include "ebitcalc/fields.h"
#include "ebitcalc/symplectic.h"

namespace ebitcalc {

/// Input entries must have all exponents within [-kMaxLaurentExponent, kMaxLaurentExponent].
inline constexpr int kMaxLaurentExponent = 64;

/// Laurent polynomial sum_e c_e D^e over a field F (Gf2 or Gf4).
///
/// Stored densely from the lowest nonzero exponent to the highest. The zero
/// polynomial has no coefficients.
template <typename F>
class LaurentPoly {
   public:
    LaurentPoly() = default;

    static LaurentPoly monomial(F c, int exponent) {
        LaurentPoly p;
        if (!c.is_zero()) {
            p.low_ = exponent;
            p.coeffs_.push_back(c);
        }
        return p;
    }
    static LaurentPoly constant(F c) {
        return monomial(c, 0);
    }
    static LaurentPoly one() {
        return constant(F::one());
    }
    /// D^exponent
    static LaurentPoly d_power(int exponent) {
        return monomial(F::one(), exponent);
    }

    bool is_zero() const {
        return coeffs_.empty();
    }
    /// Preconditions for both: nonzero.
    int min_exponent() const {
        return low_;
    }
    int max_exponent() const {
        return low_ + static_cast<int>(coeffs_.size()) - 1;
    }
    F coeff(int exponent) const {
        if (is_zero() || exponent < low_ || exponent > max_exponent()) {
            return F::zero();
        }
        return coeffs_[exponent - low_];
    }
    /// (exponent, coefficient) for each nonzero term, ascending.
    std::vector<std::pair<int, F>> terms() const {
        std::vector<std::pair<int, F>> out;
        for (size_t k = 0; k < coeffs_.size(); k++) {
            if (!coeffs_[k].is_zero()) {
                out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
            }
        }
        return out;
    }

    /// D -> D^{-1}: exponent e becomes -e.
    LaurentPoly substitute_dinv() const {
        LaurentPoly p;
        if (!is_zero()) {
            p.low_ = -max_exponent();
            p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        }
        return p;
    }
    /// Coefficient-wise field conjugation.
    LaurentPoly conj() const {
        LaurentPoly p = *this;
        for (auto &c : p.coeffs_) {
            c = c.conj();
        }
        return p;
    }
    /// Multiplication by the unit D^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly p = *this;
        if (!p.is_zero()) {
            p.low_ += k;
        }
        return p;
    }

    friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        LaurentPoly p;
        p.low_ = std::min(a.low_, b.low_);
        int high = std::max(a.max_exponent(), b.max_exponent());
        p.coeffs_.resize(static_cast<size_t>(high - p.low_ + 1));
        for (size_t k = 0; k < a.coeffs_.size(); k++) {
            p.coeffs_[a.low_ - p.low_ + k] += a.coeffs_[k];
        }
        for (size_t k = 0; k < b.coeffs_.size(); k++) {
            p.coeffs_[b.low_ - p.low_ + k] += b.coeffs_[k];
        }
        p.normalize();
        return p;
    }
    friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) {
        // Both supported fields have characteristic 2.
        return a + b;
    }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
        LaurentPoly p;
        if (a.is_zero() || b.is_zero()) {
            return p;
        }
        p.low_ = a.low_ + b.low_;
        p.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); i++) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (size_t j = 0; j < b.coeffs_.size(); j++) {
                p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        p.normalize();
        return p;
    }
    LaurentPoly &operator+=(const LaurentPoly &o) {
        return *this = *this + o;
    }
    bool operator==(const LaurentPoly &) const = default;

    /// a / b when b divides a in F[D, D^{-1}]; nullopt otherwise. Precondition: b nonzero.
    friend std::optional<LaurentPoly> divide_exact(const LaurentPoly &a, const LaurentPoly &b) {
        if (a.is_zero()) {
            return LaurentPoly{};
        }
        // Strip D powers so both have a nonzero constant term, then long-divide
        // from the top degree down.
        std::vector<F> rem = a.coeffs_;
        const std::vector<F> &div = b.coeffs_;
        if (rem.size() < div.size()) {
            return std::nullopt;
        }
        const F lead_inv = div.back().inverse();
        std::vector<F> quot(rem.size() - div.size() + 1);
        for (size_t k = quot.size(); k-- > 0;) {
            F q = rem[k + div.size() - 1] * lead_inv;
            quot[k] = q;
            if (q.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < div.size(); j++) {
                rem[k + j] = rem[k + j] - q * div[j];
            }
        }
        for (const F &r : rem) {
            if (!r.is_zero()) {
                return std::nullopt;
            }
        }
        LaurentPoly p;
        p.low_ = a.low_ - b.low_;
        p.coeffs_ = std::move(quot);
        p.normalize();
        return p;
    }

    /// Text form using the file grammar: terms `1`, `D`, `D^k`, `D^-k`, with
    /// a `c*` prefix for coefficients other than 1; "0" for zero.
    std::string str() const {
        if (is_zero()) {
            return "0";
        }
        std::string s;
        for (auto [e, c] : terms()) {
            if (!s.empty()) {
                s += '+';
            }
            std::string term = e == 0 ? "1" : (e == 1 ? "D" : "D^" + std::to_string(e));
            if (c == F::one()) {
                s += term;
            } else if (e == 0) {
                s += coeff_symbol(c);
            } else {
                s += coeff_symbol(c) + "*" + term;
            }
        }
        return s;
    }

   private:
    static std::string coeff_symbol(F c) {
        if constexpr (std::is_same_v<F, Gf4>) {
            return std::string(1, c.symbol());
        } else {
            return c.is_zero() ? "0" : "1";
        }
    }

    void normalize() {
        size_t first = 0;
        while (first < coeffs_.size() && coeffs_[first].is_zero()) {
            first++;
        }
        if (first == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        size_t last = coeffs_.size();
        while (coeffs_[last - 1].is_zero()) {
            last--;
        }
        coeffs_ = std::vector<F>(coeffs_.begin() + first, coeffs_.begin() + last);
        low_ += static_cast<int>(first);
    }

    int low_ = 0;
    std::vector<F> coeffs_;
};

template <typename F>
class LaurentMatrix {
   public:
    LaurentMatrix() = default;
    LaurentMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    const LaurentPoly<F> &at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    LaurentPoly<F> &at(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }

    LaurentMatrix transpose() const {
        LaurentMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                t.at(c, r) = at(r, c);
            }
        }
        return t;
    }
    LaurentMatrix substitute_dinv() const {
        LaurentMatrix out = *this;
        for (auto &p : out.data_) {
            p = p.substitute_dinv();
        }
        return out;
    }
    LaurentMatrix conj() const {
        LaurentMatrix out = *this;
        for (auto &p : out.data_) {
            p = p.conj();
        }
        return out;
    }
    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly<F> &p) { return p.is_zero(); });
    }
    /// True when every entry is a constant (support within {0}).
    bool is_constant() const {
        return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly<F> &p) {
            return p.is_zero() || (p.min_exponent() == 0 && p.max_exponent() == 0);
        });
    }
    /// Throws DomainError if any exponent lies outside [-limit, limit].
    void check_exponent_limit(int limit = kMaxLaurentExponent) const {
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                const auto &p = at(r, c);
                if (!p.is_zero() && (p.min_exponent() < -limit || p.max_exponent() > limit)) {
                    throw DomainError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") = " + p.str() +
                                      " has exponents outside [-" + std::to_string(limit) + ", " +
                                      std::to_string(limit) + "]");
                }
            }
        }
    }

    bool operator==(const LaurentMatrix &) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<LaurentPoly<F>> data_;
};

template <typename F>
LaurentMatrix<F> matmul(const LaurentMatrix<F> &a, const LaurentMatrix<F> &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("Laurent matmul: inner dimensions differ");
    }
    LaurentMatrix<F> out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            if (a.at(i, k).is_zero()) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return out;
}

template <typename F>
LaurentMatrix<F> add(const LaurentMatrix<F> &a, const LaurentMatrix<F> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("Laurent add: shape mismatch");
    }
    LaurentMatrix<F> out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out.at(r, c) += b.at(r, c);
        }
    }
    return out;
}

using BinLaurentPoly = LaurentPoly<Gf2>;
using Gf4LaurentPoly = LaurentPoly<Gf4>;
using BinLaurentMatrix = LaurentMatrix<Gf2>;
using Gf4LaurentMatrix = LaurentMatrix<Gf4>;

BinLaurentMatrix to_laurent(const BinMatrix &m);
Gf4LaurentMatrix to_laurent(const Gf4Matrix &m);

/// Rank over the rational-function field F(D).
///
/// Each row is first multiplied by a power of D to clear negative exponents,
/// then fraction-free (Bareiss) elimination runs in F[D]; the pivot in each
/// column is the lowest-degree nonzero entry.
template <typename F>
size_t laurent_rank(const LaurentMatrix<F> &m);

extern template size_t laurent_rank<Gf2>(const LaurentMatrix<Gf2> &m);
extern template size_t laurent_rank<Gf4>(const LaurentMatrix<Gf4> &m);

/// Check matrix [H_Z(D) | H_X(D)] of a quantum convolutional code.
class LaurentCheckMatrix {
   public:
    /// Throws ShapeError on mismatched blocks and DomainError when an
    /// exponent falls outside [-kMaxLaurentExponent, kMaxLaurentExponent].
    LaurentCheckMatrix(BinLaurentMatrix hz, BinLaurentMatrix hx);
    static LaurentCheckMatrix constant(const QuantumCheckMatrix &h);

    const BinLaurentMatrix &hz() const {
        return hz_;
    }
    const BinLaurentMatrix &hx() const {
        return hx_;
    }
    size_t num_qubits() const {
        return hz_.cols();
    }
    size_t num_generators() const {
        return hz_.rows();
    }

   private:
    BinLaurentMatrix hz_;
    BinLaurentMatrix hx_;
};

/// H_X(D) H_Z^T(D^{-1}) + H_Z(D) H_X^T(D^{-1}). Satisfies Omega(D) == Omega^T(D^{-1}).
BinLaurentMatrix shifted_symplectic_matrix(const LaurentCheckMatrix &h);

/// Conjectured ebits per frame: laurent_rank(shifted symplectic matrix) / 2.
size_t conv_ebits(const LaurentCheckMatrix &h);
CodeParameters conv_parameters(const LaurentCheckMatrix &h);

/// H(D) H^dagger(D^{-1}), where dagger conjugates and transposes.
Gf4LaurentMatrix gf4_conv_product(const Gf4LaurentMatrix &h);
/// Conjectured ebits per frame for a quaternary convolutional import: rank(H(D) H^dagger(D^{-1})).
size_t gf4_conv_ebits(const Gf4LaurentMatrix &h);
/// [[n, 2k - n + c; c]] per frame with k = n - rank(H(D)).
CodeParameters gf4_conv_parameters(const Gf4LaurentMatrix &h);

/// rank(H1(D) H2^T(D^{-1})): ebits per frame for a CSS convolutional import.
size_t css_conv_ebits(const BinLaurentMatrix &h1, const BinLaurentMatrix &h2);
CodeParameters css_conv_parameters(const BinLaurentMatrix &h1, const BinLaurentMatrix &h2);

}  // namespace ebitcalc

#endif
