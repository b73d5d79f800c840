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

#include "ebitcalc/laurent.h"

namespace ebitcalc {

BinLaurentMatrix to_laurent(const BinMatrix &m) {
    BinLaurentMatrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (m.get(r, c)) {
                out.at(r, c) = BinLaurentPoly::one();
            }
        }
    }
    return out;
}

Gf4LaurentMatrix to_laurent(const Gf4Matrix &m) {
    Gf4LaurentMatrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out.at(r, c) = Gf4LaurentPoly::constant(m.at(r, c));
        }
    }
    return out;
}

template <typename F>
size_t laurent_rank(const LaurentMatrix<F> &m) {
    using Poly = LaurentPoly<F>;
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols));
    for (size_t r = 0; r < rows; r++) {
        int lowest = 0;
        bool any = false;
        for (size_t c = 0; c < cols; c++) {
            const Poly &p = m.at(r, c);
            if (!p.is_zero()) {
                lowest = any ? std::min(lowest, p.min_exponent()) : p.min_exponent();
                any = true;
            }
        }
        for (size_t c = 0; c < cols; c++) {
            a[r][c] = m.at(r, c).shifted(-lowest);
        }
    }

    Poly previous = Poly::one();
    size_t top = 0;
    for (size_t c = 0; c < cols && top < rows; c++) {
        size_t pivot = rows;
        for (size_t i = top; i < rows; i++) {
            if (!a[i][c].is_zero() && (pivot == rows || a[i][c].max_exponent() < a[pivot][c].max_exponent())) {
                pivot = i;
            }
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(a[pivot], a[top]);
        const Poly p = a[top][c];
        for (size_t i = top + 1; i < rows; i++) {
            const Poly f = a[i][c];
            for (size_t j = c + 1; j < cols; j++) {
                Poly num = p * a[i][j] - f * a[top][j];
                auto q = divide_exact(num, previous);
                if (!q) {
                    throw InternalError("fraction-free elimination produced an inexact division");
                }
                a[i][j] = std::move(*q);
            }
            a[i][c] = Poly{};
        }
        previous = p;
        top++;
    }
    return top;
}

template size_t laurent_rank<Gf2>(const LaurentMatrix<Gf2> &m);
template size_t laurent_rank<Gf4>(const LaurentMatrix<Gf4> &m);

LaurentCheckMatrix::LaurentCheckMatrix(BinLaurentMatrix hz, BinLaurentMatrix hx)
    : hz_(std::move(hz)), hx_(std::move(hx)) {
    if (hz_.rows() != hx_.rows() || hz_.cols() != hx_.cols()) {
        throw ShapeError("convolutional check matrix blocks differ in shape");
    }
    hz_.check_exponent_limit();
    hx_.check_exponent_limit();
}

LaurentCheckMatrix LaurentCheckMatrix::constant(const QuantumCheckMatrix &h) {
    return LaurentCheckMatrix(to_laurent(h.hz()), to_laurent(h.hx()));
}

BinLaurentMatrix shifted_symplectic_matrix(const LaurentCheckMatrix &h) {
    BinLaurentMatrix omega = add(matmul(h.hx(), h.hz().transpose().substitute_dinv()),
                                 matmul(h.hz(), h.hx().transpose().substitute_dinv()));
    if (omega != omega.transpose().substitute_dinv()) {
        throw InternalError("shifted symplectic product matrix is not self-reciprocal");
    }
    return omega;
}

size_t conv_ebits(const LaurentCheckMatrix &h) {
    size_t r = laurent_rank(shifted_symplectic_matrix(h));
    if (r % 2 != 0) {
        // Reachable from valid input: a generator that fails to commute with
        // its own shifts puts D^k + D^-k on the diagonal.
        throw DomainError("shifted symplectic product matrix has odd rank " + std::to_string(r) +
                          "; the per-frame ebit formula does not apply to this code");
    }
    return r / 2;
}

CodeParameters conv_parameters(const LaurentCheckMatrix &h) {
    return make_parameters(h.num_qubits(), h.num_generators(), conv_ebits(h));
}

Gf4LaurentMatrix gf4_conv_product(const Gf4LaurentMatrix &h) {
    return matmul(h, h.transpose().conj().substitute_dinv());
}

size_t gf4_conv_ebits(const Gf4LaurentMatrix &h) {
    h.check_exponent_limit();
    return laurent_rank(gf4_conv_product(h));
}

CodeParameters gf4_conv_parameters(const Gf4LaurentMatrix &h) {
    return make_parameters(h.cols(), 2 * laurent_rank(h), gf4_conv_ebits(h));
}

size_t css_conv_ebits(const BinLaurentMatrix &h1, const BinLaurentMatrix &h2) {
    if (h1.cols() != h2.cols()) {
        throw ShapeError("CSS convolutional import: parity check matrices have " + std::to_string(h1.cols()) +
                         " and " + std::to_string(h2.cols()) + " columns");
    }
    h1.check_exponent_limit();
    h2.check_exponent_limit();
    return laurent_rank(matmul(h1, h2.transpose().substitute_dinv()));
}

CodeParameters css_conv_parameters(const BinLaurentMatrix &h1, const BinLaurentMatrix &h2) {
    size_t c = css_conv_ebits(h1, h2);
    return make_parameters(h1.cols(), laurent_rank(h1) + laurent_rank(h2), c);
}

}  // namespace ebitcalc
