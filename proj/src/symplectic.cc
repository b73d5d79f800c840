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

#include "ebitcalc/symplectic.h"

#include <bit>

#include "ebitcalc/errors.h"

namespace ebitcalc {

QuantumCheckMatrix QuantumCheckMatrix::from_blocks(BinMatrix hz, BinMatrix hx, DependentRows policy) {
    if (hz.rows() != hx.rows() || hz.cols() != hx.cols()) {
        throw ShapeError("check matrix blocks differ in shape: H_Z is " + std::to_string(hz.rows()) + "x" +
                         std::to_string(hz.cols()) + ", H_X is " + std::to_string(hx.rows()) + "x" +
                         std::to_string(hx.cols()));
    }
    std::vector<size_t> dependent = dependent_rows(hstack(hz, hx));
    if (dependent.empty()) {
        return QuantumCheckMatrix(std::move(hz), std::move(hx));
    }
    if (policy == DependentRows::kReject) {
        throw DependentRowsError(dependent.front());
    }
    std::vector<size_t> keep;
    for (size_t r = 0, d = 0; r < hz.rows(); r++) {
        if (d < dependent.size() && dependent[d] == r) {
            d++;
        } else {
            keep.push_back(r);
        }
    }
    QuantumCheckMatrix out(hz.select_rows(keep), hx.select_rows(keep));
    out.dropped_ = std::move(dependent);
    return out;
}

QuantumCheckMatrix QuantumCheckMatrix::from_stacked(const BinMatrix &stacked, DependentRows policy) {
    if (stacked.cols() % 2 != 0) {
        throw ShapeError("stacked check matrix must have an even number of columns");
    }
    size_t n = stacked.cols() / 2;
    return from_blocks(stacked.col_slice(0, n), stacked.col_slice(n, 2 * n), policy);
}

QuantumCheckMatrix QuantumCheckMatrix::from_paulis(const std::vector<std::string> &paulis, DependentRows policy) {
    size_t n = paulis.empty() ? 0 : paulis.front().size();
    BinMatrix hz(paulis.size(), n);
    BinMatrix hx(paulis.size(), n);
    for (size_t r = 0; r < paulis.size(); r++) {
        if (paulis[r].size() != n) {
            throw ShapeError("Pauli words differ in length");
        }
        for (size_t q = 0; q < n; q++) {
            switch (paulis[r][q]) {
                case 'I':
                case '_':
                    break;
                case 'X':
                    hx.set(r, q, true);
                    break;
                case 'Z':
                    hz.set(r, q, true);
                    break;
                case 'Y':
                    hx.set(r, q, true);
                    hz.set(r, q, true);
                    break;
                default:
                    throw ShapeError(std::string("invalid Pauli symbol '") + paulis[r][q] + "'");
            }
        }
    }
    return from_blocks(std::move(hz), std::move(hx), policy);
}

BinMatrix QuantumCheckMatrix::stacked() const {
    return hstack(hz_, hx_);
}

bool QuantumCheckMatrix::symplectic_product(size_t i, size_t j) const {
    auto zi = hz_.row_words(i);
    auto xi = hx_.row_words(i);
    auto zj = hz_.row_words(j);
    auto xj = hx_.row_words(j);
    uint64_t acc = 0;
    for (size_t w = 0; w < zi.size(); w++) {
        acc ^= (zi[w] & xj[w]) ^ (xi[w] & zj[w]);
    }
    return std::popcount(acc) & 1;
}

std::string QuantumCheckMatrix::row_str(size_t r) const {
    return hz_.row_str(r) + "|" + hx_.row_str(r);
}

BinMatrix symplectic_product_matrix(const QuantumCheckMatrix &h) {
    return add(matmul(h.hx(), h.hz().transpose()), matmul(h.hz(), h.hx().transpose()));
}

size_t ebit_count(const QuantumCheckMatrix &h) {
    size_t r = rank(symplectic_product_matrix(h));
    if (r % 2 != 0) {
        throw InternalError("symplectic product matrix has odd rank " + std::to_string(r));
    }
    return r / 2;
}

SgsopOutput sgsop(const QuantumCheckMatrix &h) {
    const size_t g = h.num_generators();
    BinMatrix hz = h.hz();
    BinMatrix hx = h.hx();
    BinMatrix transform = BinMatrix::identity(g);

    auto product = [&](size_t i, size_t j) {
        auto zi = hz.row_words(i);
        auto xi = hx.row_words(i);
        auto zj = hz.row_words(j);
        auto xj = hx.row_words(j);
        uint64_t acc = 0;
        for (size_t w = 0; w < zi.size(); w++) {
            acc ^= (zi[w] & xj[w]) ^ (xi[w] & zj[w]);
        }
        return (std::popcount(acc) & 1) != 0;
    };
    auto swap_rows = [&](size_t a, size_t b) {
        hz.swap_rows(a, b);
        hx.swap_rows(a, b);
        transform.swap_rows(a, b);
    };
    auto add_row = [&](size_t src, size_t dst) {
        hz.add_row(src, dst);
        hx.add_row(src, dst);
        transform.add_row(src, dst);
    };

    // Rows [top, bottom) are unprocessed; [bottom, g) commute with everything.
    size_t top = 0;
    size_t bottom = g;
    std::vector<std::pair<size_t, size_t>> pairs;
    while (top < bottom) {
        size_t partner = top + 1;
        while (partner < bottom && !product(top, partner)) {
            partner++;
        }
        if (partner == bottom) {
            swap_rows(top, bottom - 1);
            bottom--;
            continue;
        }
        swap_rows(top + 1, partner);
        const size_t a = top;
        const size_t b = top + 1;
        for (size_t r = top + 2; r < bottom; r++) {
            bool with_a = product(r, a);
            bool with_b = product(r, b);
            if (with_b) {
                add_row(a, r);
            }
            if (with_a) {
                add_row(b, r);
            }
        }
        pairs.emplace_back(a, b);
        top += 2;
    }

    std::vector<size_t> isotropic;
    for (size_t r = 2 * pairs.size(); r < g; r++) {
        isotropic.push_back(r);
    }
    size_t ebits = pairs.size();
    return SgsopOutput{
        std::move(transform),
        QuantumCheckMatrix::from_blocks(std::move(hz), std::move(hx)),
        std::move(pairs),
        std::move(isotropic),
        ebits,
    };
}

std::string CodeParameters::str() const {
    std::string s = "[[" + std::to_string(n) + ", " + std::to_string(logical);
    if (distance) {
        s += ", " + std::to_string(*distance);
    }
    s += "; " + std::to_string(ebits) + "]]";
    return s;
}

CodeParameters make_parameters(size_t n, size_t generators, size_t ebits, std::optional<size_t> distance) {
    CodeParameters p;
    p.n = n;
    p.generators = generators;
    p.ebits = ebits;
    p.logical = static_cast<int64_t>(n) - static_cast<int64_t>(generators) + static_cast<int64_t>(ebits);
    p.ancillas = static_cast<int64_t>(generators) - 2 * static_cast<int64_t>(ebits);
    p.distance = distance;
    return p;
}

CodeParameters code_parameters(const QuantumCheckMatrix &h, std::optional<size_t> distance) {
    return make_parameters(h.num_qubits(), h.num_generators(), ebit_count(h), distance);
}

}  // namespace ebitcalc
