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

#include <random>

#include "ebitcalc/errors.h"
#include "ebitcalc/verify.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace ebitcalc;
using ebitcalc::testing::random_bin_matrix;
using ebitcalc::testing::random_gf4_matrix;

namespace {

const Gf4 kZero = Gf4::zero();
const Gf4 kOne = Gf4::one();
const Gf4 kW = Gf4::omega();
const Gf4 kV = Gf4::omega_bar();

BinMatrix hamming74() {
    return BinMatrix::from_strings({"0001111", "0110011", "1010101"});
}

}  // namespace

TEST(Gf4, field_axioms) {
    const Gf4 all[4] = {kZero, kOne, kW, kV};
    ASSERT_EQ(kW * kW, kV);
    ASSERT_EQ(kW + kOne, kV);
    ASSERT_EQ(kW * kW * kW, kOne);
    for (Gf4 a : all) {
        ASSERT_EQ(a + a, kZero);
        ASSERT_EQ(a * kOne, a);
        ASSERT_EQ(a.conj(), a * a);
        ASSERT_TRUE(a.trace() == kZero || a.trace() == kOne);
        if (!a.is_zero()) {
            ASSERT_EQ(a * a.inverse(), kOne);
        }
        for (Gf4 b : all) {
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ((a + b).conj(), a.conj() + b.conj());
            ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
            for (Gf4 c : all) {
                ASSERT_EQ(a * (b + c), a * b + a * c);
                ASSERT_EQ((a * b) * c, a * (b * c));
            }
        }
    }
    ASSERT_EQ(kOne.conj(), kOne);
    ASSERT_EQ(kW.conj(), kV);
    ASSERT_EQ(kW.trace(), kOne);
}

TEST(Gf4, symbols_round_trip) {
    for (char c : std::string("01wv")) {
        ASSERT_EQ(Gf4::from_symbol(c)->symbol(), c);
    }
    ASSERT_FALSE(Gf4::from_symbol('x').has_value());
}

TEST(Gf4Matrix, rank_matches_enumeration_oracle) {
    ASSERT_EQ(rank(Gf4Matrix::identity(2)), 2u);
    ASSERT_EQ(gf4_rank_by_span_enumeration(Gf4Matrix::identity(2)), 2u);
    Gf4Matrix prop = Gf4Matrix::from_strings({"w", "v"});
    ASSERT_EQ(rank(prop), 1u);
    ASSERT_EQ(gf4_rank_by_span_enumeration(prop), 1u);
    // Row 2 is v times row 1.
    Gf4Matrix m = Gf4Matrix::from_strings({"1w", "v1"});
    ASSERT_EQ(gf4_rank_by_span_enumeration(m), 1u);
    ASSERT_EQ(rank(m), 1u);
}

TEST(CssConstruct, block_placement) {
    auto h = css_construct(BinMatrix::from_strings({"11"}), BinMatrix::from_strings({"11"}));
    ASSERT_EQ(h.row_str(0), "11|00");
    ASSERT_EQ(h.row_str(1), "00|11");
    h = css_construct(BinMatrix::from_strings({"10"}), BinMatrix::from_strings({"10"}));
    ASSERT_EQ(h.row_str(0), "10|00");
    ASSERT_EQ(h.row_str(1), "00|10");
    ASSERT_THROW(css_construct(BinMatrix(1, 2), BinMatrix(1, 3)), ShapeError);
}

TEST(CssConstruct, steane_code) {
    auto h = css_construct(hamming74(), hamming74());
    ASSERT_EQ(h.num_generators(), 6u);
    ASSERT_EQ(h.num_qubits(), 7u);
    ASSERT_EQ(h.hz(), vstack(hamming74(), BinMatrix(3, 7)));
    ASSERT_EQ(h.hx(), vstack(BinMatrix(3, 7), hamming74()));
    ASSERT_TRUE(symplectic_product_matrix(h).is_zero());
    ASSERT_EQ(code_parameters(h).str(), "[[7, 1; 0]]");
}

TEST(CssEbits, examples) {
    ASSERT_EQ(css_ebits(BinMatrix::from_strings({"11"}), BinMatrix::from_strings({"11"})), 0u);
    ASSERT_EQ(css_ebits(BinMatrix::from_strings({"10"}), BinMatrix::from_strings({"10"})), 1u);
    ASSERT_EQ(css_ebits(hamming74(), hamming74()), 0u);
    ASSERT_THROW(css_ebits(BinMatrix(1, 2), BinMatrix(1, 3)), ShapeError);
}

TEST(CssEbits, hamming_gram_matrix_is_zero) {
    // Direct computation of H H^T entry by entry.
    BinMatrix h = hamming74();
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            int dot = 0;
            for (size_t k = 0; k < 7; k++) {
                dot += h.get(i, k) && h.get(j, k);
            }
            ASSERT_EQ(dot % 2, 0);
        }
    }
}

TEST(CssParameters, examples) {
    ASSERT_EQ(css_parameters(hamming74(), hamming74(), 3, 3).str(), "[[7, 1, 3; 0]]");
    ASSERT_EQ(css_parameters(BinMatrix::from_strings({"10"}), BinMatrix::from_strings({"10"})).str(), "[[2, 1; 1]]");
    ASSERT_EQ(css_parameters(BinMatrix::from_strings({"11"}), BinMatrix::from_strings({"11"})).str(), "[[2, 0; 0]]");
    ASSERT_FALSE(css_parameters(hamming74(), hamming74(), 3, std::nullopt).distance.has_value());
    ASSERT_EQ(css_parameters(hamming74(), hamming74(), 5, 3).distance, 3u);
}

TEST(CssEbits, properties) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = rng() % 12 + 1;
        BinMatrix h1 = random_bin_matrix(rng, rng() % n + 1, n);
        BinMatrix h2 = random_bin_matrix(rng, rng() % n + 1, n);
        size_t c = css_ebits(h1, h2);
        ASSERT_EQ(c, css_ebits(h2, h1));
        ASSERT_EQ(c, ebit_count(css_construct(h1, h2, DependentRows::kDrop)));
    }
}

TEST(Gamma, symbol_images) {
    ASSERT_EQ(gamma(kZero), (SymplecticBits{false, false}));
    ASSERT_EQ(gamma(kW), (SymplecticBits{false, true}));
    ASSERT_EQ(gamma(kV), (SymplecticBits{true, false}));
    ASSERT_EQ(gamma(kOne), (SymplecticBits{true, true}));
    for (uint8_t code = 0; code < 4; code++) {
        Gf4 e = Gf4::from_code(code);
        ASSERT_EQ(gamma_inverse(gamma(e).z, gamma(e).x), e);
    }
}

TEST(Gamma, trace_product_equals_symplectic_product) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = rng() % 9 + 1;
        BinMatrix rows = random_bin_matrix(rng, 2, 2 * n);
        bool symplectic = false;
        Gf4 trace_sum = kZero;
        for (size_t k = 0; k < n; k++) {
            bool zi = rows.get(0, k), xi = rows.get(0, n + k);
            bool zj = rows.get(1, k), xj = rows.get(1, n + k);
            symplectic ^= (zi && xj) != (xi && zj);
            trace_sum += (gamma_inverse(zi, xi) * gamma_inverse(zj, xj).conj()).trace();
        }
        ASSERT_EQ(trace_sum, symplectic ? kOne : kZero);
    }
}

TEST(Gf4ToBinary, examples) {
    auto h = gf4_to_binary(Gf4Matrix::from_strings({"1"}));
    ASSERT_EQ(h.row_str(0), "0|1");
    ASSERT_EQ(h.row_str(1), "1|0");
    h = gf4_to_binary(Gf4Matrix::from_strings({"w"}));
    ASSERT_EQ(h.row_str(0), "1|0");
    ASSERT_EQ(h.row_str(1), "1|1");
    h = gf4_to_binary(Gf4Matrix::from_strings({"01"}));
    ASSERT_EQ(h.row_str(0), "00|01");
    ASSERT_EQ(h.row_str(1), "01|00");
}

TEST(Gf4ToBinary, dependent_rows_follow_policy) {
    Gf4Matrix h = Gf4Matrix::from_strings({"1w", "v1"});
    ASSERT_THROW(gf4_to_binary(h), DependentRowsError);
    ASSERT_EQ(gf4_to_binary(h, DependentRows::kDrop).num_generators(), 2u);
}

TEST(Gf4Ebits, examples) {
    ASSERT_EQ(gf4_ebits(Gf4Matrix::from_strings({"1"})), 1u);
    ASSERT_EQ(gf4_ebits(Gf4Matrix::from_strings({"1w"})), 0u);
    ASSERT_EQ(gf4_parameters(Gf4Matrix::from_strings({"1"})).str(), "[[1, 0; 1]]");
    ASSERT_EQ(gf4_parameters(Gf4Matrix::from_strings({"1w"})).str(), "[[2, 0; 0]]");
}

TEST(Gf4Ebits, two_by_four_example_against_oracle) {
    Gf4Matrix h = Gf4Matrix::from_strings({"10w1", "01vw"});
    // H H^dagger by explicit sums of h_ik * conj(h_jk), then enumeration rank.
    Gf4Matrix gram(2, 2);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            Gf4 s = kZero;
            for (size_t k = 0; k < 4; k++) {
                s += h.at(i, k) * h.at(j, k).conj();
            }
            gram.at(i, j) = s;
        }
    }
    ASSERT_EQ(gram, Gf4Matrix::identity(2));
    size_t oracle = gf4_rank_by_span_enumeration(gram);
    ASSERT_EQ(oracle, 2u);
    ASSERT_EQ(gf4_ebits(h), oracle);
    ASSERT_EQ(gf4_parameters(h).str(), "[[4, 2; 2]]");
    ASSERT_EQ(ebit_count(gf4_to_binary(h)), 2u);
}

TEST(Gf4Ebits, binary_expansion_doubles_rank) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; trial++) {
        Gf4Matrix h = random_gf4_matrix(rng, rng() % 6 + 1, rng() % 10 + 1);
        auto hq = gf4_to_binary(h, DependentRows::kDrop);
        ASSERT_EQ(rank(symplectic_product_matrix(hq)), 2 * gf4_ebits(h));
        ASSERT_EQ(hq.num_generators(), 2 * rank(h));
    }
}

TEST(CssEbits, dual_containing_codes_need_no_ebits) {
    // Rows of a self-orthogonal code: H H^T = 0.
    BinMatrix h = BinMatrix::from_strings({"11110000", "00111100", "00001111", "11000011"});
    ASSERT_TRUE(matmul(h, h.transpose()).is_zero());
    ASSERT_EQ(css_ebits(h, h), 0u);
}
