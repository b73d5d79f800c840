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

#include <random>

#include "ebitcalc/errors.h"
#include "ebitcalc/verify.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace ebitcalc;
using ebitcalc::testing::random_bin_matrix;

namespace {

const BinMatrix kShiftedSymplectic = BinMatrix::from_strings({
    "01000",
    "10000",
    "00000",
    "00001",
    "00010",
});

}  // namespace

TEST(BinMatrix, get_set_and_padding) {
    BinMatrix m(3, 130);
    m.set(2, 129, true);
    m.set(0, 64, true);
    ASSERT_TRUE(m.get(2, 129));
    ASSERT_TRUE(m.get(0, 64));
    ASSERT_FALSE(m.get(1, 64));
    ASSERT_EQ(m.words_per_row(), 3u);
    m.flip(2, 129);
    ASSERT_FALSE(m.get(2, 129));
    ASSERT_FALSE(m.is_zero());
}

TEST(BinMatrix, from_strings_rejects_bad_input) {
    ASSERT_THROW(BinMatrix::from_strings({"01", "1"}), ShapeError);
    ASSERT_THROW(BinMatrix::from_strings({"0x"}), ShapeError);
}

TEST(BinMatrix, matmul_identity) {
    std::mt19937_64 rng(1);
    BinMatrix m = random_bin_matrix(rng, 3, 9);
    ASSERT_EQ(matmul(BinMatrix::identity(3), m), m);
}

TEST(BinMatrix, matmul_one_plus_one_is_zero) {
    BinMatrix a = BinMatrix::from_strings({"11"});
    ASSERT_EQ(matmul(a, a.transpose()), BinMatrix::from_strings({"0"}));
}

TEST(BinMatrix, matmul_by_hand) {
    BinMatrix a = BinMatrix::from_strings({"10", "11"});
    BinMatrix b = BinMatrix::from_strings({"11", "01"});
    ASSERT_EQ(matmul(a, b), BinMatrix::from_strings({"11", "10"}));
}

TEST(BinMatrix, matmul_shape_error) {
    ASSERT_THROW(matmul(BinMatrix(2, 3), BinMatrix(2, 3)), ShapeError);
}

TEST(BinMatrix, matmul_matches_naive_sum) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; trial++) {
        BinMatrix a = random_bin_matrix(rng, 5, 70);
        BinMatrix b = random_bin_matrix(rng, 70, 66);
        BinMatrix p = matmul(a, b);
        for (size_t i = 0; i < a.rows(); i++) {
            for (size_t j = 0; j < b.cols(); j++) {
                bool s = false;
                for (size_t k = 0; k < a.cols(); k++) {
                    s ^= a.get(i, k) && b.get(k, j);
                }
                ASSERT_EQ(p.get(i, j), s);
            }
        }
    }
}

TEST(BinMatrix, row_reduce_zero) {
    RowReduction r = row_reduce(BinMatrix(4, 4));
    ASSERT_EQ(r.rank, 0u);
    ASSERT_TRUE(r.pivots.empty());
}

TEST(BinMatrix, row_reduce_identity) {
    RowReduction r = row_reduce(BinMatrix::identity(5));
    ASSERT_EQ(r.rank, 5u);
    ASSERT_EQ(r.transform, BinMatrix::identity(5));
    ASSERT_EQ(r.reduced, BinMatrix::identity(5));
}

TEST(BinMatrix, row_reduce_shifted_symplectic_example) {
    RowReduction r = row_reduce(kShiftedSymplectic);
    ASSERT_EQ(r.rank, 4u);
    ASSERT_EQ(r.pivots, (std::vector<size_t>{0, 1, 3, 4}));
    ASSERT_EQ(matmul(r.transform, kShiftedSymplectic), r.reduced);
}

TEST(BinMatrix, row_reduce_contract_random) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; trial++) {
        size_t rows = rng() % 10;
        size_t cols = rng() % 80;
        BinMatrix m = random_bin_matrix(rng, rows, cols, trial % 2 ? 0.5 : 0.15);
        RowReduction r = row_reduce(m);
        ASSERT_EQ(matmul(r.transform, m), r.reduced);
        ASSERT_EQ(rank(r.transform), rows);
        ASSERT_EQ(r.rank, r.pivots.size());
        ASSERT_EQ(r.rank, rank(m));
        for (size_t i = 0; i < rows; i++) {
            ASSERT_EQ(r.reduced.row_is_zero(i), i >= r.rank);
        }
        // Reduced: each pivot column is a unit vector, pivots strictly increase.
        for (size_t k = 0; k < r.pivots.size(); k++) {
            if (k > 0) {
                ASSERT_LT(r.pivots[k - 1], r.pivots[k]);
            }
            for (size_t i = 0; i < rows; i++) {
                ASSERT_EQ(r.reduced.get(i, r.pivots[k]), i == k);
            }
            for (size_t c = 0; c < r.pivots[k]; c++) {
                ASSERT_FALSE(r.reduced.get(k, c));
            }
        }
    }
}

TEST(BinMatrix, rank_examples) {
    ASSERT_EQ(rank(BinMatrix::identity(7)), 7u);
    ASSERT_EQ(rank(BinMatrix::from_strings({"01", "10"})), 2u);
    ASSERT_EQ(rank(BinMatrix::from_strings({"011", "100", "100"})), 2u);
    ASSERT_EQ(rank_by_span_enumeration(BinMatrix::from_strings({"011", "100", "100"})), 2u);
}

TEST(BinMatrix, empty_matrices_have_rank_zero) {
    ASSERT_EQ(rank(BinMatrix(0, 5)), 0u);
    ASSERT_EQ(rank(BinMatrix(5, 0)), 0u);
    ASSERT_EQ(row_reduce(BinMatrix(0, 0)).rank, 0u);
    ASSERT_EQ(matmul(BinMatrix(3, 0), BinMatrix(0, 4)), BinMatrix(3, 4));
}

TEST(BinMatrix, rank_properties) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        BinMatrix a = random_bin_matrix(rng, rng() % 12, rng() % 12 + 1);
        BinMatrix b = random_bin_matrix(rng, rng() % 12, rng() % 12 + 1, 0.3);
        ASSERT_EQ(rank(a), rank(a.transpose()));
        ASSERT_EQ(rank(direct_sum(a, b)), rank(a) + rank(b));
        BinMatrix t = row_reduce(random_bin_matrix(rng, a.rows(), a.rows())).transform;
        ASSERT_EQ(rank(matmul(t, a)), rank(a));
        ASSERT_LE(rank(a), std::min(a.rows(), a.cols()));
    }
}

TEST(BinMatrix, dependent_rows_first_come) {
    BinMatrix m = BinMatrix::from_strings({"1100", "0110", "1010", "0001", "0000"});
    ASSERT_EQ(dependent_rows(m), (std::vector<size_t>{2, 4}));
}

TEST(BinMatrix, dependent_rows_count_matches_rank) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; trial++) {
        BinMatrix m = random_bin_matrix(rng, rng() % 16, rng() % 10 + 1);
        ASSERT_EQ(m.rows() - dependent_rows(m).size(), rank(m));
    }
}

TEST(BinMatrix, stacking) {
    BinMatrix a = BinMatrix::from_strings({"10"});
    BinMatrix b = BinMatrix::from_strings({"01"});
    ASSERT_EQ(hstack(a, b), BinMatrix::from_strings({"1001"}));
    ASSERT_EQ(vstack(a, b), BinMatrix::from_strings({"10", "01"}));
    ASSERT_EQ(direct_sum(a, b), BinMatrix::from_strings({"1000", "0001"}));
    ASSERT_THROW(hstack(a, BinMatrix(2, 2)), ShapeError);
    ASSERT_EQ(hstack(a, b).col_slice(1, 3), BinMatrix::from_strings({"00"}));
}
