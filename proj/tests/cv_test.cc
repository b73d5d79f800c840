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

#include "ebitcalc/cv.h"

#include <cmath>
#include <limits>
#include <random>

#include "ebitcalc/errors.h"
#include "ebitcalc/verify.h"
#include "gtest/gtest.h"

using namespace ebitcalc;

namespace {

RealMatrix random_int_matrix(std::mt19937_64 &rng, size_t rows, size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    RealMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.at(r, c) = entry(rng);
        }
    }
    return m;
}

}  // namespace

TEST(Cv, conjugate_pair_needs_one_mode) {
    RealCheckMatrix h(RealMatrix::from_rows({{1}, {0}}), RealMatrix::from_rows({{0}, {1}}));
    ASSERT_EQ(cv_ebit_count(h), 1u);
    RealMatrix omega = cv_symplectic_matrix(h);
    ASSERT_EQ(std::abs(omega.at(0, 1)), 1.0);
    ASSERT_EQ(omega.at(0, 1), -omega.at(1, 0));
}

TEST(Cv, epr_stabilizers_commute) {
    // q1 - q2 and p1 + p2.
    RealCheckMatrix h(RealMatrix::from_rows({{1, -1}, {0, 0}}), RealMatrix::from_rows({{0, 0}, {1, 1}}));
    ASSERT_EQ(cv_ebit_count(h), 0u);
    // q1 - q2 and p1 - p2 do not.
    RealCheckMatrix g(RealMatrix::from_rows({{1, -1}, {0, 0}}), RealMatrix::from_rows({{0, 0}, {1, -1}}));
    ASSERT_EQ(cv_ebit_count(g), 1u);
}

TEST(Cv, non_integer_entries) {
    RealCheckMatrix h(RealMatrix::from_rows({{2.5}, {0}}), RealMatrix::from_rows({{0}, {-1.25}}));
    ASSERT_EQ(cv_ebit_count(h), 1u);
}

TEST(Cv, rejects_bad_input) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    double inf = std::numeric_limits<double>::infinity();
    ASSERT_THROW(RealCheckMatrix(RealMatrix::from_rows({{nan}}), RealMatrix::from_rows({{0}})), DomainError);
    ASSERT_THROW(RealCheckMatrix(RealMatrix::from_rows({{0}}), RealMatrix::from_rows({{inf}})), DomainError);
    ASSERT_THROW(RealCheckMatrix(RealMatrix(1, 2), RealMatrix(1, 3)), ShapeError);
    ASSERT_THROW(RealCheckMatrix(RealMatrix(1, 1), RealMatrix(1, 1), -1.0), DomainError);
}

TEST(Cv, numerical_rank_tolerance) {
    RealMatrix m = RealMatrix::from_rows({{1, 0}, {0, 1e-12}});
    ASSERT_EQ(numerical_rank(m, 1e-10), 1u);
    ASSERT_EQ(numerical_rank(m, 1e-14), 2u);
    ASSERT_EQ(numerical_rank(RealMatrix(3, 3), 1e-10), 0u);
    // Relative tolerance: uniform scaling does not change rank.
    RealMatrix tiny = RealMatrix::from_rows({{1e-20, 0}, {0, 1e-20}});
    ASSERT_EQ(numerical_rank(tiny, 1e-10), 2u);
}

TEST(Cv, numerical_rank_of_dependent_rows) {
    RealMatrix m = RealMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    ASSERT_EQ(numerical_rank(m, 1e-10), 2u);
    ASSERT_EQ(rank_by_rational_elimination(m), 2u);
}

TEST(Cv, agrees_with_exact_rational_rank) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = rng() % 10 + 1;
        size_t g = rng() % (2 * n) + 1;
        RealCheckMatrix h(random_int_matrix(rng, g, n, -5, 5), random_int_matrix(rng, g, n, -5, 5));
        RealMatrix omega = cv_symplectic_matrix(h);
        ASSERT_EQ(2 * cv_ebit_count(h), rank_by_rational_elimination(omega));
    }
}

TEST(Cv, low_rank_products) {
    // Columns confined to a small subspace keep the exact rank low.
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; trial++) {
        size_t g = rng() % 8 + 2;
        RealMatrix basis = random_int_matrix(rng, 2, 6, -3, 3);
        RealMatrix mix = random_int_matrix(rng, g, 2, -3, 3);
        RealMatrix hz = matmul(mix, basis);
        RealCheckMatrix h(hz, random_int_matrix(rng, g, 6, -3, 3));
        ASSERT_EQ(2 * cv_ebit_count(h), rank_by_rational_elimination(cv_symplectic_matrix(h)));
    }
}
