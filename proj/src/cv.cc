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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ebitcalc/errors.h"

namespace ebitcalc {

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>> &rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    RealMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ShapeError("ragged rows in real matrix");
        }
        for (size_t c = 0; c < cols; c++) {
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

RealMatrix RealMatrix::transpose() const {
    RealMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

double RealMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

RealMatrix matmul(const RealMatrix &a, const RealMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("real matmul: inner dimensions differ");
    }
    RealMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            double s = a.at(i, k);
            for (size_t j = 0; j < b.cols(); j++) {
                out.at(i, j) += s * b.at(k, j);
            }
        }
    }
    return out;
}

namespace {

void require_finite(const RealMatrix &m, const char *name) {
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (!std::isfinite(m.at(r, c))) {
                throw DomainError(std::string(name) + " has a non-finite entry at (" + std::to_string(r) + ", " +
                                  std::to_string(c) + ")");
            }
        }
    }
}

}  // namespace

RealCheckMatrix::RealCheckMatrix(RealMatrix hz, RealMatrix hx, double tolerance)
    : hz_(std::move(hz)), hx_(std::move(hx)), tolerance_(tolerance) {
    if (hz_.rows() != hx_.rows() || hz_.cols() != hx_.cols()) {
        throw ShapeError("continuous-variable check matrix blocks differ in shape");
    }
    require_finite(hz_, "H_Z");
    require_finite(hx_, "H_X");
    if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_)) {
        throw DomainError("rank tolerance must be a finite nonnegative number");
    }
}

RealMatrix cv_symplectic_matrix(const RealCheckMatrix &h) {
    RealMatrix a = matmul(h.hx(), h.hz().transpose());
    RealMatrix omega(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = i + 1; j < a.cols(); j++) {
            double v = a.at(i, j) - a.at(j, i);
            omega.at(i, j) = v;
            omega.at(j, i) = -v;
        }
    }
    return omega;
}

size_t numerical_rank(const RealMatrix &m, double relative_tolerance) {
    const double threshold = relative_tolerance * m.max_abs();
    RealMatrix a = m;
    const size_t rows = a.rows();
    const size_t cols = a.cols();
    std::vector<size_t> col_order(cols);
    for (size_t c = 0; c < cols; c++) {
        col_order[c] = c;
    }
    size_t r = 0;
    for (; r < std::min(rows, cols); r++) {
        size_t best_row = r;
        size_t best_col = r;
        double best = 0.0;
        for (size_t i = r; i < rows; i++) {
            for (size_t j = r; j < cols; j++) {
                double v = std::abs(a.at(i, col_order[j]));
                if (v > best) {
                    best = v;
                    best_row = i;
                    best_col = j;
                }
            }
        }
        if (best == 0.0 || best <= threshold) {
            break;
        }
        std::swap(col_order[r], col_order[best_col]);
        if (best_row != r) {
            for (size_t j = 0; j < cols; j++) {
                std::swap(a.at(r, j), a.at(best_row, j));
            }
        }
        const size_t pc = col_order[r];
        const double pivot = a.at(r, pc);
        for (size_t i = r + 1; i < rows; i++) {
            double f = a.at(i, pc) / pivot;
            if (f == 0.0) {
                continue;
            }
            for (size_t j = r; j < cols; j++) {
                a.at(i, col_order[j]) -= f * a.at(r, col_order[j]);
            }
        }
    }
    return r;
}

size_t cv_ebit_count(const RealCheckMatrix &h) {
    RealMatrix omega = cv_symplectic_matrix(h);
    for (size_t i = 0; i < omega.rows(); i++) {
        for (size_t j = 0; j < omega.cols(); j++) {
            if (omega.at(i, j) + omega.at(j, i) != 0.0) {
                throw InternalError("continuous-variable symplectic matrix is not antisymmetric");
            }
        }
    }
    size_t r = numerical_rank(omega, h.tolerance());
    if (r % 2 != 0) {
        // Only reachable when the tolerance cuts between the two members of a
        // conjugate singular-value pair; the count would be meaningless.
        throw DomainError("continuous-variable symplectic matrix has odd numerical rank " + std::to_string(r) +
                          " at tolerance " + std::to_string(h.tolerance()) + "; choose a different --tol");
    }
    return r / 2;
}

}  // namespace ebitcalc
