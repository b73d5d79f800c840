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

#ifndef EBITCALC_CV_H
#define EBITCALC_CV_H

#include <cstddef>
#include <vector>

namespace ebitcalc {

inline constexpr double kDefaultCvTolerance = 1e-10;

class RealMatrix {
   public:
    RealMatrix() = default;
    RealMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    }
    static RealMatrix from_rows(const std::vector<std::vector<double>> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    double at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    double &at(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    RealMatrix transpose() const;
    double max_abs() const;
    bool operator==(const RealMatrix &) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

RealMatrix matmul(const RealMatrix &a, const RealMatrix &b);

/// Real check matrix [H_Z | H_X] of a continuous-variable code.
class RealCheckMatrix {
   public:
    /// Throws ShapeError on mismatched blocks, DomainError on NaN/inf entries
    /// or a negative tolerance.
    RealCheckMatrix(RealMatrix hz, RealMatrix hx, double tolerance = kDefaultCvTolerance);

    const RealMatrix &hz() const {
        return hz_;
    }
    const RealMatrix &hx() const {
        return hx_;
    }
    double tolerance() const {
        return tolerance_;
    }
    size_t num_modes() const {
        return hz_.cols();
    }
    size_t num_generators() const {
        return hz_.rows();
    }

   private:
    RealMatrix hz_;
    RealMatrix hx_;
    double tolerance_;
};

/// H_X H_Z^T - H_Z H_X^T. Formed as A - A^T so it is exactly antisymmetric.
RealMatrix cv_symplectic_matrix(const RealCheckMatrix &h);

/// Number of pivots exceeding `relative_tolerance * max|m|` under Gaussian
/// elimination with complete pivoting.
size_t numerical_rank(const RealMatrix &m, double relative_tolerance);

/// Entangled modes required: numerical rank of the symplectic matrix, halved.
size_t cv_ebit_count(const RealCheckMatrix &h);

}  // namespace ebitcalc

#endif
