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

#ifndef EBITCALC_QUDIT_H
#define EBITCALC_QUDIT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ebitcalc {

bool is_prime(uint64_t d);

/// Matrix over the prime field Z_d. Entries are stored reduced into [0, d).
class ModMatrix {
   public:
    /// Throws DomainError unless `modulus` is prime.
    ModMatrix(size_t rows, size_t cols, uint32_t modulus);
    /// Entries may be any integers; they are reduced mod d.
    static ModMatrix from_ints(const std::vector<std::vector<int64_t>> &rows, uint32_t modulus);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    uint32_t modulus() const {
        return modulus_;
    }
    uint32_t at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(size_t r, size_t c, int64_t value);

    ModMatrix transpose() const;
    std::string str() const;
    bool operator==(const ModMatrix &) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    uint32_t modulus_ = 2;
    std::vector<uint32_t> data_;
};

ModMatrix matmul(const ModMatrix &a, const ModMatrix &b);
/// a - b mod d
ModMatrix subtract(const ModMatrix &a, const ModMatrix &b);
/// Rank over Z_d (d prime), Gauss-Jordan with the leftmost-column pivot rule.
size_t rank(const ModMatrix &m);

/// x^{-1} mod d via the extended Euclidean algorithm. Precondition: gcd(x, d) == 1.
uint32_t mod_inverse(uint32_t x, uint32_t d);

/// Omega = H_X H_Z^T - H_Z H_X^T mod d. Antisymmetric with zero diagonal.
ModMatrix qudit_symplectic_matrix(const ModMatrix &hz, const ModMatrix &hx);

/// Number of edits (maximally entangled qudit pairs): rank(Omega) / 2.
size_t qudit_ebits(const ModMatrix &hz, const ModMatrix &hx);

/// A qudit check matrix [H_Z | H_X] over Z_d, as read from a `qcheckd` file.
struct QuditCheckMatrix {
    ModMatrix hz;
    ModMatrix hx;
};

}  // namespace ebitcalc

#endif
