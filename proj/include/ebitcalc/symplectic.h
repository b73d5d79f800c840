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

#ifndef EBITCALC_SYMPLECTIC_H
#define EBITCALC_SYMPLECTIC_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ebitcalc/bin_matrix.h"

namespace ebitcalc {

/// What to do when generator rows are linearly dependent.
enum class DependentRows {
    kReject,  ///< throw DependentRowsError naming the first dependent row
    kDrop,    ///< silently remove rows that lie in the span of earlier rows
};

/// Binary quantum check matrix [H_Z | H_X].
///
/// Row i is the 2n-bit symplectic vector (h_i^Z | h_i^X) of one Pauli
/// generator. Rows are linearly independent over GF(2); both factories
/// enforce this.
class QuantumCheckMatrix {
   public:
    static QuantumCheckMatrix from_blocks(BinMatrix hz, BinMatrix hx, DependentRows policy = DependentRows::kReject);
    /// Splits a generators x 2n matrix into Z (left) and X (right) halves.
    static QuantumCheckMatrix from_stacked(const BinMatrix &stacked, DependentRows policy = DependentRows::kReject);
    /// Builds from Pauli words over {I,X,Y,Z} (also '_' for identity).
    static QuantumCheckMatrix from_paulis(const std::vector<std::string> &paulis,
                                          DependentRows policy = DependentRows::kReject);

    const BinMatrix &hz() const {
        return hz_;
    }
    const BinMatrix &hx() const {
        return hx_;
    }
    size_t num_qubits() const {
        return hz_.cols();
    }
    size_t num_generators() const {
        return hz_.rows();
    }
    /// Input row indices removed under DependentRows::kDrop.
    const std::vector<size_t> &dropped_rows() const {
        return dropped_;
    }

    /// [H_Z | H_X] as one generators x 2n matrix.
    BinMatrix stacked() const;
    /// h_i (.) h_j = h_i^Z . h_j^X + h_i^X . h_j^Z
    bool symplectic_product(size_t i, size_t j) const;
    /// Row as "zzzz|xxxx".
    std::string row_str(size_t r) const;

    bool operator==(const QuantumCheckMatrix &other) const {
        return hz_ == other.hz_ && hx_ == other.hx_;
    }

   private:
    QuantumCheckMatrix(BinMatrix hz, BinMatrix hx) : hz_(std::move(hz)), hx_(std::move(hx)) {
    }
    BinMatrix hz_;
    BinMatrix hx_;
    std::vector<size_t> dropped_;
};

/// Omega_H = H_X H_Z^T + H_Z H_X^T, the matrix of pairwise symplectic products.
/// Symmetric with zero diagonal.
BinMatrix symplectic_product_matrix(const QuantumCheckMatrix &h);

/// Minimal number of ebits: rank(Omega_H) / 2.
///
/// Throws InternalError if the rank comes out odd, which cannot happen for an
/// alternating matrix.
size_t ebit_count(const QuantumCheckMatrix &h);

struct SgsopOutput {
    BinMatrix transform;  ///< invertible G with transformed == G * H
    QuantumCheckMatrix transformed;
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<size_t> isotropic;
    size_t ebits = 0;
};

/// Symplectic Gram-Schmidt orthogonalization.
///
/// Works top-down: the first unprocessed row with a nonzero product against
/// another unprocessed row is paired with the lowest-index such partner, the
/// pair is swapped into the next two leading slots, and every remaining row
/// has the pair added as needed to clear its products with the pair. Rows
/// that commute with everything unprocessed sink to the bottom. The result
/// has Omega = J + ... + J + [0] + ... + [0] (direct sum) with pairs leading.
SgsopOutput sgsop(const QuantumCheckMatrix &h);

/// [[n, logical; ebits]] for an entanglement-assisted code, plus optional distance metadata.
struct CodeParameters {
    size_t n = 0;
    size_t generators = 0;
    size_t ebits = 0;
    int64_t logical = 0;
    int64_t ancillas = 0;
    std::optional<size_t> distance;

    /// "[[n, k; c]]" or "[[n, k, d; c]]".
    std::string str() const;
    bool operator==(const CodeParameters &) const = default;
};

/// Parameters for `generators` independent generators on `n` qubits with `ebits` pairs.
CodeParameters make_parameters(size_t n, size_t generators, size_t ebits, std::optional<size_t> distance = {});

CodeParameters code_parameters(const QuantumCheckMatrix &h, std::optional<size_t> distance = {});

}  // namespace ebitcalc

#endif
