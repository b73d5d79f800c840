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

#ifndef EBITCALC_VERIFY_H
#define EBITCALC_VERIFY_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ebitcalc/bin_matrix.h"
#include "ebitcalc/classical_import.h"
#include "ebitcalc/cv.h"
#include "ebitcalc/laurent.h"
#include "ebitcalc/symplectic.h"

namespace ebitcalc {

inline constexpr uint64_t kDefaultSeed = 20080115;
inline constexpr size_t kMaxEnumerationRows = 20;
inline constexpr size_t kMaxGf4EnumerationRows = 10;

/// Rank from the size of the row space: enumerates all 2^rows combinations
/// and counts distinct vectors (= 2^rank). Throws SizeError above 20 rows.
size_t rank_by_span_enumeration(const BinMatrix &m);

/// GF(4) analogue: 4^rows combinations, 4^rank distinct. Throws SizeError above 10 rows.
size_t gf4_rank_by_span_enumeration(const Gf4Matrix &m);

/// Exact rank over the rationals. Every finite double is a rational, so the
/// conversion is lossless. Throws DomainError on non-finite entries.
size_t rank_by_rational_elimination(const RealMatrix &m);

/// GF(2^m) for 8 <= m <= 32, elements as bit polynomials modulo a fixed
/// irreducible polynomial.
class Gf2m {
   public:
    explicit Gf2m(int degree);

    int degree() const {
        return degree_;
    }
    /// Reduction polynomial including the x^m term.
    uint64_t modulus() const {
        return modulus_;
    }
    uint32_t order() const {
        return static_cast<uint32_t>((uint64_t{1} << degree_) - 1);
    }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// Precondition: a != 0.
    uint32_t inv(uint32_t a) const {
        return pow(a, order() - 1);
    }
    /// An element w with w^2 + w + 1 = 0, embedding GF(4). Requires even degree.
    uint32_t cube_root_of_unity() const;

   private:
    int degree_;
    uint64_t modulus_;
};

/// Rank over GF(2^m) of a matrix given as row-major element values.
size_t rank(const Gf2m &field, std::vector<std::vector<uint32_t>> m);

/// Evaluates every entry at D = point (nonzero), mapping GF(4) coefficients
/// through the embedding GF(4) -> GF(2^m).
template <typename F>
std::vector<std::vector<uint32_t>> evaluate(const LaurentMatrix<F> &m, const Gf2m &field, uint32_t point);

/// Max over `trials` uniform nonzero points of rank(M(a)) in GF(2^m). Never
/// exceeds laurent_rank(M); equal with high probability for large m.
template <typename F>
size_t laurent_rank_by_evaluation(const LaurentMatrix<F> &m, size_t trials, int field_degree, std::mt19937_64 &rng);

extern template size_t laurent_rank_by_evaluation<Gf2>(const LaurentMatrix<Gf2> &, size_t, int, std::mt19937_64 &);
extern template size_t laurent_rank_by_evaluation<Gf4>(const LaurentMatrix<Gf4> &, size_t, int, std::mt19937_64 &);

/// Checks the SGSOP output contract against its input; returns one message
/// per violated property (empty when everything holds).
std::vector<std::string> sgsop_violations(const QuantumCheckMatrix &h, const SgsopOutput &out);

/// True when omega is exactly J + ... + J (c blocks) followed by zeros.
bool is_symplectic_standard_form(const BinMatrix &omega, size_t c);

struct VerificationReport {
    std::string subject;
    size_t formula_value = 0;
    size_t procedure_value = 0;
    std::optional<size_t> oracle_value;
    /// formula == procedure (== oracle when present)
    bool agreement = false;
    /// SGSOP output contract held (standard form, invertible G, row space).
    bool invariants_hold = false;
    std::string details;
};

/// Rank formula vs SGSOP vs (for <= 20 generators) a span-enumeration oracle.
VerificationReport verify_code(const QuantumCheckMatrix &h, std::string subject = "check matrix");

/// Random check matrix with `generators` independent rows (generators <= 2n).
/// `density` is the probability of each bit being one.
QuantumCheckMatrix random_check_matrix(std::mt19937_64 &rng, size_t n, size_t generators, double density = 0.5);

struct SweepReport {
    uint64_t seed = kDefaultSeed;
    size_t cases = 0;
    size_t max_n = 0;
    /// (case index, report) for each failing case, sorted by index.
    std::vector<std::pair<size_t, VerificationReport>> failures;

    bool agreement() const {
        return failures.empty();
    }
};

/// Runs verify_code on `count` seeded random check matrices with n in
/// [1, max_n] and generators in [1, 2n]. Case i draws from its own generator
/// seeded from (seed, i), so results do not depend on `threads`.
SweepReport verify_random(size_t count, size_t max_n, uint64_t seed = kDefaultSeed, size_t threads = 0);

/// The random instance used by case `index` of verify_random.
QuantumCheckMatrix sweep_case(uint64_t seed, size_t index, size_t max_n);

}  // namespace ebitcalc

#endif
