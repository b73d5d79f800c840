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

#include "ebitcalc/verify.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <mutex>
#include <string_view>
#include <thread>
#include <unordered_set>

#include "ebitcalc/errors.h"

namespace ebitcalc {

namespace {

size_t log_base(size_t count, size_t base) {
    size_t r = 0;
    size_t v = 1;
    while (v < count) {
        v *= base;
        r++;
    }
    if (v != count) {
        throw InternalError("span size " + std::to_string(count) + " is not a power of " + std::to_string(base));
    }
    return r;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Irreducible polynomials over GF(2), indexed by degree - 8, with the x^m term.
constexpr uint64_t kIrreducible[] = {
    0x11D,      0x211,      0x409,      0x805,      0x1053,      0x201B,      0x4443,
    0x8003,     0x1100B,    0x20009,    0x40081,    0x80027,     0x100009,    0x200005,
    0x400003,   0x800021,   0x1000087,  0x2000009,  0x4000047,   0x8000027,   0x10000009,
    0x20000005, 0x40000053, 0x80000009, 0x100400007,
};

}  // namespace

size_t rank_by_span_enumeration(const BinMatrix &m) {
    if (m.rows() > kMaxEnumerationRows) {
        throw SizeError("span enumeration supports at most " + std::to_string(kMaxEnumerationRows) + " rows, got " +
                        std::to_string(m.rows()));
    }
    const size_t stride = m.words_per_row();
    std::vector<uint64_t> acc(stride, 0);
    auto key = [&] { return std::string(reinterpret_cast<const char *>(acc.data()), stride * sizeof(uint64_t)); };
    std::unordered_set<std::string> seen;
    seen.insert(key());
    // Gray code order: each step toggles exactly one row in the combination.
    const uint64_t total = uint64_t{1} << m.rows();
    for (uint64_t i = 1; i < total; i++) {
        auto row = m.row_words(static_cast<size_t>(std::countr_zero(i)));
        for (size_t w = 0; w < stride; w++) {
            acc[w] ^= row[w];
        }
        seen.insert(key());
    }
    return log_base(seen.size(), 2);
}

size_t gf4_rank_by_span_enumeration(const Gf4Matrix &m) {
    if (m.rows() > kMaxGf4EnumerationRows) {
        throw SizeError("GF(4) span enumeration supports at most " + std::to_string(kMaxGf4EnumerationRows) +
                        " rows, got " + std::to_string(m.rows()));
    }
    std::unordered_set<std::string> seen;
    std::string acc(m.cols(), '\0');
    auto recurse = [&](auto &self, size_t row) -> void {
        if (row == m.rows()) {
            seen.insert(acc);
            return;
        }
        std::string saved = acc;
        for (uint8_t code = 0; code < 4; code++) {
            Gf4 s = Gf4::from_code(code);
            for (size_t c = 0; c < m.cols(); c++) {
                acc[c] = static_cast<char>((Gf4::from_code(static_cast<uint8_t>(saved[c])) + s * m.at(row, c)).code());
            }
            self(self, row + 1);
        }
        acc = saved;
    };
    recurse(recurse, 0);
    return log_base(seen.size(), 4);
}

size_t rank_by_rational_elimination(const RealMatrix &m) {
    using boost::multiprecision::cpp_rational;
    std::vector<std::vector<cpp_rational>> a(m.rows(), std::vector<cpp_rational>(m.cols()));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (!std::isfinite(m.at(r, c))) {
                throw DomainError("rational elimination needs finite entries");
            }
            a[r][c] = cpp_rational(m.at(r, c));
        }
    }
    size_t top = 0;
    for (size_t c = 0; c < m.cols() && top < m.rows(); c++) {
        size_t pivot = top;
        while (pivot < m.rows() && a[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        std::swap(a[pivot], a[top]);
        for (size_t i = top + 1; i < m.rows(); i++) {
            if (a[i][c] == 0) {
                continue;
            }
            cpp_rational f = a[i][c] / a[top][c];
            for (size_t j = c; j < m.cols(); j++) {
                a[i][j] -= f * a[top][j];
            }
        }
        top++;
    }
    return top;
}

Gf2m::Gf2m(int degree) : degree_(degree) {
    if (degree < 8 || degree > 32) {
        throw DomainError("GF(2^m) evaluation supports 8 <= m <= 32, got m = " + std::to_string(degree));
    }
    modulus_ = kIrreducible[degree - 8];
}

uint32_t Gf2m::mul(uint32_t a, uint32_t b) const {
    uint64_t x = a;
    uint64_t r = 0;
    while (b) {
        if (b & 1) {
            r ^= x;
        }
        b >>= 1;
        x <<= 1;
        if ((x >> degree_) & 1) {
            x ^= modulus_;
        }
    }
    return static_cast<uint32_t>(r);
}

uint32_t Gf2m::pow(uint32_t a, uint64_t e) const {
    uint32_t result = 1;
    while (e) {
        if (e & 1) {
            result = mul(result, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

uint32_t Gf2m::cube_root_of_unity() const {
    if (degree_ % 2 != 0) {
        throw DomainError("GF(4) embeds in GF(2^m) only for even m");
    }
    for (uint32_t y = 2;; y++) {
        uint32_t w = pow(y, order() / 3);
        if (w != 1) {
            return w;
        }
    }
}

size_t rank(const Gf2m &field, std::vector<std::vector<uint32_t>> a) {
    const size_t rows = a.size();
    const size_t cols = rows ? a.front().size() : 0;
    size_t top = 0;
    for (size_t c = 0; c < cols && top < rows; c++) {
        size_t pivot = top;
        while (pivot < rows && a[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(a[pivot], a[top]);
        uint32_t inv = field.inv(a[top][c]);
        for (size_t i = top + 1; i < rows; i++) {
            if (a[i][c] == 0) {
                continue;
            }
            uint32_t f = field.mul(a[i][c], inv);
            for (size_t j = c; j < cols; j++) {
                a[i][j] ^= field.mul(f, a[top][j]);
            }
        }
        top++;
    }
    return top;
}

template <typename F>
std::vector<std::vector<uint32_t>> evaluate(const LaurentMatrix<F> &m, const Gf2m &field, uint32_t point) {
    uint32_t embed[4] = {0, 1, 0, 0};
    if constexpr (std::is_same_v<F, Gf4>) {
        embed[2] = field.cube_root_of_unity();
        embed[3] = field.mul(embed[2], embed[2]);
    }
    const uint32_t point_inv = field.inv(point);
    std::vector<std::vector<uint32_t>> out(m.rows(), std::vector<uint32_t>(m.cols(), 0));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            uint32_t v = 0;
            for (auto [e, coeff] : m.at(r, c).terms()) {
                uint32_t power = e >= 0 ? field.pow(point, static_cast<uint64_t>(e))
                                        : field.pow(point_inv, static_cast<uint64_t>(-static_cast<int64_t>(e)));
                uint32_t k;
                if constexpr (std::is_same_v<F, Gf4>) {
                    k = embed[coeff.code()];
                } else {
                    k = coeff.bit() ? 1 : 0;
                }
                v ^= field.mul(k, power);
            }
            out[r][c] = v;
        }
    }
    return out;
}

template std::vector<std::vector<uint32_t>> evaluate<Gf2>(const LaurentMatrix<Gf2> &, const Gf2m &, uint32_t);
template std::vector<std::vector<uint32_t>> evaluate<Gf4>(const LaurentMatrix<Gf4> &, const Gf2m &, uint32_t);

template <typename F>
size_t laurent_rank_by_evaluation(const LaurentMatrix<F> &m, size_t trials, int field_degree, std::mt19937_64 &rng) {
    if (trials == 0) {
        throw DomainError("evaluation oracle needs at least one trial");
    }
    Gf2m field(field_degree);
    std::uniform_int_distribution<uint32_t> pick(1, field.order());
    size_t best = 0;
    for (size_t t = 0; t < trials; t++) {
        best = std::max(best, rank(field, evaluate(m, field, pick(rng))));
    }
    return best;
}

template size_t laurent_rank_by_evaluation<Gf2>(const LaurentMatrix<Gf2> &, size_t, int, std::mt19937_64 &);
template size_t laurent_rank_by_evaluation<Gf4>(const LaurentMatrix<Gf4> &, size_t, int, std::mt19937_64 &);

bool is_symplectic_standard_form(const BinMatrix &omega, size_t c) {
    if (omega.rows() != omega.cols() || 2 * c > omega.rows()) {
        return false;
    }
    for (size_t i = 0; i < omega.rows(); i++) {
        for (size_t j = 0; j < omega.cols(); j++) {
            bool expected = i < 2 * c && j < 2 * c && (i ^ 1) == j;
            if (omega.get(i, j) != expected) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::string> sgsop_violations(const QuantumCheckMatrix &h, const SgsopOutput &out) {
    std::vector<std::string> problems;
    const size_t g = h.num_generators();
    if (out.pairs.size() * 2 + out.isotropic.size() != g) {
        problems.push_back("pair and isotropic rows do not partition the generators");
    }
    if (out.ebits != out.pairs.size()) {
        problems.push_back("ebits differs from the number of symplectic pairs");
    }
    for (size_t k = 0; k < out.pairs.size(); k++) {
        if (out.pairs[k] != std::make_pair(2 * k, 2 * k + 1)) {
            problems.push_back("symplectic pairs are not in leading position");
            break;
        }
    }
    if (out.transform.rows() != g || out.transform.cols() != g || rank(out.transform) != g) {
        problems.push_back("transform G is not an invertible generators x generators matrix");
    }
    if (out.transform.cols() == g && matmul(out.transform, h.stacked()) != out.transformed.stacked()) {
        problems.push_back("G * H differs from the transformed check matrix");
    }
    if (rank(vstack(h.stacked(), out.transformed.stacked())) != g) {
        problems.push_back("row space changed");
    }
    BinMatrix omega = symplectic_product_matrix(h);
    BinMatrix omega_t = symplectic_product_matrix(out.transformed);
    if (out.transform.cols() == g && matmul(matmul(out.transform, omega), out.transform.transpose()) != omega_t) {
        problems.push_back("Omega(H') differs from G Omega(H) G^T");
    }
    if (!is_symplectic_standard_form(omega_t, out.ebits)) {
        problems.push_back("Omega(H') is not in the standard form J + ... + J + 0");
    }
    return problems;
}

VerificationReport verify_code(const QuantumCheckMatrix &h, std::string subject) {
    VerificationReport report;
    report.subject = std::move(subject);
    report.formula_value = ebit_count(h);
    SgsopOutput out = sgsop(h);
    report.procedure_value = out.ebits;
    std::string details;
    if (h.num_generators() <= kMaxEnumerationRows) {
        size_t r = rank_by_span_enumeration(symplectic_product_matrix(h));
        if (r % 2 != 0) {
            details += "oracle rank of Omega is odd (" + std::to_string(r) + "); ";
        }
        report.oracle_value = r / 2;
    } else {
        details += "oracle skipped (more than " + std::to_string(kMaxEnumerationRows) + " generators); ";
    }
    report.agreement = report.formula_value == report.procedure_value &&
                       (!report.oracle_value || *report.oracle_value == report.formula_value);
    std::vector<std::string> problems = sgsop_violations(h, out);
    report.invariants_hold = problems.empty();
    for (const auto &p : problems) {
        details += p + "; ";
    }
    if (details.empty()) {
        details = "ok";
    } else {
        details.resize(details.size() - 2);
    }
    report.details = std::move(details);
    return report;
}

QuantumCheckMatrix random_check_matrix(std::mt19937_64 &rng, size_t n, size_t generators, double density) {
    if (generators > 2 * n) {
        throw DomainError("at most 2n independent symplectic vectors exist on n qubits");
    }
    std::bernoulli_distribution bit(density);
    BinMatrix rows(0, 2 * n);
    while (rows.rows() < generators) {
        BinMatrix candidate(1, 2 * n);
        for (size_t c = 0; c < 2 * n; c++) {
            candidate.set(0, c, bit(rng));
        }
        BinMatrix grown = vstack(rows, candidate);
        if (rank(grown) == grown.rows()) {
            rows = std::move(grown);
        }
    }
    return QuantumCheckMatrix::from_stacked(rows);
}

QuantumCheckMatrix sweep_case(uint64_t seed, size_t index, size_t max_n) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
    size_t n = std::uniform_int_distribution<size_t>(1, std::max<size_t>(max_n, 1))(rng);
    size_t generators = std::uniform_int_distribution<size_t>(1, 2 * n)(rng);
    constexpr double kDensities[] = {0.5, 0.3, 0.15};
    double density = kDensities[std::uniform_int_distribution<size_t>(0, 2)(rng)];
    return random_check_matrix(rng, n, generators, density);
}

SweepReport verify_random(size_t count, size_t max_n, uint64_t seed, size_t threads) {
    SweepReport sweep;
    sweep.seed = seed;
    sweep.cases = count;
    sweep.max_n = max_n;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, std::max<size_t>(count, 1));

    std::atomic<size_t> next{0};
    std::mutex mu;
    auto worker = [&] {
        for (size_t i = next++; i < count; i = next++) {
            QuantumCheckMatrix h = sweep_case(seed, i, max_n);
            VerificationReport report =
                verify_code(h, "random case " + std::to_string(i) + " (n=" + std::to_string(h.num_qubits()) +
                                   ", generators=" + std::to_string(h.num_generators()) + ")");
            if (!report.agreement || !report.invariants_hold) {
                std::lock_guard lock(mu);
                sweep.failures.emplace_back(i, std::move(report));
            }
        }
    };
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < threads; t++) {
        pool.emplace_back(worker);
    }
    pool.clear();
    std::sort(sweep.failures.begin(), sweep.failures.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    return sweep;
}

}  // namespace ebitcalc
