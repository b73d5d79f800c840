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

#ifndef EBITCALC_FIELDS_H
#define EBITCALC_FIELDS_H

#include <array>
#include <cstdint>
#include <optional>

namespace ebitcalc {

/// An element of GF(2), used as a coefficient type for generic algorithms.
class Gf2 {
   public:
    constexpr Gf2() = default;
    constexpr explicit Gf2(bool bit) : bit_(bit) {
    }
    static constexpr Gf2 zero() {
        return Gf2(false);
    }
    static constexpr Gf2 one() {
        return Gf2(true);
    }

    constexpr bool bit() const {
        return bit_;
    }
    constexpr bool is_zero() const {
        return !bit_;
    }
    constexpr Gf2 conj() const {
        return *this;
    }
    /// Precondition: nonzero.
    constexpr Gf2 inverse() const {
        return *this;
    }

    friend constexpr Gf2 operator+(Gf2 a, Gf2 b) {
        return Gf2(a.bit_ != b.bit_);
    }
    friend constexpr Gf2 operator-(Gf2 a, Gf2 b) {
        return a + b;
    }
    friend constexpr Gf2 operator*(Gf2 a, Gf2 b) {
        return Gf2(a.bit_ && b.bit_);
    }
    constexpr Gf2 &operator+=(Gf2 o) {
        return *this = *this + o;
    }
    friend constexpr bool operator==(Gf2, Gf2) = default;

   private:
    bool bit_ = false;
};

/// An element of GF(4) = {0, 1, w, v} where w^2 = v = w + 1.
///
/// Encoded in two bits as a + b*w (bit 0 = a, bit 1 = b): 0 -> 00, 1 -> 01,
/// w -> 10, v -> 11. Addition is XOR; multiplication is a table lookup.
class Gf4 {
   public:
    constexpr Gf4() = default;
    static constexpr Gf4 from_code(uint8_t code) {
        return Gf4(code & 3);
    }
    static constexpr Gf4 zero() {
        return Gf4(0);
    }
    static constexpr Gf4 one() {
        return Gf4(1);
    }
    static constexpr Gf4 omega() {
        return Gf4(2);
    }
    static constexpr Gf4 omega_bar() {
        return Gf4(3);
    }
    /// Parses '0', '1', 'w', 'v'.
    static constexpr std::optional<Gf4> from_symbol(char c) {
        switch (c) {
            case '0':
                return zero();
            case '1':
                return one();
            case 'w':
                return omega();
            case 'v':
                return omega_bar();
            default:
                return std::nullopt;
        }
    }

    constexpr uint8_t code() const {
        return v_;
    }
    constexpr char symbol() const {
        return "01wv"[v_];
    }
    constexpr bool is_zero() const {
        return v_ == 0;
    }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) {
        return Gf4(a.v_ ^ b.v_);
    }
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) {
        return a + b;
    }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) {
        return Gf4(kMul[a.v_ * 4 + b.v_]);
    }
    constexpr Gf4 &operator+=(Gf4 o) {
        return *this = *this + o;
    }
    friend constexpr bool operator==(Gf4, Gf4) = default;

    /// Frobenius conjugate x^2: fixes 0 and 1, swaps w and v.
    constexpr Gf4 conj() const {
        return *this * *this;
    }
    /// x + conj(x), always 0 or 1.
    constexpr Gf4 trace() const {
        return *this + conj();
    }
    /// Precondition: nonzero. x^{-1} = x^2 since x^3 = 1.
    constexpr Gf4 inverse() const {
        return conj();
    }

   private:
    constexpr explicit Gf4(uint8_t v) : v_(v) {
    }
    // clang-format off
    static constexpr std::array<uint8_t, 16> kMul{
        0, 0, 0, 0,
        0, 1, 2, 3,
        0, 2, 3, 1,
        0, 3, 1, 2,
    };
    // clang-format on
    uint8_t v_ = 0;
};

}  // namespace ebitcalc

#endif
