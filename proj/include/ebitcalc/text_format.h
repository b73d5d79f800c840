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

#ifndef EBITCALC_TEXT_FORMAT_H
#define EBITCALC_TEXT_FORMAT_H

#include <string>
#include <string_view>

#include "ebitcalc/bin_matrix.h"
#include "ebitcalc/classical_import.h"
#include "ebitcalc/cv.h"
#include "ebitcalc/laurent.h"
#include "ebitcalc/qudit.h"
#include "ebitcalc/symplectic.h"

namespace ebitcalc {

// Line-oriented ASCII matrix formats. Blank lines and lines whose first
// non-space character is '#' are ignored everywhere. The first remaining line
// is a header naming the format and its dimensions.
//
//   gf2 <rows> <cols>              rows of exactly <cols> chars from {0,1}
//   qcheck <generators> <n>        <n> bits (Z part) '|' <n> bits (X part)
//   gf4 <rows> <cols>              rows of <cols> chars from {0,1,w,v}
//   zmod <d> <rows> <cols>         whitespace-separated integer residues
//   qcheckd <d> <generators> <n>   residues (Z part) '|' residues (X part)
//   cvcheck <generators> <n>       reals (Z part) '|' reals (X part)
//   conv <generators> <n>          comma-separated polynomials, Z '|' X
//   conv4 <rows> <cols>            comma-separated GF(4) polynomials
//   lpoly <rows> <cols>            comma-separated GF(2) polynomials
//
// Polynomials are sums of terms `1`, `D`, `D^k`, `D^-k` (or `0`). Over GF(4)
// a term may carry a coefficient prefix from {1,w,v}, as in `w*D^2` or `v`.

std::string read_text_file(const std::string &path);

BinMatrix parse_gf2(std::string_view text);
QuantumCheckMatrix parse_qcheck(std::string_view text, DependentRows policy = DependentRows::kReject);
Gf4Matrix parse_gf4(std::string_view text);
ModMatrix parse_zmod(std::string_view text);
QuditCheckMatrix parse_qcheckd(std::string_view text);
RealCheckMatrix parse_cvcheck(std::string_view text, double tolerance = kDefaultCvTolerance);
LaurentCheckMatrix parse_conv(std::string_view text);
Gf4LaurentMatrix parse_conv4(std::string_view text);
BinLaurentMatrix parse_lpoly(std::string_view text);

BinLaurentPoly parse_bin_laurent_poly(std::string_view token);
Gf4LaurentPoly parse_gf4_laurent_poly(std::string_view token);

std::string format_gf2(const BinMatrix &m);
std::string format_qcheck(const QuantumCheckMatrix &h);
std::string format_gf4(const Gf4Matrix &m);
std::string format_conv(const LaurentCheckMatrix &h);

}  // namespace ebitcalc

#endif
