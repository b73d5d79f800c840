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

#include "ebitcalc/text_format.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ebitcalc/errors.h"

namespace ebitcalc {

namespace {

struct Line {
    size_t number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    size_t number = 0;
    while (!text.empty()) {
        number++;
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        out.push_back({number, line});
    }
    return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            i++;
        }
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
            j++;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        size_t k = s.find(sep);
        out.push_back(trim(s.substr(0, k)));
        if (k == std::string_view::npos) {
            return out;
        }
        s = s.substr(k + 1);
    }
}

template <typename T>
bool parse_number(std::string_view s, T &out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

/// Validates the header line and returns its numeric fields.
std::vector<size_t> parse_header(const std::vector<Line> &lines, std::string_view keyword, std::string_view usage) {
    const std::string expected = "expected header '" + std::string(usage) + "'";
    if (lines.empty()) {
        throw ParseError("empty input; " + expected);
    }
    auto fields = split_ws(lines.front().text);
    size_t count = split_ws(usage).size() - 1;
    if (fields.empty() || fields.front() != keyword) {
        throw ParseError(expected + ", found '" + std::string(lines.front().text) + "'", lines.front().number);
    }
    if (fields.size() != count + 1) {
        throw ParseError(expected + " with " + std::to_string(count) + " numbers", lines.front().number);
    }
    std::vector<size_t> dims;
    for (size_t k = 1; k < fields.size(); k++) {
        size_t v = 0;
        if (!parse_number(fields[k], v)) {
            throw ParseError(expected + "; '" + std::string(fields[k]) + "' is not a nonnegative integer",
                             lines.front().number);
        }
        dims.push_back(v);
    }
    size_t data_rows = lines.size() - 1;
    size_t declared = dims[dims.size() - 2];
    if (data_rows != declared) {
        throw ParseError("header declares " + std::to_string(declared) + " rows but " + std::to_string(data_rows) +
                             " data rows follow",
                         data_rows > declared ? lines[declared + 1].number : lines.back().number);
    }
    return dims;
}

void parse_bits(std::string_view s, size_t expected, BinMatrix &m, size_t row, size_t col0, size_t line) {
    if (s.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " bits, found " + std::to_string(s.size()) + " in '" +
                             std::string(s) + "'",
                         line);
    }
    for (size_t c = 0; c < expected; c++) {
        if (s[c] != '0' && s[c] != '1') {
            throw ParseError(std::string("invalid bit '") + s[c] + "'", line);
        }
        m.set(row, col0 + c, s[c] == '1');
    }
}

/// Splits "left | right" into the two halves, each trimmed.
std::pair<std::string_view, std::string_view> split_bar(const Line &line) {
    auto parts = split_on(line.text, '|');
    if (parts.size() != 2) {
        throw ParseError("expected exactly one '|' separating the Z and X parts", line.number);
    }
    return {parts[0], parts[1]};
}

template <typename F>
LaurentPoly<F> parse_poly(std::string_view token) {
    std::string compact;
    for (char ch : token) {
        if (ch != ' ' && ch != '\t') {
            compact += ch;
        }
    }
    if (compact.empty()) {
        throw ParseError("empty polynomial");
    }
    LaurentPoly<F> sum;
    if (compact == "0") {
        return sum;
    }
    for (std::string_view term : split_on(compact, '+')) {
        if (term.empty()) {
            throw ParseError("empty term in polynomial '" + compact + "'");
        }
        F coeff = F::one();
        std::string_view mono = term;
        size_t star = term.find('*');
        auto parse_coeff = [&](std::string_view c) -> F {
            if (c == "1") {
                return F::one();
            }
            if constexpr (std::is_same_v<F, Gf4>) {
                if (c.size() == 1) {
                    if (auto e = Gf4::from_symbol(c[0]); e && !e->is_zero()) {
                        return *e;
                    }
                }
            }
            throw ParseError("invalid coefficient '" + std::string(c) + "' in polynomial '" + compact + "'");
        };
        if (star != std::string_view::npos) {
            coeff = parse_coeff(term.substr(0, star));
            mono = term.substr(star + 1);
        } else if (term != "D" && term.substr(0, 2) != "D^") {
            sum += LaurentPoly<F>::constant(parse_coeff(term));
            continue;
        }
        int exponent = 0;
        if (mono == "D") {
            exponent = 1;
        } else if (mono == "1") {
            exponent = 0;
        } else if (mono.substr(0, 2) == "D^") {
            std::string_view e = mono.substr(2);
            if (e.size() >= 2 && ((e.front() == '(' && e.back() == ')') || (e.front() == '{' && e.back() == '}'))) {
                e = e.substr(1, e.size() - 2);
            }
            if (!parse_number(e, exponent)) {
                throw ParseError("invalid exponent in term '" + std::string(term) + "'");
            }
        } else {
            throw ParseError("invalid term '" + std::string(term) + "' in polynomial '" + compact + "'");
        }
        sum += LaurentPoly<F>::monomial(coeff, exponent);
    }
    return sum;
}

template <typename F>
void parse_poly_row(std::string_view s, size_t expected, LaurentMatrix<F> &m, size_t row, size_t line) {
    auto tokens = split_on(s, ',');
    if (tokens.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " comma-separated polynomials, found " +
                             std::to_string(tokens.size()),
                         line);
    }
    for (size_t c = 0; c < expected; c++) {
        try {
            m.at(row, c) = parse_poly<F>(tokens[c]);
        } catch (const ParseError &e) {
            throw ParseError(e.what(), line);
        }
    }
}

template <typename F>
LaurentMatrix<F> parse_poly_matrix(std::string_view text, std::string_view keyword, std::string_view usage) {
    auto lines = content_lines(text);
    auto dims = parse_header(lines, keyword, usage);
    LaurentMatrix<F> m(dims[0], dims[1]);
    for (size_t r = 0; r < dims[0]; r++) {
        parse_poly_row(lines[r + 1].text, dims[1], m, r, lines[r + 1].number);
    }
    m.check_exponent_limit();
    return m;
}

}  // namespace

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BinMatrix parse_gf2(std::string_view text) {
    auto lines = content_lines(text);
    auto dims = parse_header(lines, "gf2", "gf2 <rows> <cols>");
    BinMatrix m(dims[0], dims[1]);
    for (size_t r = 0; r < dims[0]; r++) {
        parse_bits(lines[r + 1].text, dims[1], m, r, 0, lines[r + 1].number);
    }
    return m;
}

QuantumCheckMatrix parse_qcheck(std::string_view text, DependentRows policy) {
    auto lines = content_lines(text);
    auto dims = parse_header(lines, "qcheck", "qcheck <generators> <n>");
    const size_t g = dims[0];
    const size_t n = dims[1];
    BinMatrix hz(g, n);
    BinMatrix hx(g, n);
    for (size_t r = 0; r < g; r++) {
        const Line &line = lines[r + 1];
        auto [z, x] = split_bar(line);
        parse_bits(z, n, hz, r, 0, line.number);
        parse_bits(x, n, hx, r, 0, line.number);
    }
    return QuantumCheckMatrix::from_blocks(std::move(hz), std::move(hx), policy);
}

Gf4Matrix parse_gf4(std::string_view text) {
    auto lines = content_lines(text);
    auto dims = parse_header(lines, "gf4", "gf4 <rows> <cols>");
    Gf4Matrix m(dims[0], dims[1]);
    for (size_t r = 0; r < dims[0]; r++) {
        const Line &line = lines[r + 1];
        if (line.text.size() != dims[1]) {
            throw ParseError("expected " + std::to_string(dims[1]) + " symbols, found " +
                                 std::to_string(line.text.size()),
                             line.number);
        }
        for (size_t c = 0; c < dims[1]; c++) {
            auto e = Gf4::from_symbol(line.text[c]);
            if (!e) {
                throw ParseError(std::string("invalid GF(4) symbol '") + line.text[c] + "' (use 0, 1, w, v)",
                                 line.number);
            }
            m.at(r, c) = *e;
        }
    }
    return m;
}

namespace {

void parse_residues(std::string_view s, size_t expected, ModMatrix &m, size_t row, size_t line) {
    auto fields = split_ws(s);
    if (fields.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " residues, found " + std::to_string(fields.size()),
                         line);
    }
    for (size_t c = 0; c < expected; c++) {
        int64_t v = 0;
        if (!parse_number(fields[c], v)) {
            throw ParseError("'" + std::string(fields[c]) + "' is not an integer", line);
        }
        m.set(row, c, v);
    }
}

void parse_reals(std::string_view s, size_t expected, RealMatrix &m, size_t row, size_t line) {
    auto fields = split_ws(s);
    if (fields.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " reals, found " + std::to_string(fields.size()),
                         line);
    }
    for (size_t c = 0; c < expected; c++) {
        double v = 0;
        std::string_view f = fields[c];
        if (!f.empty() && f.front() == '+') {
            f.remove_prefix(1);
        }
        if (!parse_number(f, v)) {
            throw ParseError("'" + std::string(fields[c]) + "' is not a decimal number", line);
        }
        m.at(row, c) = v;
    }
}

uint32_t checked_modulus(size_t d, size_t line) {
    if (d > UINT32_MAX) {
        throw ParseError("modulus too large", line);
    }
    return static_cast<uint32_t>(d);
}

}  // namespace

ModMatrix parse_zmod(std::string_view text) {
    auto lines = content_lines(text);
    auto dims = parse_header(lines, "zmod", "zmod <d> <rows> <cols>");
    ModMatrix m(dims[1], dims[2], checked_modulus(dims[0], lines.front().number));
    for (size_t r = 0; r < dims[1]; r++) {
        parse_residues(lines[r + 1].text, dims[2], m, r, lines[r + 1].number);
    }
    return m;
}

QuditCheckMatrix parse_qcheckd(std::string_view text) {
    auto lines = content_lines(text);
    auto dims = parse_header(lines, "qcheckd", "qcheckd <d> <generators> <n>");
    uint32_t d = checked_modulus(dims[0], lines.front().number);
    QuditCheckMatrix h{ModMatrix(dims[1], dims[2], d), ModMatrix(dims[1], dims[2], d)};
    for (size_t r = 0; r < dims[1]; r++) {
        const Line &line = lines[r + 1];
        auto [z, x] = split_bar(line);
        parse_residues(z, dims[2], h.hz, r, line.number);
        parse_residues(x, dims[2], h.hx, r, line.number);
    }
    return h;
}

RealCheckMatrix parse_cvcheck(std::string_view text, double tolerance) {
    auto lines = content_lines(text);
    auto dims = parse_header(lines, "cvcheck", "cvcheck <generators> <n>");
    RealMatrix hz(dims[0], dims[1]);
    RealMatrix hx(dims[0], dims[1]);
    for (size_t r = 0; r < dims[0]; r++) {
        const Line &line = lines[r + 1];
        auto [z, x] = split_bar(line);
        parse_reals(z, dims[1], hz, r, line.number);
        parse_reals(x, dims[1], hx, r, line.number);
    }
    return RealCheckMatrix(std::move(hz), std::move(hx), tolerance);
}

LaurentCheckMatrix parse_conv(std::string_view text) {
    auto lines = content_lines(text);
    auto dims = parse_header(lines, "conv", "conv <generators> <n>");
    BinLaurentMatrix hz(dims[0], dims[1]);
    BinLaurentMatrix hx(dims[0], dims[1]);
    for (size_t r = 0; r < dims[0]; r++) {
        const Line &line = lines[r + 1];
        auto [z, x] = split_bar(line);
        parse_poly_row(z, dims[1], hz, r, line.number);
        parse_poly_row(x, dims[1], hx, r, line.number);
    }
    return LaurentCheckMatrix(std::move(hz), std::move(hx));
}

Gf4LaurentMatrix parse_conv4(std::string_view text) {
    return parse_poly_matrix<Gf4>(text, "conv4", "conv4 <rows> <cols>");
}

BinLaurentMatrix parse_lpoly(std::string_view text) {
    return parse_poly_matrix<Gf2>(text, "lpoly", "lpoly <rows> <cols>");
}

BinLaurentPoly parse_bin_laurent_poly(std::string_view token) {
    return parse_poly<Gf2>(token);
}

Gf4LaurentPoly parse_gf4_laurent_poly(std::string_view token) {
    return parse_poly<Gf4>(token);
}

std::string format_gf2(const BinMatrix &m) {
    return "gf2 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + m.str();
}

std::string format_qcheck(const QuantumCheckMatrix &h) {
    std::string s = "qcheck " + std::to_string(h.num_generators()) + " " + std::to_string(h.num_qubits()) + "\n";
    for (size_t r = 0; r < h.num_generators(); r++) {
        s += h.row_str(r) + "\n";
    }
    return s;
}

std::string format_gf4(const Gf4Matrix &m) {
    return "gf4 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + m.str();
}

std::string format_conv(const LaurentCheckMatrix &h) {
    std::string s = "conv " + std::to_string(h.num_generators()) + " " + std::to_string(h.num_qubits()) + "\n";
    for (size_t r = 0; r < h.num_generators(); r++) {
        for (size_t c = 0; c < h.num_qubits(); c++) {
            s += (c ? "," : "") + h.hz().at(r, c).str();
        }
        s += " | ";
        for (size_t c = 0; c < h.num_qubits(); c++) {
            s += (c ? "," : "") + h.hx().at(r, c).str();
        }
        s += "\n";
    }
    return s;
}

}  // namespace ebitcalc
