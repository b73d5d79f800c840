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

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ebitcalc/bin_matrix.h"
#include "ebitcalc/classical_import.h"
#include "ebitcalc/cli.h"
#include "ebitcalc/cv.h"
#include "ebitcalc/errors.h"
#include "ebitcalc/laurent.h"
#include "ebitcalc/qudit.h"
#include "ebitcalc/symplectic.h"
#include "ebitcalc/text_format.h"
#include "ebitcalc/verify.h"
#include "pybind11/pybind11.h"
#include "pybind11/stl.h"

namespace py = pybind11;
using namespace ebitcalc;

namespace {

using IntRows = std::vector<std::vector<int>>;

IntRows to_rows(const BinMatrix &m) {
    IntRows out(m.rows(), std::vector<int>(m.cols()));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out[r][c] = m.get(r, c);
        }
    }
    return out;
}

BinMatrix from_rows(const IntRows &rows, size_t fallback_cols = 0) {
    if (rows.empty()) {
        return BinMatrix(0, fallback_cols);
    }
    return BinMatrix::from_ints(rows);
}

QuantumCheckMatrix check_matrix(const IntRows &hz, const IntRows &hx, bool reduce) {
    return QuantumCheckMatrix::from_blocks(from_rows(hz), from_rows(hx),
                                           reduce ? DependentRows::kDrop : DependentRows::kReject);
}

py::dict params_dict(const CodeParameters &p) {
    py::dict d;
    d["n"] = p.n;
    d["generators"] = p.generators;
    d["ebits"] = p.ebits;
    d["logical"] = p.logical;
    d["ancillas"] = p.ancillas;
    d["distance"] = p.distance;
    d["text"] = p.str();
    return d;
}

RealMatrix real_matrix(const std::vector<std::vector<double>> &rows) {
    return RealMatrix::from_rows(rows);
}


}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entanglement-assisted stabilizer code calculator";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<DependentRowsError>(m, "DependentRowsError", domain.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());

    m.def(
        "gf2_rank", [](const IntRows &rows) { return rank(from_rows(rows)); }, py::arg("matrix"),
        "Rank over GF(2) of a 0/1 matrix.");

    m.def(
        "symplectic_product_matrix",
        [](const IntRows &hz, const IntRows &hx, bool reduce) {
            return to_rows(symplectic_product_matrix(check_matrix(hz, hx, reduce)));
        },
        py::arg("hz"), py::arg("hx"), py::arg("reduce") = false);

    m.def(
        "ebits", [](const IntRows &hz, const IntRows &hx, bool reduce) { return ebit_count(check_matrix(hz, hx, reduce)); },
        py::arg("hz"), py::arg("hx"), py::arg("reduce") = false,
        "Minimal ebit count for the check matrix [hz | hx].");

    m.def(
        "ebits_from_paulis",
        [](const std::vector<std::string> &paulis, bool reduce) {
            return ebit_count(
                QuantumCheckMatrix::from_paulis(paulis, reduce ? DependentRows::kDrop : DependentRows::kReject));
        },
        py::arg("paulis"), py::arg("reduce") = false);

    m.def(
        "code_parameters",
        [](const IntRows &hz, const IntRows &hx, std::optional<size_t> distance, bool reduce) {
            return params_dict(code_parameters(check_matrix(hz, hx, reduce), distance));
        },
        py::arg("hz"), py::arg("hx"), py::arg("distance") = py::none(), py::arg("reduce") = false);

    m.def(
        "sgsop",
        [](const IntRows &hz, const IntRows &hx, bool reduce) {
            SgsopOutput out = sgsop(check_matrix(hz, hx, reduce));
            py::dict d;
            d["transform"] = to_rows(out.transform);
            d["hz"] = to_rows(out.transformed.hz());
            d["hx"] = to_rows(out.transformed.hx());
            d["pairs"] = out.pairs;
            d["isotropic"] = out.isotropic;
            d["ebits"] = out.ebits;
            return d;
        },
        py::arg("hz"), py::arg("hx"), py::arg("reduce") = false,
        "Symplectic Gram-Schmidt reduction; returns G, G*H and the pairing.");

    m.def(
        "css_ebits", [](const IntRows &h1, const IntRows &h2) { return css_ebits(from_rows(h1), from_rows(h2)); },
        py::arg("h1"), py::arg("h2"));

    m.def(
        "gf4_ebits",
        [](const std::vector<std::string> &rows) { return gf4_ebits(Gf4Matrix::from_strings(rows)); },
        py::arg("rows"), "Rows use the symbols 0, 1, w, v.");

    m.def(
        "qudit_ebits",
        [](const std::vector<std::vector<int64_t>> &hz, const std::vector<std::vector<int64_t>> &hx, uint32_t d) {
            return qudit_ebits(ModMatrix::from_ints(hz, d), ModMatrix::from_ints(hx, d));
        },
        py::arg("hz"), py::arg("hx"), py::arg("d"));

    m.def(
        "cv_ebits",
        [](const std::vector<std::vector<double>> &hz, const std::vector<std::vector<double>> &hx, double tol) {
            return cv_ebit_count(RealCheckMatrix(real_matrix(hz), real_matrix(hx), tol));
        },
        py::arg("hz"), py::arg("hx"), py::arg("tol") = kDefaultCvTolerance);

    m.def(
        "conv_ebits",
        [](const std::vector<std::vector<std::string>> &hz, const std::vector<std::vector<std::string>> &hx) {
            auto build = [](const std::vector<std::vector<std::string>> &rows) {
                BinLaurentMatrix out(rows.size(), rows.empty() ? 0 : rows[0].size());
                for (size_t r = 0; r < rows.size(); r++) {
                    if (rows[r].size() != out.cols()) {
                        throw ShapeError("ragged rows in polynomial matrix");
                    }
                    for (size_t c = 0; c < rows[r].size(); c++) {
                        out.at(r, c) = parse_bin_laurent_poly(rows[r][c]);
                    }
                }
                return out;
            };
            return conv_ebits(LaurentCheckMatrix(build(hz), build(hx)));
        },
        py::arg("hz"), py::arg("hx"), "Polynomial entries such as \"1+D^-1\"; the count is conjectured.");

    m.def(
        "verify_random",
        [](size_t count, size_t max_n, uint64_t seed) {
            SweepReport report;
            {
                py::gil_scoped_release release;
                report = verify_random(count, max_n, seed);
            }
            py::dict d;
            d["cases"] = report.cases;
            d["agreement"] = report.agreement();
            std::vector<size_t> failing;
            for (const auto &f : report.failures) {
                failing.push_back(f.first);
            }
            d["failures"] = failing;
            return d;
        },
        py::arg("count"), py::arg("max_n") = 12, py::arg("seed") = kDefaultSeed);

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
