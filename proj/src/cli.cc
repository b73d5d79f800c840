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

#include "ebitcalc/cli.h"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ebitcalc/classical_import.h"
#include "ebitcalc/cv.h"
#include "ebitcalc/errors.h"
#include "ebitcalc/laurent.h"
#include "ebitcalc/qudit.h"
#include "ebitcalc/text_format.h"
#include "ebitcalc/verify.h"

namespace ebitcalc {

using nlohmann::json;

json CliResult::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["quantity"] = quantity;
    j["conjectured"] = conjectured;
    if (params) {
        j["n"] = params->n;
        j["generators"] = params->generators;
        j["ebits"] = params->ebits;
        j["logical"] = params->logical;
        j["ancillas"] = params->ancillas;
        if (params->distance) {
            j["distance"] = *params->distance;
        }
    }
    if (!details.empty()) {
        j["details"] = details;
    }
    return j;
}

CliResult CliResult::from_json(const json &j) {
    CliResult r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::vector<std::string>>();
    r.quantity = j.at("quantity").get<std::string>();
    r.conjectured = j.at("conjectured").get<bool>();
    if (j.contains("ebits")) {
        CodeParameters p;
        p.n = j.at("n").get<size_t>();
        p.generators = j.at("generators").get<size_t>();
        p.ebits = j.at("ebits").get<size_t>();
        p.logical = j.at("logical").get<int64_t>();
        p.ancillas = j.at("ancillas").get<int64_t>();
        if (j.contains("distance")) {
            p.distance = j.at("distance").get<size_t>();
        }
        r.params = p;
    }
    if (j.contains("details")) {
        r.details = j.at("details");
    }
    return r;
}

namespace {

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

std::string render_verification(const json &d) {
    std::ostringstream s;
    s << "subject: " << d.at("subject").get<std::string>() << "\n";
    s << "formula (rank of Omega / 2): " << d.at("formula").get<size_t>() << "\n";
    s << "procedure (SGSOP pairs): " << d.at("procedure").get<size_t>() << "\n";
    if (d.contains("oracle")) {
        s << "oracle (span enumeration): " << d.at("oracle").get<size_t>() << "\n";
    }
    s << "agreement: " << yes_no(d.at("agreement").get<bool>()) << "\n";
    s << "sgsop invariants: " << yes_no(d.at("invariants_hold").get<bool>()) << "\n";
    s << "details: " << d.at("message").get<std::string>() << "\n";
    return s.str();
}

}  // namespace

std::string CliResult::to_text(bool quiet) const {
    std::ostringstream s;
    const std::string marker = conjectured ? " (conjectured)" : "";
    if (command == "gf4-expand") {
        return details.at("qcheck").get<std::string>();
    }
    if (command == "verify" && details.contains("cases")) {
        if (quiet) {
            return yes_no(details.at("agreement").get<bool>()) + "\n";
        }
        s << "random cases: " << details.at("cases").get<size_t>() << " (max n " << details.at("max_n").get<size_t>()
          << ", seed " << details.at("seed").get<uint64_t>() << ")\n";
        s << "failures: " << details.at("failures").size() << "\n";
        for (const auto &f : details.at("failures")) {
            s << "--- case " << f.at("case").get<size_t>() << "\n" << render_verification(f);
        }
        s << "agreement: " << yes_no(details.at("agreement").get<bool>()) << "\n";
        return s.str();
    }
    if (!params) {
        return s.str();
    }
    if (quiet) {
        s << params->ebits << "\n";
        return s.str();
    }
    s << quantity << ": " << params->ebits << marker << "\n";
    s << (conjectured ? "code per frame: " : "code: ") << params->str() << marker << "\n";
    s << "n: " << params->n << ", generators: " << params->generators << ", logical: " << params->logical
      << ", ancillas: " << params->ancillas << "\n";
    if (command == "sgsop") {
        s << "transform G:\n";
        for (const auto &row : details.at("transform")) {
            s << "  " << row.get<std::string>() << "\n";
        }
        s << "transformed H' = G H (Z|X):\n";
        for (const auto &row : details.at("transformed")) {
            s << "  " << row.get<std::string>() << "\n";
        }
        s << "pairs:";
        for (const auto &p : details.at("pairs")) {
            s << " (" << p.at(0).get<size_t>() << "," << p.at(1).get<size_t>() << ")";
        }
        s << "\nisotropic:";
        for (const auto &r : details.at("isotropic")) {
            s << " " << r.get<size_t>();
        }
        s << "\n";
    } else if (command == "verify") {
        s << render_verification(details);
    } else if (details.contains("modulus")) {
        s << "modulus: " << details.at("modulus").get<uint32_t>() << "\n";
    } else if (details.contains("tolerance")) {
        s << "tolerance: " << details.at("tolerance").get<double>() << "\n";
    }
    return s.str();
}

namespace {

json report_json(const VerificationReport &r) {
    json d;
    d["subject"] = r.subject;
    d["formula"] = r.formula_value;
    d["procedure"] = r.procedure_value;
    if (r.oracle_value) {
        d["oracle"] = *r.oracle_value;
    }
    d["agreement"] = r.agreement;
    d["invariants_hold"] = r.invariants_hold;
    d["message"] = r.details;
    return d;
}

struct GlobalFlags {
    bool json = false;
    bool reduce = false;
    bool quiet = false;
};

DependentRows policy_of(const GlobalFlags &g) {
    return g.reduce ? DependentRows::kDrop : DependentRows::kReject;
}

QuantumCheckMatrix load_qcheck(const std::string &path, const GlobalFlags &g, std::vector<std::string> &notes) {
    QuantumCheckMatrix h = parse_qcheck(read_text_file(path), policy_of(g));
    if (!h.dropped_rows().empty()) {
        std::string rows;
        for (size_t r : h.dropped_rows()) {
            rows += (rows.empty() ? "" : ", ") + std::to_string(r);
        }
        notes.push_back("dropped dependent generator rows (0-based): " + rows);
    }
    return h;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Optimal entanglement (ebit) counts for entanglement-assisted quantum codes", "ebitcalc"};
    app.require_subcommand(1);
    GlobalFlags g;
    app.add_flag("--json", g.json, "Print one JSON object instead of text");
    app.add_flag("--reduce", g.reduce, "Drop linearly dependent generator rows instead of failing");
    app.add_flag("--quiet", g.quiet, "Print only the headline count; suppress warnings");

    std::vector<std::string> files;
    std::optional<size_t> d1;
    std::optional<size_t> d2;
    double tol = kDefaultCvTolerance;
    std::optional<size_t> random_count;
    size_t max_n = 12;
    uint64_t seed = kDefaultSeed;
    size_t threads = 0;

    auto file_cmd = [&](const std::string &name, const std::string &help, int count) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("files", files, "Input file(s)")->required()->expected(count)->check(CLI::ExistingFile);
        return sub;
    };
    file_cmd("ebits", "Ebits for a qcheck check matrix", 1);
    file_cmd("params", "[[n, k+c; c]] for a qcheck check matrix", 1);
    file_cmd("sgsop", "Symplectic Gram-Schmidt: print G, H' = GH and the symplectic pairs", 1);
    CLI::App *css = file_cmd("css", "CSS import from two gf2 parity check matrices", 2);
    css->add_option("--d1", d1, "Distance of the first classical code");
    css->add_option("--d2", d2, "Distance of the second classical code");
    file_cmd("gf4", "Import of a classical GF(4) code (gf4 file)", 1);
    file_cmd("gf4-expand", "Print the binary check matrix of a GF(4) import", 1);
    file_cmd("qudit", "Edits for a qcheckd qudit check matrix (prime d)", 1);
    CLI::App *cv = file_cmd("cv", "Entangled modes for a cvcheck continuous-variable check matrix", 1);
    cv->add_option("--tol", tol, "Relative rank tolerance")->check(CLI::NonNegativeNumber);
    file_cmd("conv", "Ebits per frame for a conv convolutional check matrix (conjectured)", 1);
    file_cmd("conv4", "Ebits per frame for a conv4 GF(4) convolutional import (conjectured)", 1);
    file_cmd("conv-css", "Ebits per frame for a CSS convolutional import from two lpoly files", 2);
    CLI::App *verify = app.add_subcommand("verify", "Cross-check formula, SGSOP and brute-force oracle");
    verify->fallthrough();
    verify->add_option("file", files, "qcheck file to verify")->check(CLI::ExistingFile);
    verify->add_option("--random", random_count, "Run a seeded sweep of this many random check matrices");
    verify->add_option("--max-n", max_n, "Largest qubit count in the random sweep")->check(CLI::Range(1, 24));
    verify->add_option("--seed", seed, "Sweep seed");
    verify->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::vector<std::string> notes;
    CliResult result;
    result.command = command;
    result.inputs = files;

    try {
        if (command == "ebits" || command == "params") {
            result.params = code_parameters(load_qcheck(files[0], g, notes));
        } else if (command == "sgsop") {
            QuantumCheckMatrix h = load_qcheck(files[0], g, notes);
            SgsopOutput s = sgsop(h);
            result.params = code_parameters(h);
            json &d = result.details;
            d["transform"] = json::array();
            for (size_t r = 0; r < s.transform.rows(); r++) {
                d["transform"].push_back(s.transform.row_str(r));
            }
            d["transformed"] = json::array();
            for (size_t r = 0; r < s.transformed.num_generators(); r++) {
                d["transformed"].push_back(s.transformed.row_str(r));
            }
            d["pairs"] = s.pairs;
            d["isotropic"] = s.isotropic;
        } else if (command == "css") {
            if ((d1.has_value()) != (d2.has_value())) {
                notes.push_back("distance is reported only when both --d1 and --d2 are given");
            }
            BinMatrix h1 = parse_gf2(read_text_file(files[0]));
            BinMatrix h2 = parse_gf2(read_text_file(files[1]));
            result.params = css_parameters(h1, h2, d1, d2);
        } else if (command == "gf4") {
            result.params = gf4_parameters(parse_gf4(read_text_file(files[0])));
        } else if (command == "gf4-expand") {
            QuantumCheckMatrix hq = gf4_to_binary(parse_gf4(read_text_file(files[0])), policy_of(g));
            result.params = code_parameters(hq);
            result.details["qcheck"] = format_qcheck(hq);
        } else if (command == "qudit") {
            QuditCheckMatrix h = parse_qcheckd(read_text_file(files[0]));
            result.quantity = "edits";
            result.params = make_parameters(h.hz.cols(), h.hz.rows(), qudit_ebits(h.hz, h.hx));
            result.details["modulus"] = h.hz.modulus();
        } else if (command == "cv") {
            RealCheckMatrix h = parse_cvcheck(read_text_file(files[0]), tol);
            result.quantity = "entangled modes";
            result.params = make_parameters(h.num_modes(), h.num_generators(), cv_ebit_count(h));
            result.details["tolerance"] = tol;
        } else if (command == "conv") {
            result.quantity = "ebits per frame";
            result.conjectured = true;
            result.params = conv_parameters(parse_conv(read_text_file(files[0])));
        } else if (command == "conv4") {
            result.quantity = "ebits per frame";
            result.conjectured = true;
            result.params = gf4_conv_parameters(parse_conv4(read_text_file(files[0])));
        } else if (command == "conv-css") {
            result.quantity = "ebits per frame";
            result.conjectured = true;
            BinLaurentMatrix h1 = parse_lpoly(read_text_file(files[0]));
            BinLaurentMatrix h2 = parse_lpoly(read_text_file(files[1]));
            result.params = css_conv_parameters(h1, h2);
        } else if (command == "verify") {
            if (random_count.has_value() == !files.empty()) {
                err << "verify: give either a qcheck file or --random <count>\n";
                return kExitUsage;
            }
            if (random_count) {
                SweepReport sweep = verify_random(*random_count, max_n, seed, threads);
                json &d = result.details;
                d["cases"] = sweep.cases;
                d["max_n"] = sweep.max_n;
                d["seed"] = sweep.seed;
                d["agreement"] = sweep.agreement();
                d["failures"] = json::array();
                for (const auto &[index, report] : sweep.failures) {
                    json f = report_json(report);
                    f["case"] = index;
                    d["failures"].push_back(f);
                }
            } else {
                QuantumCheckMatrix h = load_qcheck(files[0], g, notes);
                VerificationReport report = verify_code(h, files[0]);
                result.params = code_parameters(h);
                result.details = report_json(report);
            }
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InternalError &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }

    if (result.params && result.params->logical < 0) {
        notes.push_back("logical qubit count " + std::to_string(result.params->logical) +
                        " is negative; more generators than the code can support");
    }
    if (!g.quiet) {
        for (const auto &note : notes) {
            err << "warning: " << note << "\n";
        }
    }
    if (g.json) {
        out << result.to_json().dump() << "\n";
    } else {
        out << result.to_text(g.quiet);
    }

    if (command == "verify") {
        bool ok = result.details.contains("cases")
                      ? result.details.at("agreement").get<bool>()
                      : result.details.at("agreement").get<bool>() && result.details.at("invariants_hold").get<bool>();
        return ok ? kExitOk : kExitVerification;
    }
    return kExitOk;
}

}  // namespace ebitcalc
