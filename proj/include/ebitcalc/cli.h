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

#ifndef EBITCALC_CLI_H
#define EBITCALC_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ebitcalc/symplectic.h"
#include "json.hpp"

namespace ebitcalc {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitDomain = 3,
    /// A cross-check disagreed or an internal invariant failed.
    kExitVerification = 4,
};

/// Outcome of one CLI command, rendered either as text or as one JSON object.
struct CliResult {
    std::string command;
    std::vector<std::string> inputs;
    /// Label of the headline count: "ebits", "ebits per frame", "edits", "entangled modes".
    std::string quantity = "ebits";
    std::optional<CodeParameters> params;
    bool conjectured = false;
    /// Command-specific payload (SGSOP matrices, verification values, ...).
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const;
    static CliResult from_json(const nlohmann::json &j);
    std::string to_text(bool quiet = false) const;
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`; nothing is written to `out` on failure.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ebitcalc

#endif
