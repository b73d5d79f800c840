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

#ifndef EBITCALC_ERRORS_H
#define EBITCALC_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ebitcalc {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (e.g. inner dimensions of a product).
struct ShapeError : Error {
    using Error::Error;
};

/// Malformed text input. `line` is 1-based, 0 when not tied to a line.
struct ParseError : Error {
    ParseError(const std::string &message, size_t line = 0)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line(line) {
    }
    size_t line;
};

/// Input is well-formed but outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// A generator row lies in the GF(2) span of the rows above it.
struct DependentRowsError : DomainError {
    explicit DependentRowsError(size_t row)
        : DomainError(
              "generator row " + std::to_string(row) +
              " (0-based) is linearly dependent on earlier rows; pass --reduce to drop dependent rows"),
          row(row) {
    }
    size_t row;
};

/// An oracle was asked to enumerate a space that is too large.
struct SizeError : Error {
    using Error::Error;
};

/// A mathematical invariant failed. Indicates a bug, never bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ebitcalc

#endif
