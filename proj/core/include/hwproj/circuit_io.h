// Copyright 2026 The hwproj Authors
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

#ifndef HWPROJ_CIRCUIT_IO_H
#define HWPROJ_CIRCUIT_IO_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hwproj/circuit.h"

namespace hwproj {

/// Parse failure anchored at a 1-based line and column.
struct ParseError : std::runtime_error {
    size_t line;
    size_t column;

    ParseError(size_t line, size_t column, const std::string &message);
};

/// Text form of a circuit: a `qubits m` and a `cbits c` header line, then one
/// instruction per line, every line ending in LF. Deterministic.
std::string emit(const Circuit &circuit);

/// Reads the format written by emit. Also accepts an optional leading
/// `version 1` line, `#` comments, blank lines, CRLF endings, flexible
/// spacing and `if (c<j> == <v>)` single-bit conditions.
Circuit parse(std::string_view text);

}  // namespace hwproj

#endif
