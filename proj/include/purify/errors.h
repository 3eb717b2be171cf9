// Copyright 2026 The purify Authors
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

#ifndef PURIFY_ERRORS_H
#define PURIFY_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace purify {

/// A caller broke a documented precondition (bad qubit index, wrong arity, ...).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed one of the configured size guards.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The circuit contains a gate the requested operation cannot handle.
struct UnsupportedGateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {
    }
    size_t line;
};

}  // namespace purify

#endif
