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

#ifndef PURIFY_CIRCUIT_TEXT_H
#define PURIFY_CIRCUIT_TEXT_H

#include <string>
#include <string_view>

#include "purify/circuit.h"

namespace purify {

// Line-oriented text format:
//
//     qubits 3
//     outputs 0
//     CNOT 0 1
//     IDLE 2
//     ---
//     CNOT 0 2
//     IDLE 1
//     ---
//     TOFFOLI 1 2 0
//
// Rounds are separated by a line holding only "---". Gate lines are
// IDLE t | CNOT c t | TOFFOLI c1 c2 t | MCX c1 ... ck t. Everything after a
// '#' is a comment. Empty rounds are skipped when parsing.

std::string serialize(const Circuit &circuit);

/// Throws ParseError (with a 1-based line number) on malformed text, including
/// out-of-range qubits and overlapping gates within a round.
Circuit parse_circuit(std::string_view text);

Circuit read_circuit_file(const std::string &path);
void write_circuit_file(const std::string &path, const Circuit &circuit);

}  // namespace purify

#endif
