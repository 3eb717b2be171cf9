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

#include "purify/circuit_text.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "purify/errors.h"

namespace purify {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

uint32_t parse_index(std::string_view token, size_t line) {
    uint32_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

std::string serialize(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits << '\n';
    out << "outputs ";
    for (size_t i = 0; i < circuit.outputs.size(); i++) {
        if (i) {
            out << ',';
        }
        out << circuit.outputs[i];
    }
    out << '\n';
    for (size_t r = 0; r < circuit.rounds.size(); r++) {
        if (r) {
            out << "---\n";
        }
        for (const Gate &g : circuit.rounds[r]) {
            out << g.str() << '\n';
        }
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool have_qubits = false;
    bool have_outputs = false;
    std::vector<Gate> current;
    std::vector<size_t> current_lines;

    auto close_round = [&]() {
        if (current.empty()) {
            return;
        }
        uint64_t used = 0;
        for (size_t i = 0; i < current.size(); i++) {
            if (used & current[i].support_mask()) {
                throw ParseError(current_lines[i], "gate " + current[i].str() + " overlaps another gate in its round");
            }
            used |= current[i].support_mask();
        }
        circuit.rounds.push_back(std::move(current));
        current.clear();
        current_lines.clear();
    };

    size_t line_number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_number++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }

        if (!have_qubits) {
            if (tokens[0] != "qubits" || tokens.size() != 2) {
                throw ParseError(line_number, "expected 'qubits <n>'");
            }
            circuit.num_qubits = parse_index(tokens[1], line_number);
            if (circuit.num_qubits > MAX_QUBITS) {
                throw ParseError(line_number, "at most " + std::to_string(MAX_QUBITS) + " qubits are supported");
            }
            have_qubits = true;
            continue;
        }
        if (!have_outputs) {
            if (tokens[0] != "outputs") {
                throw ParseError(line_number, "expected 'outputs <i>,<j>,...'");
            }
            std::string joined;
            for (size_t i = 1; i < tokens.size(); i++) {
                joined += tokens[i];
            }
            size_t start = 0;
            while (start < joined.size()) {
                size_t comma = joined.find(',', start);
                if (comma == std::string::npos) {
                    comma = joined.size();
                }
                uint32_t q = parse_index(std::string_view(joined).substr(start, comma - start), line_number);
                if (q >= circuit.num_qubits) {
                    throw ParseError(line_number, "output qubit " + std::to_string(q) + " is out of range");
                }
                for (uint32_t existing : circuit.outputs) {
                    if (existing == q) {
                        throw ParseError(line_number, "output qubit " + std::to_string(q) + " is listed twice");
                    }
                }
                circuit.outputs.push_back(q);
                start = comma + 1;
            }
            have_outputs = true;
            continue;
        }

        if (tokens.size() == 1 && tokens[0] == "---") {
            close_round();
            continue;
        }

        std::vector<uint32_t> args;
        for (size_t i = 1; i < tokens.size(); i++) {
            args.push_back(parse_index(tokens[i], line_number));
        }
        Gate g;
        std::string_view name = tokens[0];
        if (name == "IDLE" && args.size() == 1) {
            g = Gate::idle(args[0]);
        } else if (name == "CNOT" && args.size() == 2) {
            g = Gate::cnot(args[0], args[1]);
        } else if (name == "TOFFOLI" && args.size() == 3) {
            g = Gate::toffoli(args[0], args[1], args[2]);
        } else if (name == "MCX" && args.size() >= 2) {
            uint32_t target = args.back();
            args.pop_back();
            g = Gate::mcx(std::move(args), target);
        } else {
            throw ParseError(line_number, "unrecognised gate line '" + std::string(line) + "'");
        }
        try {
            g.validate(circuit.num_qubits);
        } catch (const ContractError &e) {
            throw ParseError(line_number, e.what());
        }
        current.push_back(std::move(g));
        current_lines.push_back(line_number);
        if (end == text.size()) {
            break;
        }
    }
    close_round();
    if (!have_qubits) {
        throw ParseError(line_number, "missing 'qubits' header");
    }
    if (!have_outputs) {
        throw ParseError(line_number, "missing 'outputs' header");
    }
    return circuit;
}

Circuit read_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open circuit file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_circuit(buffer.str());
    } catch (const ParseError &e) {
        throw ParseError(e.line, path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

void write_circuit_file(const std::string &path, const Circuit &circuit) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write circuit file '" + path + "'");
    }
    out << serialize(circuit);
    if (!out) {
        throw std::runtime_error("failed writing circuit file '" + path + "'");
    }
}

}  // namespace purify
