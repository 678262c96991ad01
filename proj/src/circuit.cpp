// Copyright 2026 The qfmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfmm/circuit.hpp"

#include "qfmm/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qfmm {

std::string_view to_string(BitOrder order) {
    return order == BitOrder::MsbFirst ? "msb_first" : "lsb_first";
}

std::string_view to_string(RegisterRole role) {
    switch (role) {
    case RegisterRole::Operand: return "operand";
    case RegisterRole::Accumulator: return "accumulator";
    case RegisterRole::Sign: return "sign";
    case RegisterRole::Carry: return "carry";
    }
    throw std::invalid_argument("unknown register role");
}

BitOrder bit_order_from_string(std::string_view s) {
    if (s == "msb_first") return BitOrder::MsbFirst;
    if (s == "lsb_first") return BitOrder::LsbFirst;
    throw std::invalid_argument("unknown bit order '" + std::string(s) + "'");
}

RegisterRole role_from_string(std::string_view s) {
    if (s == "operand") return RegisterRole::Operand;
    if (s == "accumulator") return RegisterRole::Accumulator;
    if (s == "sign") return RegisterRole::Sign;
    if (s == "carry") return RegisterRole::Carry;
    throw std::invalid_argument("unknown register role '" + std::string(s) + "'");
}

int Register::qubit_of_bit(int i) const {
    if (i < 0 || i >= width) {
        throw std::out_of_range("register bit index out of range");
    }
    return bit_order == BitOrder::LsbFirst ? offset + i : offset + width - 1 - i;
}

Register reversed(const Register& reg) {
    Register r = reg;
    r.bit_order = reg.bit_order == BitOrder::LsbFirst ? BitOrder::MsbFirst : BitOrder::LsbFirst;
    return r;
}

Circuit::Circuit(int num_qubits, std::vector<Register> registers)
    : num_qubits_(num_qubits), registers_(std::move(registers)) {
    if (num_qubits_ < 0) {
        throw std::invalid_argument("circuit qubit count must be nonnegative");
    }
    std::set<std::string> names;
    std::vector<char> used(static_cast<std::size_t>(num_qubits_), 0);
    for (const Register& r : registers_) {
        if (r.width < 1) {
            throw ConstraintError("register '" + r.name + "' must have width >= 1");
        }
        if (r.offset < 0 || r.offset + r.width > num_qubits_) {
            throw ConstraintError("register '" + r.name + "' exceeds the circuit span");
        }
        if (!names.insert(r.name).second) {
            throw ConstraintError("duplicate register name '" + r.name + "'");
        }
        for (int qb = r.offset; qb < r.offset + r.width; ++qb) {
            if (used[static_cast<std::size_t>(qb)]) {
                throw ConstraintError("registers overlap at qubit " + std::to_string(qb));
            }
            used[static_cast<std::size_t>(qb)] = 1;
        }
    }
}

const Register& Circuit::reg(std::string_view name) const {
    for (const Register& r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::invalid_argument("no register named '" + std::string(name) + "'");
}

void Circuit::append(const Gate& gate, bool counted) {
    if (frozen_) {
        throw std::logic_error("cannot append to a frozen circuit");
    }
    gate.validate(num_qubits_);
    gates_.push_back(gate);
    counted_.push_back(counted ? 1 : 0);
}

Circuit new_circuit(std::span<const RegisterSpec> specs, int qubit_cap) {
    std::vector<Register> regs;
    regs.reserve(specs.size());
    int offset = 0;
    for (const RegisterSpec& s : specs) {
        regs.push_back(Register{s.name, offset, s.width, s.bit_order, s.role});
        offset += s.width;
    }
    if (offset > qubit_cap) {
        throw ConstraintError("circuit needs " + std::to_string(offset) +
                              " qubits, exceeding the qubit cap of " + std::to_string(qubit_cap));
    }
    return Circuit(offset, std::move(regs));
}

Circuit new_circuit(std::initializer_list<RegisterSpec> specs, int qubit_cap) {
    return new_circuit(std::span<const RegisterSpec>(specs.begin(), specs.size()), qubit_cap);
}

Circuit inverse(const Circuit& circuit) {
    Circuit inv(circuit.num_qubits(), circuit.registers());
    const auto& gates = circuit.gates();
    const auto& flags = circuit.counted_flags();
    for (std::size_t i = gates.size(); i-- > 0;) {
        inv.append(gates[i].inverted(), flags[i] != 0);
    }
    if (circuit.frozen()) {
        inv.freeze();
    }
    return inv;
}

Circuit compose(const Circuit& c1, const Circuit& c2) {
    if (c1.num_qubits() != c2.num_qubits()) {
        throw std::invalid_argument("cannot compose circuits of different widths");
    }
    Circuit out(c1.num_qubits(), c1.registers());
    for (std::size_t i = 0; i < c1.gates().size(); ++i) {
        out.append(c1.gates()[i], c1.counted_flags()[i] != 0);
    }
    for (std::size_t i = 0; i < c2.gates().size(); ++i) {
        out.append(c2.gates()[i], c2.counted_flags()[i] != 0);
    }
    return out;
}

GateCensus census(const Circuit& circuit) {
    GateCensus c;
    const auto& gates = circuit.gates();
    const auto& flags = circuit.counted_flags();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        ++c.total;
        if (flags[i]) {
            ++c.counted;
        }
        ++c.by_kind[std::string(kind_name(gates[i].op))];
    }
    return c;
}

std::string export_gatelist(const Circuit& circuit) {
    std::ostringstream out;
    out << "qubits=" << circuit.num_qubits() << '\n';
    for (const Register& r : circuit.registers()) {
        out << "reg=" << r.name << ',' << r.offset << ',' << r.width << ','
            << to_string(r.bit_order) << ',' << to_string(r.role) << '\n';
    }
    char angle_buf[64];
    for (const Gate& g : circuit.gates()) {
        out << kind_name(g.op) << ' ';
        const int n = g.arity();
        for (int i = 0; i < n; ++i) {
            if (i > 0) {
                out << ',';
            }
            out << g.q[i];
        }
        if (g.has_angle()) {
            std::snprintf(angle_buf, sizeof(angle_buf), "%.17g", g.angle);
            out << ',' << angle_buf;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            return parts;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_int(const std::string& s, const char* what) {
    std::size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(s, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("gate list: bad ") + what + " '" + s + "'");
    }
    if (consumed != s.size()) {
        throw std::invalid_argument(std::string("gate list: bad ") + what + " '" + s + "'");
    }
    return value;
}

double parse_angle(const std::string& s) {
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        throw std::invalid_argument("gate list: bad angle '" + s + "'");
    }
    return value;
}

} // namespace

Circuit import_gatelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;

    if (!std::getline(in, line) || line.rfind("qubits=", 0) != 0) {
        throw std::invalid_argument("gate list: missing qubits= header");
    }
    const int num_qubits = parse_int(line.substr(7), "qubit count");

    std::vector<Register> regs;
    std::vector<std::string> gate_lines;
    bool in_regs = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.rfind("reg=", 0) == 0) {
            if (!in_regs) {
                throw std::invalid_argument("gate list: reg= line after gates");
            }
            const auto parts = split(std::string_view(line).substr(4), ',');
            if (parts.size() != 5) {
                throw std::invalid_argument("gate list: malformed register line '" + line + "'");
            }
            regs.push_back(Register{parts[0], parse_int(parts[1], "register offset"),
                                    parse_int(parts[2], "register width"),
                                    bit_order_from_string(parts[3]), role_from_string(parts[4])});
            continue;
        }
        in_regs = false;
        gate_lines.push_back(line);
    }

    Circuit circuit(num_qubits, std::move(regs));
    for (const std::string& gl : gate_lines) {
        const std::size_t space = gl.find(' ');
        if (space == std::string::npos) {
            throw std::invalid_argument("gate list: malformed gate line '" + gl + "'");
        }
        const std::string kind = gl.substr(0, space);
        const auto fields = split(std::string_view(gl).substr(space + 1), ',');

        auto expect = [&](std::size_t n) {
            if (fields.size() != n) {
                throw std::invalid_argument("gate list: wrong field count in '" + gl + "'");
            }
        };
        Gate g;
        if (kind == "H") {
            expect(1);
            g = Gate::hadamard(parse_int(fields[0], "qubit"));
        } else if (kind == "X") {
            expect(1);
            g = Gate::pauli_x(parse_int(fields[0], "qubit"));
        } else if (kind == "P") {
            expect(2);
            g = Gate::phase(parse_int(fields[0], "qubit"), parse_angle(fields[1]));
        } else if (kind == "CP") {
            expect(3);
            g = Gate::controlled_phase(parse_int(fields[0], "qubit"),
                                       parse_int(fields[1], "qubit"), parse_angle(fields[2]));
        } else if (kind == "CCP") {
            expect(4);
            g = Gate::cc_phase(parse_int(fields[0], "qubit"), parse_int(fields[1], "qubit"),
                               parse_int(fields[2], "qubit"), parse_angle(fields[3]));
        } else if (kind == "SWAP") {
            expect(2);
            g = Gate::swap(parse_int(fields[0], "qubit"), parse_int(fields[1], "qubit"));
        } else {
            throw std::invalid_argument("gate list: unknown gate kind '" + kind + "'");
        }
        circuit.append(g, /*counted=*/false);
    }
    return circuit;
}

} // namespace qfmm
