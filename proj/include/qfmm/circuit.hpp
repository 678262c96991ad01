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

#pragma once

#include "qfmm/gate.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qfmm {

/// Default ceiling on circuit width; dense simulation of anything larger
/// is rejected up front. Builders accept an explicit override for
/// census-only circuits that are never simulated.
inline constexpr int kDefaultQubitCap = 26;

enum class BitOrder : std::uint8_t { MsbFirst, LsbFirst };
enum class RegisterRole : std::uint8_t { Operand, Accumulator, Sign, Carry };

std::string_view to_string(BitOrder order);
std::string_view to_string(RegisterRole role);
BitOrder bit_order_from_string(std::string_view s);
RegisterRole role_from_string(std::string_view s);

/// A named contiguous qubit span. bit_order fixes which end of the span
/// is the most significant bit of the register's integer value.
struct Register {
    std::string name;
    int offset = 0;
    int width = 0;
    BitOrder bit_order = BitOrder::LsbFirst;
    RegisterRole role = RegisterRole::Operand;

    /// Physical qubit carrying value bit `i` (weight 2^i), i in [0, width).
    int qubit_of_bit(int i) const;

    bool operator==(const Register&) const = default;
};

/// Same span read with the opposite significance order. This is how the
/// Fourier-side state of a register is addressed: the transform is built
/// without trailing swaps, so significance reverses in bookkeeping
/// instead of in gates.
Register reversed(const Register& reg);

/// Register layout request for new_circuit.
struct RegisterSpec {
    std::string name;
    int width = 0;
    BitOrder bit_order = BitOrder::LsbFirst;
    RegisterRole role = RegisterRole::Operand;
};

struct GateCensus {
    std::int64_t total = 0;
    std::int64_t counted = 0;
    std::map<std::string, std::int64_t> by_kind;
};

/// Ordered gate list over a fixed register layout. Append-only; freeze()
/// before sharing. Each gate carries a flag saying whether it belongs to
/// the counted set (arithmetic-core rotations) or to the uncounted
/// encoding overhead (QFT/IQFT internals, operand-loading X gates).
class Circuit {
public:
    Circuit() = default;
    Circuit(int num_qubits, std::vector<Register> registers);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Register>& registers() const { return registers_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<std::uint8_t>& counted_flags() const { return counted_; }
    std::int64_t size() const { return static_cast<std::int64_t>(gates_.size()); }

    /// Register lookup by name; throws std::invalid_argument if absent.
    const Register& reg(std::string_view name) const;

    void append(const Gate& gate, bool counted);

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

private:
    int num_qubits_ = 0;
    std::vector<Register> registers_;
    std::vector<Gate> gates_;
    std::vector<std::uint8_t> counted_;
    bool frozen_ = false;
};

/// Lays registers out contiguously in the order given.
/// Throws ConstraintError on duplicate names or when the total width
/// exceeds `qubit_cap`.
Circuit new_circuit(std::span<const RegisterSpec> specs, int qubit_cap = kDefaultQubitCap);
Circuit new_circuit(std::initializer_list<RegisterSpec> specs, int qubit_cap = kDefaultQubitCap);

/// Gates reversed with each rotation sense negated; counted flags follow
/// their gates. Involutive: inverse(inverse(c)) == c gate-for-gate.
Circuit inverse(const Circuit& circuit);

/// c1's gates followed by c2's. Both circuits must have the same width;
/// the register table of c1 is kept.
Circuit compose(const Circuit& c1, const Circuit& c2);

GateCensus census(const Circuit& circuit);

/// Line-oriented portable text form:
///   qubits=<Q>
///   reg=<name>,<offset>,<width>,<order>,<role>     (one per register)
///   KIND q0[,q1[,q2]][,angle]                      (one per gate)
/// Angles are printed with 17 significant digits so doubles round-trip
/// bit-exactly. Counted flags are not part of the format.
std::string export_gatelist(const Circuit& circuit);

/// Inverse of export_gatelist. Gates come back marked uncounted, since
/// the format does not carry counting metadata.
/// Throws std::invalid_argument on malformed input.
Circuit import_gatelist(std::string_view text);

} // namespace qfmm
