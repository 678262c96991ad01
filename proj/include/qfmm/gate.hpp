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

#include <array>
#include <cstdint>
#include <string_view>

namespace qfmm {

/// The six gate kinds the arithmetic circuits are made of.
enum class GateOp : std::uint8_t {
    Hadamard,
    PauliX,
    Phase,
    ControlledPhase,
    CCPhase,
    Swap,
};

/// Short kind token, also used by the gate-list text format
/// ("H", "X", "P", "CP", "CCP", "SWAP").
std::string_view kind_name(GateOp op);

/// One gate. Operand order follows the text format: controls before the
/// target for phase gates, the two exchanged qubits for SWAP.
struct Gate {
    GateOp op = GateOp::Hadamard;
    std::array<std::int32_t, 3> q{-1, -1, -1};
    double angle = 0.0; // radians; meaningful for the phase family only

    static Gate hadamard(int target);
    static Gate pauli_x(int target);
    static Gate phase(int target, double angle);
    static Gate controlled_phase(int control, int target, double angle);
    static Gate cc_phase(int control1, int control2, int target, double angle);
    static Gate swap(int a, int b);

    /// Number of qubit operands (1, 2 or 3).
    int arity() const;
    bool has_angle() const;

    /// Same gate with the rotation sense reversed; H, X and SWAP are
    /// self-inverse. Angles are negated exactly, never re-reduced.
    Gate inverted() const;

    /// Checks operand indices against a circuit width.
    /// Throws std::out_of_range / std::invalid_argument.
    void validate(int num_qubits) const;

    bool operator==(const Gate&) const = default;
};

/// Reduces 2*pi * numerator / 2^l to [0, 2*pi). The modular reduction is
/// done on integers, so huge numerators lose no precision.
double phase_angle(std::int64_t numerator, int l);

} // namespace qfmm
