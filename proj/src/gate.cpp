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

#include "qfmm/gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qfmm {

namespace {

void require_finite(double angle) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("gate angle must be finite");
    }
}

} // namespace

std::string_view kind_name(GateOp op) {
    switch (op) {
    case GateOp::Hadamard: return "H";
    case GateOp::PauliX: return "X";
    case GateOp::Phase: return "P";
    case GateOp::ControlledPhase: return "CP";
    case GateOp::CCPhase: return "CCP";
    case GateOp::Swap: return "SWAP";
    }
    throw std::invalid_argument("unknown gate kind");
}

Gate Gate::hadamard(int target) {
    return Gate{GateOp::Hadamard, {target, -1, -1}, 0.0};
}

Gate Gate::pauli_x(int target) {
    return Gate{GateOp::PauliX, {target, -1, -1}, 0.0};
}

Gate Gate::phase(int target, double angle) {
    require_finite(angle);
    return Gate{GateOp::Phase, {target, -1, -1}, angle};
}

Gate Gate::controlled_phase(int control, int target, double angle) {
    require_finite(angle);
    return Gate{GateOp::ControlledPhase, {control, target, -1}, angle};
}

Gate Gate::cc_phase(int control1, int control2, int target, double angle) {
    require_finite(angle);
    return Gate{GateOp::CCPhase, {control1, control2, target}, angle};
}

Gate Gate::swap(int a, int b) {
    return Gate{GateOp::Swap, {a, b, -1}, 0.0};
}

int Gate::arity() const {
    switch (op) {
    case GateOp::Hadamard:
    case GateOp::PauliX:
    case GateOp::Phase: return 1;
    case GateOp::ControlledPhase:
    case GateOp::Swap: return 2;
    case GateOp::CCPhase: return 3;
    }
    return 0;
}

bool Gate::has_angle() const {
    return op == GateOp::Phase || op == GateOp::ControlledPhase || op == GateOp::CCPhase;
}

Gate Gate::inverted() const {
    Gate g = *this;
    if (g.has_angle()) {
        g.angle = -g.angle;
    }
    return g;
}

void Gate::validate(int num_qubits) const {
    const int n = arity();
    for (int i = 0; i < n; ++i) {
        if (q[i] < 0 || q[i] >= num_qubits) {
            throw std::out_of_range("gate qubit index " + std::to_string(q[i]) +
                                    " out of range for " + std::to_string(num_qubits) +
                                    " qubits");
        }
        for (int j = i + 1; j < n; ++j) {
            if (q[i] == q[j]) {
                throw std::invalid_argument("gate qubit operands must be pairwise distinct");
            }
        }
    }
    require_finite(angle);
}

double phase_angle(std::int64_t numerator, int l) {
    const std::uint64_t modulus = std::uint64_t{1} << l;
    std::int64_t r = numerator % static_cast<std::int64_t>(modulus);
    if (r < 0) {
        r += static_cast<std::int64_t>(modulus);
    }
    return 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(modulus);
}

} // namespace qfmm
