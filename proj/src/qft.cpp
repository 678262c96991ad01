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

#include "qfmm/qft.hpp"

#include <stdexcept>

namespace qfmm {

int fourier_qubit(const Register& reg, int l) {
    if (l < 1 || l > reg.width) {
        throw std::out_of_range("Fourier index out of range");
    }
    return reg.qubit_of_bit(l - 1);
}

void append_qft(Circuit& circuit, const Register& reg) {
    const int w = reg.width;
    // Wires in most-significant-first order; wire t ends up carrying
    // Fourier index w+1-t, i.e. the significance order reverses.
    for (int t = 1; t <= w; ++t) {
        const int wire = reg.qubit_of_bit(w - t);
        circuit.append(Gate::hadamard(wire), /*counted=*/false);
        for (int k = 2; k <= w - t + 1; ++k) {
            const int control = reg.qubit_of_bit(w - t - (k - 1));
            circuit.append(Gate::controlled_phase(control, wire, phase_angle(1, k)),
                           /*counted=*/false);
        }
    }
}

void append_iqft(Circuit& circuit, const Register& reg) {
    Circuit fwd(circuit.num_qubits(), {});
    append_qft(fwd, reg);
    const auto& gates = fwd.gates();
    for (std::size_t i = gates.size(); i-- > 0;) {
        circuit.append(gates[i].inverted(), /*counted=*/false);
    }
}

Circuit build_qft(const Register& reg) {
    Circuit c(reg.offset + reg.width, {reg});
    append_qft(c, reg);
    c.freeze();
    return c;
}

Circuit build_iqft(const Register& reg) {
    return inverse(build_qft(reg));
}

} // namespace qfmm
