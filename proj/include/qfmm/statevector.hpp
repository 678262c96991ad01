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

#include "qfmm/circuit.hpp"
#include "qfmm/gate.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>

namespace qfmm {

/// Dense complex state over 2^num_qubits basis states. Qubit 0 is the
/// least significant bit of the basis index. Double precision throughout.
///
/// Threading contract: a StateVector is mutated by at most one caller at
/// a time; frozen Circuit values are immutable and safe to share across
/// concurrent simulations.
struct StateVector {
    int num_qubits = 0;
    Eigen::VectorXcd amplitudes;

    Eigen::Index dim() const { return amplitudes.size(); }
    double norm() const { return amplitudes.norm(); }
};

/// |basis_index> on num_qubits qubits.
/// Throws std::out_of_range when the index does not fit, ConstraintError
/// when num_qubits exceeds qubit_cap.
StateVector init_basis_state(int num_qubits, std::uint64_t basis_index,
                             int qubit_cap = kDefaultQubitCap);

/// Applies one gate in place. Norm is preserved (unitary action).
void apply_gate(StateVector& state, const Gate& gate);

/// Applies the circuit's gates in order.
/// Throws std::invalid_argument when the widths differ.
void run_circuit(StateVector& state, const Circuit& circuit);

struct ReadoutResult {
    std::uint64_t value = 0;
    double probability = 0.0;
};

/// Most probable measured value of the register, marginalizing all other
/// qubits, together with that value's probability. Exact marginals, no
/// sampling: every circuit in this library maps basis states to basis
/// states up to phase, so the probability is 1 up to float error.
ReadoutResult readout(const StateVector& state, const Register& reg);

/// Register value encoded in a basis index, honoring the register's bit
/// order.
std::uint64_t extract_register_value(std::uint64_t basis_index, const Register& reg);

} // namespace qfmm
