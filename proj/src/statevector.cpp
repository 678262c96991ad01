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

#include "qfmm/statevector.hpp"

#include "qfmm/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qfmm {

namespace {

using Cplx = std::complex<double>;

// Widens a compact index by inserting a zero bit at position p.
inline std::uint64_t insert_zero(std::uint64_t v, int p) {
    const std::uint64_t low = v & ((std::uint64_t{1} << p) - 1);
    return ((v >> p) << (p + 1)) | low;
}

void apply_hadamard(Eigen::VectorXcd& a, int num_qubits, int target) {
    constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    const std::uint64_t bit = std::uint64_t{1} << target;
    const std::uint64_t half = std::uint64_t{1} << (num_qubits - 1);
    Cplx* v = a.data();
    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = insert_zero(k, target);
        const std::uint64_t i1 = i0 | bit;
        const Cplx x = v[i0];
        const Cplx y = v[i1];
        v[i0] = (x + y) * inv_sqrt2;
        v[i1] = (x - y) * inv_sqrt2;
    }
}

void apply_pauli_x(Eigen::VectorXcd& a, int num_qubits, int target) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    const std::uint64_t half = std::uint64_t{1} << (num_qubits - 1);
    Cplx* v = a.data();
    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = insert_zero(k, target);
        std::swap(v[i0], v[i0 | bit]);
    }
}

// Multiplies by e^{i*angle} every amplitude whose index has all the given
// bits set. Positions must be sorted ascending.
void apply_diagonal(Eigen::VectorXcd& a, int num_qubits, const int* positions, int n_positions,
                    double angle) {
    const Cplx factor = std::polar(1.0, angle);
    std::uint64_t set_mask = 0;
    for (int i = 0; i < n_positions; ++i) {
        set_mask |= std::uint64_t{1} << positions[i];
    }
    const std::uint64_t count = std::uint64_t{1} << (num_qubits - n_positions);
    Cplx* v = a.data();
    for (std::uint64_t k = 0; k < count; ++k) {
        std::uint64_t idx = k;
        for (int i = 0; i < n_positions; ++i) {
            idx = insert_zero(idx, positions[i]);
        }
        v[idx | set_mask] *= factor;
    }
}

void apply_swap(Eigen::VectorXcd& a, int num_qubits, int qa, int qb) {
    int lo = std::min(qa, qb);
    int hi = std::max(qa, qb);
    const std::uint64_t bit_a = std::uint64_t{1} << qa;
    const std::uint64_t bit_b = std::uint64_t{1} << qb;
    const std::uint64_t count = std::uint64_t{1} << (num_qubits - 2);
    Cplx* v = a.data();
    for (std::uint64_t k = 0; k < count; ++k) {
        const std::uint64_t base = insert_zero(insert_zero(k, lo), hi);
        std::swap(v[base | bit_a], v[base | bit_b]);
    }
}

} // namespace

StateVector init_basis_state(int num_qubits, std::uint64_t basis_index, int qubit_cap) {
    if (num_qubits < 0) {
        throw std::invalid_argument("qubit count must be nonnegative");
    }
    if (num_qubits > qubit_cap) {
        throw ConstraintError("state of " + std::to_string(num_qubits) +
                              " qubits exceeds the qubit cap of " + std::to_string(qubit_cap));
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (basis_index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(basis_index) +
                                " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    StateVector s;
    s.num_qubits = num_qubits;
    s.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    s.amplitudes(static_cast<Eigen::Index>(basis_index)) = Cplx(1.0, 0.0);
    return s;
}

void apply_gate(StateVector& state, const Gate& gate) {
    gate.validate(state.num_qubits);
    switch (gate.op) {
    case GateOp::Hadamard:
        apply_hadamard(state.amplitudes, state.num_qubits, gate.q[0]);
        return;
    case GateOp::PauliX:
        apply_pauli_x(state.amplitudes, state.num_qubits, gate.q[0]);
        return;
    case GateOp::Phase: {
        apply_diagonal(state.amplitudes, state.num_qubits, gate.q.data(), 1, gate.angle);
        return;
    }
    case GateOp::ControlledPhase: {
        int pos[2] = {gate.q[0], gate.q[1]};
        std::sort(pos, pos + 2);
        apply_diagonal(state.amplitudes, state.num_qubits, pos, 2, gate.angle);
        return;
    }
    case GateOp::CCPhase: {
        int pos[3] = {gate.q[0], gate.q[1], gate.q[2]};
        std::sort(pos, pos + 3);
        apply_diagonal(state.amplitudes, state.num_qubits, pos, 3, gate.angle);
        return;
    }
    case GateOp::Swap:
        apply_swap(state.amplitudes, state.num_qubits, gate.q[0], gate.q[1]);
        return;
    }
    throw std::invalid_argument("unknown gate kind");
}

void run_circuit(StateVector& state, const Circuit& circuit) {
    if (circuit.num_qubits() != state.num_qubits) {
        throw std::invalid_argument("circuit width " + std::to_string(circuit.num_qubits()) +
                                    " does not match state width " +
                                    std::to_string(state.num_qubits));
    }
    for (const Gate& g : circuit.gates()) {
        apply_gate(state, g);
    }
}

std::uint64_t extract_register_value(std::uint64_t basis_index, const Register& reg) {
    std::uint64_t value = 0;
    for (int i = 0; i < reg.width; ++i) {
        value |= ((basis_index >> reg.qubit_of_bit(i)) & 1u) << i;
    }
    return value;
}

ReadoutResult readout(const StateVector& state, const Register& reg) {
    if (reg.offset < 0 || reg.offset + reg.width > state.num_qubits || reg.width < 1) {
        throw std::out_of_range("register '" + reg.name + "' does not fit the state");
    }
    const int w = reg.width;
    const int rest = state.num_qubits - w;

    // Bit patterns of each register value scattered to its qubits, and of
    // each residual index scattered to the remaining qubits; the marginal
    // then accumulates in a single pass.
    std::vector<std::uint64_t> value_pattern(std::size_t{1} << w, 0);
    for (std::uint64_t v = 1; v < value_pattern.size(); ++v) {
        const std::uint64_t low = v & (v - 1); // v without its lowest set bit
        const int bit = std::countr_zero(v);
        value_pattern[v] = value_pattern[low] | (std::uint64_t{1} << reg.qubit_of_bit(bit));
    }

    std::vector<int> rest_qubits;
    rest_qubits.reserve(static_cast<std::size_t>(rest));
    for (int qb = 0; qb < state.num_qubits; ++qb) {
        if (qb < reg.offset || qb >= reg.offset + reg.width) {
            rest_qubits.push_back(qb);
        }
    }
    std::vector<std::uint64_t> rest_pattern(std::size_t{1} << rest, 0);
    for (std::uint64_t r = 1; r < rest_pattern.size(); ++r) {
        const std::uint64_t low = r & (r - 1);
        const int bit = std::countr_zero(r);
        rest_pattern[r] = rest_pattern[low] | (std::uint64_t{1} << rest_qubits[bit]);
    }

    std::vector<double> marginal(std::size_t{1} << w, 0.0);
    const Cplx* v = state.amplitudes.data();
    for (std::uint64_t r = 0; r < rest_pattern.size(); ++r) {
        const std::uint64_t base = rest_pattern[r];
        for (std::uint64_t val = 0; val < value_pattern.size(); ++val) {
            marginal[val] += std::norm(v[base | value_pattern[val]]);
        }
    }

    ReadoutResult result;
    for (std::uint64_t val = 0; val < marginal.size(); ++val) {
        if (marginal[val] > result.probability) {
            result.probability = marginal[val];
            result.value = val;
        }
    }
    return result;
}

} // namespace qfmm
