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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qfmm {

/// Unsigned integer constant of a declared bit width.
struct UIntOperand {
    std::uint64_t value = 0;
    int width = 0; // bits, value < 2^width
};

/// Signed integer constant carried as two's complement in `width` bits
/// (the top bit is the sign bit).
struct SignedOperand {
    std::int64_t value = 0;
    int width = 0; // -2^(width-1) <= value < 2^(width-1)
};

// ---------------------------------------------------------------------------
// Low-level stages. These append the counted arithmetic core between an
// existing QFT/IQFT pair; the build_* functions below wrap them into
// complete circuits. Angles are reduced mod 2*pi at construction.
// ---------------------------------------------------------------------------

/// X gates (uncounted) flipping `reg` from encoding `from` to encoding `to`.
void append_load(Circuit& circuit, const Register& reg, std::uint64_t to,
                 std::uint64_t from = 0);

/// acc += constant (mod 2^width) in Fourier space: one Phase gate per acc
/// qubit l with angle 2*pi*constant / 2^l. All `width` gates are emitted
/// and counted, even when an angle reduces to zero.
void append_phase_add(Circuit& circuit, const Register& acc, std::uint64_t constant);

/// acc += a (mod 2^acc_width) controlled on the a-register's qubits: the
/// controlled rotation ladder extended over the whole accumulator. A gate
/// is emitted only where its angle is not structurally a multiple of
/// 2*pi, giving sum_{e=0}^{n-1} (W - e) counted gates for widths n and W.
void append_controlled_add(Circuit& circuit, const Register& a_reg, const Register& acc);

/// acc += a * b (mod 2^acc_width) with classical `a` and quantum `b`:
/// single-controlled rotations from each b qubit onto the accumulator,
/// skipping structurally trivial angles. With signed_b, the top b qubit
/// carries weight -2^(width-1), so two's-complement operands multiply
/// exactly; `a` itself may be negative.
void append_multiply_stage(Circuit& circuit, const Register& b_reg, const Register& acc,
                           std::int64_t a, bool signed_b = false);

/// acc += a * b (mod 2^acc_width) with both operands quantum: one
/// doubly-controlled rotation per (a bit, b bit, acc qubit) triple,
/// 2 * n^2 * acc_width gates, none skipped.
void append_cc_multiply(Circuit& circuit, const Register& a_reg, const Register& b_reg,
                        const Register& acc);

// ---------------------------------------------------------------------------
// Complete constructions. Each returns a frozen circuit spanning the
// given registers: QFT(acc), the counted core, IQFT(acc).
// ---------------------------------------------------------------------------

/// Quantum-quantum adder: acc += a with a carry qubit absorbing single-
/// addition overflow. Requires acc.width == a.width + 1.
/// Counted gates: (n^2 + 3n) / 2.
Circuit build_adder_original(const Register& a_reg, const Register& acc_reg);

/// Classical-addend adder: the constant is baked into uncontrolled phase
/// angles; no addend register. Requires acc.width == constant.width + 1.
/// Counted gates: n + 1.
Circuit build_adder_optimized(UIntOperand constant, const Register& acc_reg);

/// Multi-addend accumulation: one QFT/IQFT pair around one phase stage
/// per constant (values taken mod 2^acc_width). An empty list still
/// produces the QFT/IQFT shell, which acts as the identity.
/// Counted gates: k * acc_width.
Circuit build_accumulator(std::span<const UIntOperand> constants, const Register& acc_reg);

/// Quantum-quantum multiplier: out += a * b via doubly-controlled
/// rotations. Requires a.width == b.width == n and out.width == 2n.
/// Counted gates: 2n^3.
Circuit build_multiplier_original(const Register& a_reg, const Register& b_reg,
                                  const Register& out_reg);

/// Classical-times-quantum multiplier: partial products summed by
/// single-controlled rotations. Requires b.width == a.width == n and
/// out.width == 2n. Counted gates: (3n^2 + n) / 2.
Circuit build_multiplier_optimized(UIntOperand a, const Register& b_reg,
                                   const Register& out_reg);

/// Signed add: the optimized-adder construction applied to the two's-
/// complement encoding constant.value mod 2^m. Requires
/// acc.width == constant.width. Arithmetic is exact mod 2^m, so signed
/// results within range decode correctly after measurement.
Circuit signed_add_constant(SignedOperand constant, const Register& acc_reg);

/// Two's-complement decode of a measured register value.
std::int64_t decode_signed(std::uint64_t measured, int width);

/// Encode helper: value mod 2^width.
std::uint64_t encode_signed(std::int64_t value, int width);

// ---------------------------------------------------------------------------
// Resource formulas (closed forms; the census of a built circuit must
// agree with them).
// ---------------------------------------------------------------------------

enum class Construction {
    AdderOriginal,
    AdderOptimized,
    AdderClassical,
    MultiplierOriginal,
    MultiplierOptimized,
    MultiplierClassical,
};

std::string_view to_string(Construction c);
Construction construction_from_string(std::string_view s);

struct ResourceEstimate {
    std::optional<std::int64_t> qubits; // empty for the classical circuits
    std::int64_t gates = 0;
};

/// Closed-form qubit and gate counts per construction:
///   adder        original (n^2+3n)/2 gates, 2n+1 qubits
///                optimized n+1 gates, n+1 qubits
///                classical 5n-3 gates
///   multiplier   original 2n^3 gates, 4n qubits
///                optimized (3n^2+n)/2 gates, 3n qubits
///                classical 6n^2 gates
ResourceEstimate resource_estimate(Construction construction, int n);

} // namespace qfmm
