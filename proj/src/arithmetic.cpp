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

#include "qfmm/arithmetic.hpp"

#include "qfmm/errors.hpp"
#include "qfmm/qft.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qfmm {

namespace {

void check_unsigned_operand(const UIntOperand& op) {
    if (op.width < 1 || op.width > 62) {
        throw std::invalid_argument("operand width must be in [1, 62]");
    }
    if (op.value >> op.width) {
        throw std::invalid_argument("operand value " + std::to_string(op.value) +
                                    " does not fit in " + std::to_string(op.width) + " bits");
    }
}

void check_signed_operand(const SignedOperand& op) {
    if (op.width < 1 || op.width > 62) {
        throw std::invalid_argument("operand width must be in [1, 62]");
    }
    const std::int64_t half = std::int64_t{1} << (op.width - 1);
    if (op.value < -half || op.value >= half) {
        throw std::invalid_argument("signed value " + std::to_string(op.value) +
                                    " does not fit in " + std::to_string(op.width) + " bits");
    }
}

Circuit circuit_over(std::initializer_list<Register> regs) {
    int span = 0;
    for (const Register& r : regs) {
        span = std::max(span, r.offset + r.width);
    }
    return Circuit(span, std::vector<Register>(regs));
}

} // namespace

void append_load(Circuit& circuit, const Register& reg, std::uint64_t to, std::uint64_t from) {
    const std::uint64_t diff = to ^ from;
    for (int i = 0; i < reg.width; ++i) {
        if ((diff >> i) & 1u) {
            circuit.append(Gate::pauli_x(reg.qubit_of_bit(i)), /*counted=*/false);
        }
    }
}

void append_phase_add(Circuit& circuit, const Register& acc, std::uint64_t constant) {
    for (int l = 1; l <= acc.width; ++l) {
        const auto numerator = static_cast<std::int64_t>(constant & ((std::uint64_t{1} << l) - 1));
        circuit.append(Gate::phase(fourier_qubit(acc, l), phase_angle(numerator, l)),
                       /*counted=*/true);
    }
}

void append_controlled_add(Circuit& circuit, const Register& a_reg, const Register& acc) {
    // Rotations whose angle is a whole multiple of 2*pi for every operand
    // value (accumulator index l <= bit weight e) act as the identity and
    // are not emitted.
    for (int e = 0; e < a_reg.width; ++e) {
        const int control = a_reg.qubit_of_bit(e);
        for (int l = e + 1; l <= acc.width; ++l) {
            circuit.append(Gate::controlled_phase(control, fourier_qubit(acc, l),
                                                  phase_angle(std::int64_t{1} << e, l)),
                           /*counted=*/true);
        }
    }
}

void append_multiply_stage(Circuit& circuit, const Register& b_reg, const Register& acc,
                           std::int64_t a, bool signed_b) {
    // As in append_controlled_add, rotations that are whole multiples of
    // 2*pi for every operand (l <= e) are skipped. With signed_b the top
    // qubit carries negative weight, making two's-complement inputs exact.
    for (int e = 0; e < b_reg.width; ++e) {
        const int control = b_reg.qubit_of_bit(e);
        const bool sign_bit = signed_b && e == b_reg.width - 1;
        const std::int64_t weighted = (sign_bit ? -a : a) * (std::int64_t{1} << e);
        for (int l = e + 1; l <= acc.width; ++l) {
            circuit.append(Gate::controlled_phase(control, fourier_qubit(acc, l),
                                                  phase_angle(weighted, l)),
                           /*counted=*/true);
        }
    }
}

void append_cc_multiply(Circuit& circuit, const Register& a_reg, const Register& b_reg,
                        const Register& acc) {
    // Every (a bit, b bit, accumulator qubit) triple gets its rotation,
    // including structurally trivial angles: 2 n^2 W gates.
    for (int ea = 0; ea < a_reg.width; ++ea) {
        for (int eb = 0; eb < b_reg.width; ++eb) {
            for (int l = 1; l <= acc.width; ++l) {
                const std::uint64_t mask = (std::uint64_t{1} << l) - 1;
                const auto numerator =
                    static_cast<std::int64_t>((std::uint64_t{1} << (ea + eb)) & mask);
                circuit.append(Gate::cc_phase(a_reg.qubit_of_bit(ea), b_reg.qubit_of_bit(eb),
                                              fourier_qubit(acc, l), phase_angle(numerator, l)),
                               /*counted=*/true);
            }
        }
    }
}

Circuit build_adder_original(const Register& a_reg, const Register& acc_reg) {
    if (acc_reg.width != a_reg.width + 1) {
        throw ConstraintError("adder accumulator must be one qubit wider than the operand "
                              "(carry); got " +
                              std::to_string(acc_reg.width) + " vs " +
                              std::to_string(a_reg.width));
    }
    Circuit c = circuit_over({a_reg, acc_reg});
    append_qft(c, acc_reg);
    append_controlled_add(c, a_reg, acc_reg);
    append_iqft(c, acc_reg);
    c.freeze();
    return c;
}

Circuit build_adder_optimized(UIntOperand constant, const Register& acc_reg) {
    check_unsigned_operand(constant);
    if (acc_reg.width != constant.width + 1) {
        throw ConstraintError("adder accumulator must be one qubit wider than the addend "
                              "(carry); got " +
                              std::to_string(acc_reg.width) + " vs " +
                              std::to_string(constant.width));
    }
    Circuit c = circuit_over({acc_reg});
    append_qft(c, acc_reg);
    append_phase_add(c, acc_reg, constant.value);
    append_iqft(c, acc_reg);
    c.freeze();
    return c;
}

Circuit build_accumulator(std::span<const UIntOperand> constants, const Register& acc_reg) {
    Circuit c = circuit_over({acc_reg});
    append_qft(c, acc_reg);
    for (const UIntOperand& op : constants) {
        check_unsigned_operand(op);
        append_phase_add(c, acc_reg, op.value);
    }
    append_iqft(c, acc_reg);
    c.freeze();
    return c;
}

Circuit build_multiplier_original(const Register& a_reg, const Register& b_reg,
                                  const Register& out_reg) {
    if (a_reg.width != b_reg.width) {
        throw ConstraintError("multiplier operands must have equal widths; got " +
                              std::to_string(a_reg.width) + " and " +
                              std::to_string(b_reg.width));
    }
    if (out_reg.width != 2 * a_reg.width) {
        throw ConstraintError("multiplier output must be twice the operand width; got " +
                              std::to_string(out_reg.width));
    }
    Circuit c = circuit_over({a_reg, b_reg, out_reg});
    append_qft(c, out_reg);
    append_cc_multiply(c, a_reg, b_reg, out_reg);
    append_iqft(c, out_reg);
    c.freeze();
    return c;
}

Circuit build_multiplier_optimized(UIntOperand a, const Register& b_reg,
                                   const Register& out_reg) {
    check_unsigned_operand(a);
    if (b_reg.width != a.width) {
        throw ConstraintError("multiplier operand register width must equal the classical "
                              "operand width; got " +
                              std::to_string(b_reg.width) + " vs " + std::to_string(a.width));
    }
    if (out_reg.width != 2 * a.width) {
        throw ConstraintError("multiplier output must be twice the operand width; got " +
                              std::to_string(out_reg.width));
    }
    Circuit c = circuit_over({b_reg, out_reg});
    append_qft(c, out_reg);
    append_multiply_stage(c, b_reg, out_reg, static_cast<std::int64_t>(a.value));
    append_iqft(c, out_reg);
    c.freeze();
    return c;
}

Circuit signed_add_constant(SignedOperand constant, const Register& acc_reg) {
    check_signed_operand(constant);
    if (acc_reg.width != constant.width) {
        throw ConstraintError("signed add requires matching widths; got " +
                              std::to_string(acc_reg.width) + " vs " +
                              std::to_string(constant.width));
    }
    Circuit c = circuit_over({acc_reg});
    append_qft(c, acc_reg);
    append_phase_add(c, acc_reg, encode_signed(constant.value, constant.width));
    append_iqft(c, acc_reg);
    c.freeze();
    return c;
}

std::int64_t decode_signed(std::uint64_t measured, int width) {
    if (width < 1 || width > 62) {
        throw std::invalid_argument("decode width must be in [1, 62]");
    }
    if (measured >> width) {
        throw std::out_of_range("measured value does not fit the register width");
    }
    const std::uint64_t half = std::uint64_t{1} << (width - 1);
    if (measured < half) {
        return static_cast<std::int64_t>(measured);
    }
    return static_cast<std::int64_t>(measured) - (std::int64_t{1} << width);
}

std::uint64_t encode_signed(std::int64_t value, int width) {
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    return static_cast<std::uint64_t>(value) & mask;
}

std::string_view to_string(Construction c) {
    switch (c) {
    case Construction::AdderOriginal: return "adder_original";
    case Construction::AdderOptimized: return "adder_optimized";
    case Construction::AdderClassical: return "adder_classical";
    case Construction::MultiplierOriginal: return "multiplier_original";
    case Construction::MultiplierOptimized: return "multiplier_optimized";
    case Construction::MultiplierClassical: return "multiplier_classical";
    }
    throw std::invalid_argument("unknown construction");
}

Construction construction_from_string(std::string_view s) {
    if (s == "adder_original") return Construction::AdderOriginal;
    if (s == "adder_optimized") return Construction::AdderOptimized;
    if (s == "adder_classical") return Construction::AdderClassical;
    if (s == "multiplier_original") return Construction::MultiplierOriginal;
    if (s == "multiplier_optimized") return Construction::MultiplierOptimized;
    if (s == "multiplier_classical") return Construction::MultiplierClassical;
    throw std::invalid_argument("unknown construction '" + std::string(s) + "'");
}

ResourceEstimate resource_estimate(Construction construction, int n) {
    if (n < 1) {
        throw std::invalid_argument("resource formulas require n >= 1");
    }
    const std::int64_t nn = n;
    switch (construction) {
    case Construction::AdderOriginal:
        return {2 * nn + 1, (nn * nn + 3 * nn) / 2};
    case Construction::AdderOptimized:
        return {nn + 1, nn + 1};
    case Construction::AdderClassical:
        return {std::nullopt, 5 * nn - 3};
    case Construction::MultiplierOriginal:
        return {4 * nn, 2 * nn * nn * nn};
    case Construction::MultiplierOptimized:
        return {3 * nn, (3 * nn * nn + nn) / 2};
    case Construction::MultiplierClassical:
        return {std::nullopt, 6 * nn * nn};
    }
    throw std::invalid_argument("unknown construction");
}

} // namespace qfmm
