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

#include "qfmm/matmul.hpp"

#include "qfmm/errors.hpp"
#include "qfmm/qft.hpp"
#include "qfmm/statevector.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfmm {

namespace {

constexpr double kReadoutCertainty = 1.0 - 1e-9;

int ceil_log2(std::int64_t k) {
    if (k <= 1) {
        return 0;
    }
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(k - 1)));
}

int bit_width_of(std::int64_t v) {
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(v)));
}

bool is_power_of_two(Eigen::Index v) {
    return v >= 1 && std::has_single_bit(static_cast<std::uint64_t>(v));
}

void check_inputs_unsigned(const IntMatrix& m, int operand_width, const char* which) {
    if (m.element_width != operand_width) {
        throw ConstraintError(std::string("matrix ") + which + " declares element width " +
                              std::to_string(m.element_width) + " but the plan expects " +
                              std::to_string(operand_width));
    }
    const std::int64_t limit = std::int64_t{1} << operand_width;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const std::int64_t e = m.elements(i, j);
            if (e < 0 || e >= limit) {
                throw ConstraintError(std::string("matrix ") + which + " element " +
                                      std::to_string(e) + " is outside [0, 2^" +
                                      std::to_string(operand_width) + ")");
            }
        }
    }
}

int width_for(const IntGrid& g) {
    std::int64_t max_abs = 0;
    bool negative = false;
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            max_abs = std::max(max_abs, std::abs(g(i, j)));
            negative = negative || g(i, j) < 0;
        }
    }
    return std::max(1, bit_width_of(max_abs) + (negative ? 1 : 0));
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

} // namespace

// ---------------------------------------------------------------------------
// Width planning
// ---------------------------------------------------------------------------

WidthPlan plan_basic(int operand_width, int inner_dim) {
    return WidthPlan{operand_width, 2 * operand_width + ceil_log2(inner_dim), 0};
}

std::int64_t strassen_intermediate_bound(int operand_width, int dim, int threshold) {
    if (threshold < 1) {
        throw std::invalid_argument("threshold must be >= 1");
    }
    // Largest magnitude that is ever measured: block sums double per
    // recursion level, leaf inner products square them, and every block
    // combination equals a true sub-product bounded by d * s^2.
    unsigned __int128 s = (std::uint64_t{1} << operand_width) - 1;
    unsigned __int128 best = 0;
    int d = dim;
    while (true) {
        if (d <= threshold) {
            best = std::max(best, static_cast<unsigned __int128>(d) * s * s);
            break;
        }
        best = std::max({best, 2 * s, static_cast<unsigned __int128>(d) * s * s});
        s *= 2;
        d /= 2;
    }
    if (best > (static_cast<unsigned __int128>(1) << 61)) {
        throw ConstraintError("Strassen intermediates exceed 61 bits for operand width " +
                              std::to_string(operand_width) + " and dimension " +
                              std::to_string(dim));
    }
    return static_cast<std::int64_t>(best);
}

WidthPlan plan_strassen(int operand_width, int dim, int threshold) {
    const std::int64_t bound = strassen_intermediate_bound(operand_width, dim, threshold);
    const int capacity = 2 * operand_width + ceil_log2(dim) + 1;
    const int magnitude = bit_width_of(bound) + 1;
    return WidthPlan{operand_width, std::max(capacity, magnitude), 1};
}

void validate_basic_plan(const WidthPlan& plan, int operand_width, int inner_dim) {
    if (plan.operand_width != operand_width) {
        throw ConstraintError("width plan operand width " + std::to_string(plan.operand_width) +
                              " does not match the element width " +
                              std::to_string(operand_width));
    }
    if (plan.sign_headroom != 0) {
        throw ConstraintError("the basic path requires sign_headroom 0");
    }
    const int required =
        2 * operand_width + ceil_log2(std::max(inner_dim, 1)) + plan.sign_headroom;
    if (plan.accumulator_width < required) {
        throw ConstraintError(
            "accumulator width " + std::to_string(plan.accumulator_width) +
            " cannot hold the worst-case inner product: products of two " +
            std::to_string(operand_width) + "-bit elements need " +
            std::to_string(2 * operand_width) + " bits plus ceil(log2(" +
            std::to_string(inner_dim) + ")) = " +
            std::to_string(ceil_log2(std::max(inner_dim, 1))) + " carry bits (required " +
            std::to_string(required) + ")");
    }
}

void validate_strassen_plan(const WidthPlan& plan, int operand_width, int dim, int threshold) {
    if (plan.operand_width != operand_width) {
        throw ConstraintError("width plan operand width " + std::to_string(plan.operand_width) +
                              " does not match the element width " +
                              std::to_string(operand_width));
    }
    if (plan.sign_headroom != 1) {
        throw ConstraintError("the Strassen path requires sign_headroom 1 "
                              "(intermediates can be negative)");
    }
    const int required = 2 * operand_width + ceil_log2(std::max(dim, 1)) + plan.sign_headroom;
    if (plan.accumulator_width < required) {
        throw ConstraintError("accumulator width " + std::to_string(plan.accumulator_width) +
                              " is below the capacity rule minimum " + std::to_string(required));
    }
    const std::int64_t bound = strassen_intermediate_bound(operand_width, dim, threshold);
    const std::int64_t half = std::int64_t{1} << (plan.accumulator_width - 1);
    if (bound >= half) {
        throw ConstraintError("accumulator width " + std::to_string(plan.accumulator_width) +
                              " cannot represent the worst-case signed intermediate " +
                              std::to_string(bound) + " (needs " +
                              std::to_string(bit_width_of(bound) + 1) + " bits)");
    }
}

// ---------------------------------------------------------------------------
// Classical oracles
// ---------------------------------------------------------------------------

IntMatrix matmul_classical(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " times " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    IntMatrix c;
    c.elements = a.elements * b.elements;
    c.element_width = width_for(c.elements);
    return c;
}

namespace {

IntGrid strassen_grid(const IntGrid& x, const IntGrid& y, int threshold) {
    const Eigen::Index d = x.rows();
    if (d <= threshold) {
        return x * y;
    }
    const Eigen::Index h = d / 2;
    const IntGrid x11 = x.topLeftCorner(h, h);
    const IntGrid x12 = x.topRightCorner(h, h);
    const IntGrid x21 = x.bottomLeftCorner(h, h);
    const IntGrid x22 = x.bottomRightCorner(h, h);
    const IntGrid y11 = y.topLeftCorner(h, h);
    const IntGrid y12 = y.topRightCorner(h, h);
    const IntGrid y21 = y.bottomLeftCorner(h, h);
    const IntGrid y22 = y.bottomRightCorner(h, h);

    const IntGrid m1 = strassen_grid(x11 + x22, y11 + y22, threshold);
    const IntGrid m2 = strassen_grid(x21 + x22, y11, threshold);
    const IntGrid m3 = strassen_grid(x11, y12 - y22, threshold);
    const IntGrid m4 = strassen_grid(x22, y21 - y11, threshold);
    const IntGrid m5 = strassen_grid(x11 + x12, y22, threshold);
    const IntGrid m6 = strassen_grid(x21 - x11, y11 + y12, threshold);
    const IntGrid m7 = strassen_grid(x12 - x22, y21 + y22, threshold);

    IntGrid c(d, d);
    c.topLeftCorner(h, h) = m1 + m4 - m5 + m7;
    c.topRightCorner(h, h) = m3 + m5;
    c.bottomLeftCorner(h, h) = m2 + m4;
    c.bottomRightCorner(h, h) = m1 - m2 + m3 + m6;
    return c;
}

void check_strassen_shape(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw ConstraintError("Strassen requires equal square matrices; got " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                              " and " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
    }
    if (!is_power_of_two(a.rows())) {
        throw ConstraintError("Strassen requires a power-of-two dimension; got " +
                              std::to_string(a.rows()));
    }
}

} // namespace

IntMatrix strassen_classical(const IntMatrix& a, const IntMatrix& b, int threshold) {
    check_strassen_shape(a, b);
    if (threshold < 1) {
        throw std::invalid_argument("threshold must be >= 1");
    }
    IntMatrix c;
    c.elements = strassen_grid(a.elements, b.elements, threshold);
    c.element_width = width_for(c.elements);
    return c;
}

// ---------------------------------------------------------------------------
// Quantum basic path
// ---------------------------------------------------------------------------

namespace {

struct QuantumScalar {
    std::int64_t value = 0;
    std::uint64_t raw = 0;
    double probability = 0.0;
};

// Runs a circuit from |0...0>, reads the accumulator register and insists
// the outcome is deterministic.
QuantumScalar run_and_read(const Circuit& circuit, MatmulStats& stats) {
    StateVector state = init_basis_state(circuit.num_qubits(), 0);
    run_circuit(state, circuit);
    const ReadoutResult r = readout(state, circuit.reg("acc"));
    if (r.probability <= kReadoutCertainty) {
        throw InternalError("non-deterministic readout (probability " +
                            std::to_string(r.probability) + ")");
    }
    stats.total_counted_gates += census(circuit).counted;
    stats.total_qubits_peak = std::max(stats.total_qubits_peak, circuit.num_qubits());
    QuantumScalar q;
    q.raw = r.value;
    q.probability = r.probability;
    return q;
}

} // namespace

Circuit build_inner_product_circuit(std::span<const std::int64_t> a_values,
                                    std::span<const std::int64_t> b_values, int b_width,
                                    int acc_width, bool signed_values) {
    if (a_values.size() != b_values.size()) {
        throw std::invalid_argument("inner product needs equally many terms on both sides");
    }
    for (const std::int64_t v : b_values) {
        const std::int64_t lo = signed_values ? -(std::int64_t{1} << (b_width - 1)) : 0;
        const std::int64_t hi = signed_values ? (std::int64_t{1} << (b_width - 1))
                                              : (std::int64_t{1} << b_width);
        if (v < lo || v >= hi) {
            throw std::invalid_argument("operand " + std::to_string(v) +
                                        " does not fit a " + std::to_string(b_width) +
                                        "-bit register");
        }
    }
    Circuit c = new_circuit({RegisterSpec{"b", b_width, BitOrder::LsbFirst, RegisterRole::Operand},
                             RegisterSpec{"acc", acc_width, BitOrder::LsbFirst,
                                          RegisterRole::Accumulator}});
    const Register& b_reg = c.reg("b");
    const Register& acc = c.reg("acc");
    append_qft(c, acc);
    std::uint64_t loaded = 0;
    for (std::size_t t = 0; t < a_values.size(); ++t) {
        const std::uint64_t enc = signed_values
                                      ? encode_signed(b_values[t], b_width)
                                      : static_cast<std::uint64_t>(b_values[t]);
        append_load(c, b_reg, enc, loaded);
        loaded = enc;
        append_multiply_stage(c, b_reg, acc, a_values[t], signed_values);
    }
    append_iqft(c, acc);
    c.freeze();
    return c;
}

namespace {

QuantumScalar quantum_inner_product(std::span<const std::int64_t> a_vals,
                                    std::span<const std::int64_t> b_vals, int b_width,
                                    int acc_width, bool signed_values, MatmulStats& stats) {
    const Circuit c = build_inner_product_circuit(a_vals, b_vals, b_width, acc_width,
                                                  signed_values);
    std::int64_t expected = 0;
    for (std::size_t t = 0; t < a_vals.size(); ++t) {
        expected += a_vals[t] * b_vals[t];
    }

    QuantumScalar q = run_and_read(c, stats);
    q.value = signed_values ? decode_signed(q.raw, acc_width)
                            : static_cast<std::int64_t>(q.raw);
    if (q.value != expected) {
        throw InternalError("inner product readout " + std::to_string(q.value) +
                            " disagrees with the exact value " + std::to_string(expected) +
                            "; the width plan did not cover this instance");
    }
    const auto k = static_cast<std::int64_t>(a_vals.size());
    stats.quantum_multiplications += k;
    stats.quantum_additions += std::max<std::int64_t>(0, k - 1);
    return q;
}

} // namespace

MatmulResult qmatmul_basic(const IntMatrix& a, const IntMatrix& b, const WidthPlan& plan) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " times " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    if (a.rows() < 1 || a.cols() < 1 || b.cols() < 1) {
        throw std::invalid_argument("matrices must be nonempty");
    }
    const int n = plan.operand_width;
    check_inputs_unsigned(a, n, "A");
    check_inputs_unsigned(b, n, "B");
    validate_basic_plan(plan, n, static_cast<int>(a.cols()));
    if (n + plan.accumulator_width > kDefaultQubitCap) {
        throw ConstraintError("element circuits need " +
                              std::to_string(n + plan.accumulator_width) +
                              " qubits, exceeding the qubit cap of " +
                              std::to_string(kDefaultQubitCap));
    }

    Timer timer;
    MatmulResult result;
    result.measured_width = plan.accumulator_width;
    result.c.elements.resize(a.rows(), b.cols());
    result.measured.resize(a.rows(), b.cols());
    result.probabilities.resize(a.rows(), b.cols());

    const auto k = static_cast<std::size_t>(a.cols());
    std::vector<std::int64_t> row(k);
    std::vector<std::int64_t> col(k);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            for (std::size_t t = 0; t < k; ++t) {
                row[t] = a.elements(i, static_cast<Eigen::Index>(t));
                col[t] = b.elements(static_cast<Eigen::Index>(t), j);
            }
            const QuantumScalar q = quantum_inner_product(row, col, n, plan.accumulator_width,
                                                          /*signed_values=*/false, result.stats);
            result.c.elements(i, j) = q.value;
            result.measured(i, j) = static_cast<std::int64_t>(q.raw);
            result.probabilities(i, j) = q.probability;
        }
    }
    result.c.element_width = width_for(result.c.elements);
    result.stats.wall_time_seconds = timer.seconds();
    return result;
}

// ---------------------------------------------------------------------------
// Quantum Strassen path
// ---------------------------------------------------------------------------

namespace {

struct StrassenCtx {
    int acc_width = 0;     // signed accumulator width m
    int operand_width = 0; // leaf operand register width
    int threshold = 1;
    MatmulStats stats;
};

// Batched signed accumulation: one QFT/IQFT pair, one phase stage per
// addend, measured once and decoded.
QuantumScalar quantum_accumulate(StrassenCtx& ctx, std::span<const std::int64_t> addends) {
    Circuit c = new_circuit({RegisterSpec{"acc", ctx.acc_width, BitOrder::LsbFirst,
                                          RegisterRole::Accumulator}});
    const Register& acc = c.reg("acc");
    append_qft(c, acc);
    std::int64_t expected = 0;
    for (const std::int64_t v : addends) {
        append_phase_add(c, acc, encode_signed(v, ctx.acc_width));
        expected += v;
    }
    append_iqft(c, acc);
    c.freeze();

    QuantumScalar q = run_and_read(c, ctx.stats);
    q.value = decode_signed(q.raw, ctx.acc_width);
    if (q.value != expected) {
        throw InternalError("accumulator readout " + std::to_string(q.value) +
                            " disagrees with the exact sum " + std::to_string(expected) +
                            "; the width plan did not cover this instance");
    }
    ctx.stats.quantum_additions +=
        std::max<std::int64_t>(0, static_cast<std::int64_t>(addends.size()) - 1);
    return q;
}

// Element-wise x + sign*y through the quantum accumulator.
IntGrid quantum_block_sum(StrassenCtx& ctx, const IntGrid& x, const IntGrid& y,
                          std::int64_t sign) {
    IntGrid out(x.rows(), x.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            const std::int64_t addends[2] = {x(i, j), sign * y(i, j)};
            out(i, j) = quantum_accumulate(ctx, addends).value;
        }
    }
    return out;
}

IntGrid strassen_quantum(StrassenCtx& ctx, const IntGrid& x, const IntGrid& y, bool top,
                         IntGrid* raw, Eigen::MatrixXd* prob) {
    const Eigen::Index d = x.rows();
    if (d <= ctx.threshold) {
        // Leaf: a basic quantum product on signed two's-complement
        // operands sharing the signed accumulator width.
        IntGrid out(d, d);
        const auto k = static_cast<std::size_t>(d);
        std::vector<std::int64_t> row(k);
        std::vector<std::int64_t> col(k);
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                for (std::size_t t = 0; t < k; ++t) {
                    row[t] = x(i, static_cast<Eigen::Index>(t));
                    col[t] = y(static_cast<Eigen::Index>(t), j);
                }
                const QuantumScalar q =
                    quantum_inner_product(row, col, ctx.operand_width, ctx.acc_width,
                                          /*signed_values=*/true, ctx.stats);
                out(i, j) = q.value;
                if (top) {
                    (*raw)(i, j) = static_cast<std::int64_t>(q.raw);
                    (*prob)(i, j) = q.probability;
                }
            }
        }
        return out;
    }

    const Eigen::Index h = d / 2;
    const IntGrid x11 = x.topLeftCorner(h, h);
    const IntGrid x12 = x.topRightCorner(h, h);
    const IntGrid x21 = x.bottomLeftCorner(h, h);
    const IntGrid x22 = x.bottomRightCorner(h, h);
    const IntGrid y11 = y.topLeftCorner(h, h);
    const IntGrid y12 = y.topRightCorner(h, h);
    const IntGrid y21 = y.bottomLeftCorner(h, h);
    const IntGrid y22 = y.bottomRightCorner(h, h);

    const IntGrid m1 = strassen_quantum(ctx, quantum_block_sum(ctx, x11, x22, +1),
                                        quantum_block_sum(ctx, y11, y22, +1), false, raw, prob);
    const IntGrid m2 = strassen_quantum(ctx, quantum_block_sum(ctx, x21, x22, +1), y11, false,
                                        raw, prob);
    const IntGrid m3 = strassen_quantum(ctx, x11, quantum_block_sum(ctx, y12, y22, -1), false,
                                        raw, prob);
    const IntGrid m4 = strassen_quantum(ctx, x22, quantum_block_sum(ctx, y21, y11, -1), false,
                                        raw, prob);
    const IntGrid m5 = strassen_quantum(ctx, quantum_block_sum(ctx, x11, x12, +1), y22, false,
                                        raw, prob);
    const IntGrid m6 = strassen_quantum(ctx, quantum_block_sum(ctx, x21, x11, -1),
                                        quantum_block_sum(ctx, y11, y12, +1), false, raw, prob);
    const IntGrid m7 = strassen_quantum(ctx, quantum_block_sum(ctx, x12, x22, -1),
                                        quantum_block_sum(ctx, y21, y22, +1), false, raw, prob);

    IntGrid c(d, d);
    for (Eigen::Index i = 0; i < h; ++i) {
        for (Eigen::Index j = 0; j < h; ++j) {
            struct Cell {
                Eigen::Index r, cidx;
                std::int64_t addends[4];
                int count;
            };
            const Cell cells[4] = {
                {i, j, {m1(i, j), m4(i, j), -m5(i, j), m7(i, j)}, 4},
                {i, j + h, {m3(i, j), m5(i, j), 0, 0}, 2},
                {i + h, j, {m2(i, j), m4(i, j), 0, 0}, 2},
                {i + h, j + h, {m1(i, j), -m2(i, j), m3(i, j), m6(i, j)}, 4},
            };
            for (const Cell& cell : cells) {
                const QuantumScalar q = quantum_accumulate(
                    ctx, std::span<const std::int64_t>(cell.addends,
                                                       static_cast<std::size_t>(cell.count)));
                c(cell.r, cell.cidx) = q.value;
                if (top) {
                    (*raw)(cell.r, cell.cidx) = static_cast<std::int64_t>(q.raw);
                    (*prob)(cell.r, cell.cidx) = q.probability;
                }
            }
        }
    }
    return c;
}

} // namespace

MatmulResult qmatmul_strassen(const IntMatrix& a, const IntMatrix& b, const WidthPlan& plan,
                              int threshold) {
    check_strassen_shape(a, b);
    if (threshold < 1) {
        throw std::invalid_argument("threshold must be >= 1");
    }
    const int n = plan.operand_width;
    check_inputs_unsigned(a, n, "A");
    check_inputs_unsigned(b, n, "B");
    const int dim = static_cast<int>(a.rows());
    validate_strassen_plan(plan, n, dim, threshold);

    // Leaf operands are block sums that double per level; their register
    // is sized for that bound plus a sign bit.
    int d = dim;
    int depth = 0;
    while (d > threshold) {
        d /= 2;
        ++depth;
    }
    const std::int64_t leaf_bound = ((std::int64_t{1} << n) - 1) << depth;

    StrassenCtx ctx;
    ctx.acc_width = plan.accumulator_width;
    ctx.operand_width = bit_width_of(leaf_bound) + 1;
    ctx.threshold = threshold;
    if (ctx.operand_width + ctx.acc_width > kDefaultQubitCap) {
        throw ConstraintError("leaf circuits need " +
                              std::to_string(ctx.operand_width + ctx.acc_width) +
                              " qubits, exceeding the qubit cap of " +
                              std::to_string(kDefaultQubitCap));
    }

    Timer timer;
    MatmulResult result;
    result.measured_width = plan.accumulator_width;
    result.measured.resize(a.rows(), a.cols());
    result.probabilities.resize(a.rows(), a.cols());
    result.c.elements = strassen_quantum(ctx, a.elements, b.elements, true, &result.measured,
                                         &result.probabilities);
    result.c.element_width = width_for(result.c.elements);
    ctx.stats.wall_time_seconds = timer.seconds();
    result.stats = ctx.stats;
    return result;
}

CompareReport compare_algorithms(const IntMatrix& a, const IntMatrix& b,
                                 const WidthPlan& basic_plan, int threshold) {
    check_strassen_shape(a, b);
    MatmulResult basic = qmatmul_basic(a, b, basic_plan);
    const WidthPlan splan =
        plan_strassen(basic_plan.operand_width, static_cast<int>(a.rows()), threshold);
    MatmulResult strassen = qmatmul_strassen(a, b, splan, threshold);
    if (basic.c.elements != strassen.c.elements) {
        throw InternalError("basic and Strassen quantum paths disagree");
    }
    CompareReport report;
    report.c = basic.c;
    report.basic = basic.stats;
    report.strassen = strassen.stats;
    return report;
}

} // namespace qfmm
