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

#include "qfmm/arithmetic.hpp"

#include <Eigen/Core>

#include <cstdint>

namespace qfmm {

/// Row-major integer matrix storage.
using IntGrid = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Integer matrix with a declared per-element bit width n. Unsigned
/// contexts require 0 <= e < 2^n; signed intermediates are carried in
/// wider two's-complement registers derived from the width plan.
struct IntMatrix {
    IntGrid elements;
    int element_width = 0;

    Eigen::Index rows() const { return elements.rows(); }
    Eigen::Index cols() const { return elements.cols(); }
};

/// Register sizing for a whole multiplication, fixed and validated up
/// front from worst-case magnitudes rather than per instance.
struct WidthPlan {
    int operand_width = 0;     // n, bits per input element
    int accumulator_width = 0; // >= 2n + ceil(log2(max(k,1))) + sign_headroom
    int sign_headroom = 0;     // 1 when intermediates may be negative
};

struct MatmulStats {
    std::int64_t quantum_multiplications = 0;
    std::int64_t quantum_additions = 0;
    std::int64_t total_counted_gates = 0;
    int total_qubits_peak = 0;
    double wall_time_seconds = 0.0;
};

struct MatmulResult {
    IntMatrix c;
    IntGrid measured;        // raw register readouts, one per element of c
    int measured_width = 0;  // accumulator width the readouts came from
    Eigen::MatrixXd probabilities;
    MatmulStats stats;
};

struct CompareReport {
    IntMatrix c;
    MatmulStats basic;
    MatmulStats strassen;
};

// ---------------------------------------------------------------------------
// Width planning
// ---------------------------------------------------------------------------

/// Smallest plan for the basic path: accumulator 2n + ceil(log2(k)).
WidthPlan plan_basic(int operand_width, int inner_dim);

/// Smallest plan whose accumulator holds every measured intermediate of
/// the signed Strassen recursion (block sums, leaf products, block
/// combinations) for the given dimension and leaf threshold.
WidthPlan plan_strassen(int operand_width, int dim, int threshold);

/// Capacity rule for the basic path: products need 2n bits and summing k
/// of them needs ceil(log2(k)) more, plus any sign headroom. With a 3n
/// accumulator this admits inner dimensions up to exactly 2^n.
/// Throws ConstraintError naming the violated constraint.
void validate_basic_plan(const WidthPlan& plan, int operand_width, int inner_dim);

/// Strassen sizing: the plan must satisfy the capacity rule above with
/// sign_headroom 1 and additionally bound every measured intermediate,
/// |value| < 2^(accumulator_width - 1). Throws ConstraintError.
void validate_strassen_plan(const WidthPlan& plan, int operand_width, int dim, int threshold);

/// Largest magnitude any measured intermediate of the signed Strassen
/// recursion can reach (elements < 2^n, dimension dim, leaf threshold).
std::int64_t strassen_intermediate_bound(int operand_width, int dim, int threshold);

// ---------------------------------------------------------------------------
// Classical oracles
// ---------------------------------------------------------------------------

/// Exact integer product. Throws std::invalid_argument on a dimension
/// mismatch.
IntMatrix matmul_classical(const IntMatrix& a, const IntMatrix& b);

/// Seven-product recursion, switching to the naive product at
/// dimension <= threshold. Square power-of-two dimensions only.
IntMatrix strassen_classical(const IntMatrix& a, const IntMatrix& b, int threshold);

// ---------------------------------------------------------------------------
// Quantum paths
// ---------------------------------------------------------------------------

/// The fused inner-product circuit behind both quantum paths: registers
/// "b" (operand, re-prepared between stages) and "acc", with a single
/// QFT/IQFT pair around one multiply-accumulate stage per term. With
/// signed_values the operand loads and stage weights follow two's
/// complement.
Circuit build_inner_product_circuit(std::span<const std::int64_t> a_values,
                                    std::span<const std::int64_t> b_values, int b_width,
                                    int acc_width, bool signed_values);

/// Basic universal multiplication: each element of C is one fused
/// inner-product circuit (a single QFT/IQFT pair around k multiply-
/// accumulate stages sharing one accumulator; the operand register is
/// re-prepared between stages). Requires nonnegative elements < 2^n and
/// a plan with sign_headroom 0.
MatmulResult qmatmul_basic(const IntMatrix& a, const IntMatrix& b, const WidthPlan& plan);

/// Strassen recursion with quantum scalar arithmetic: block sums and
/// combinations run through signed multi-addend accumulators (batched
/// per output element), leaf products through the optimized multiplier
/// with two's-complement operands. Every intermediate is measured,
/// decoded via decode_signed and carried classically. Requires a plan
/// with sign_headroom 1.
MatmulResult qmatmul_strassen(const IntMatrix& a, const IntMatrix& b, const WidthPlan& plan,
                              int threshold = 1);

/// Runs both quantum paths on the same inputs, checks they agree, and
/// returns the two stat blocks side by side. `basic_plan` drives the
/// basic path; the Strassen plan is derived minimally from the same
/// operand width.
CompareReport compare_algorithms(const IntMatrix& a, const IntMatrix& b,
                                 const WidthPlan& basic_plan, int threshold = 1);

} // namespace qfmm
