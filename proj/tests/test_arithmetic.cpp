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
#include "qfmm/statevector.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

using namespace qfmm;
using qfmm::test::basis_index_for;
using qfmm::test::prob_floor;
using qfmm::test::run_with;

namespace {

Register operand_reg(const char* name, int offset, int width,
                     BitOrder order = BitOrder::LsbFirst) {
    return Register{name, offset, width, order, RegisterRole::Operand};
}

Register acc_reg(const char* name, int offset, int width, BitOrder order = BitOrder::LsbFirst) {
    return Register{name, offset, width, order, RegisterRole::Accumulator};
}

std::uint64_t measure(const StateVector& s, const Register& reg) {
    const ReadoutResult r = readout(s, reg);
    REQUIRE(r.probability > prob_floor());
    return r.value;
}

} // namespace

TEST_CASE("original adder equals integer addition (exhaustive, n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        for (const BitOrder order : {BitOrder::LsbFirst, BitOrder::MsbFirst}) {
            const Register a = operand_reg("a", 0, n, order);
            const Register acc = acc_reg("acc", n, n + 1, order);
            for (std::uint64_t av = 0; av < (std::uint64_t{1} << n); ++av) {
                const Circuit adder = build_adder_original(a, acc);
                for (std::uint64_t accv = 0; accv < (std::uint64_t{1} << n); ++accv) {
                    const StateVector s = run_with(adder, {{"a", av}, {"acc", accv}});
                    CHECK(measure(s, acc) == av + accv); // carry absorbs the overflow
                }
            }
            if (n > 2) {
                break; // both orders only at small n; one order is enough above
            }
        }
    }

    SUBCASE("adding zero is the identity") {
        const Register a = operand_reg("a", 0, 3);
        const Register acc = acc_reg("acc", 3, 4);
        const StateVector s = run_with(build_adder_original(a, acc), {{"a", 0}, {"acc", 5}});
        CHECK(measure(s, acc) == 5);
    }
    SUBCASE("3 + 2 = 5 at n=2") {
        const Register a = operand_reg("a", 0, 2);
        const Register acc = acc_reg("acc", 2, 3);
        const StateVector s = run_with(build_adder_original(a, acc), {{"a", 3}, {"acc", 2}});
        CHECK(measure(s, acc) == 5);
    }
    SUBCASE("resources at n=3: 9 counted gates on 7 qubits") {
        const Register a = operand_reg("a", 0, 3);
        const Register acc = acc_reg("acc", 3, 4);
        const Circuit c = build_adder_original(a, acc);
        CHECK(census(c).counted == 9);
        CHECK(c.num_qubits() == 7);
    }
    SUBCASE("width mismatch is a structural error") {
        CHECK_THROWS_AS(build_adder_original(operand_reg("a", 0, 3), acc_reg("acc", 3, 3)),
                        ConstraintError);
    }
}

TEST_CASE("optimized adder equals modular addition (exhaustive, n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        const Register acc = acc_reg("acc", 0, n + 1);
        const std::uint64_t modulus = std::uint64_t{1} << (n + 1);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
            const Circuit adder = build_adder_optimized(UIntOperand{c, n}, acc);
            for (std::uint64_t accv = 0; accv < modulus; ++accv) {
                const StateVector s = run_with(adder, {{"acc", accv}});
                CHECK(measure(s, acc) == (accv + c) % modulus);
            }
        }
    }

    SUBCASE("constant zero leaves the register unchanged") {
        const Register acc = acc_reg("acc", 0, 4);
        const Circuit c = build_adder_optimized(UIntOperand{0, 3}, acc);
        CHECK(measure(run_with(c, {{"acc", 6}}), acc) == 6);
        CHECK(census(c).counted == 4); // all n+1 phase gates still emitted
    }
    SUBCASE("5 + 6 = 11 at n=3") {
        const Register acc = acc_reg("acc", 0, 4);
        const StateVector s = run_with(build_adder_optimized(UIntOperand{5, 3}, acc),
                                       {{"acc", 6}});
        CHECK(measure(s, acc) == 11);
    }
    SUBCASE("resources at n=3: 4 counted gates on 4 qubits") {
        const Register acc = acc_reg("acc", 0, 4);
        const Circuit c = build_adder_optimized(UIntOperand{5, 3}, acc);
        CHECK(census(c).counted == 4);
        CHECK(c.num_qubits() == 4);
    }
}

TEST_CASE("multi-addend accumulator") {
    const Register acc = acc_reg("acc", 0, 5);

    SUBCASE("empty list acts as the identity") {
        const std::vector<UIntOperand> none;
        const Circuit c = build_accumulator(none, acc);
        CHECK(measure(run_with(c, {{"acc", 13}}), acc) == 13);
    }
    SUBCASE("3+3+3 = 9") {
        const std::vector<UIntOperand> threes(3, UIntOperand{3, 2});
        const StateVector s = run_with(build_accumulator(threes, acc), {{"acc", 0}});
        CHECK(measure(s, acc) == 9);
    }
    SUBCASE("one QFT and one IQFT regardless of the addend count") {
        for (std::size_t k : {std::size_t{0}, std::size_t{1}, std::size_t{4}, std::size_t{9}}) {
            const std::vector<UIntOperand> addends(k, UIntOperand{1, 1});
            const GateCensus c = census(build_accumulator(addends, acc));
            CHECK(c.by_kind.at("H") == 2 * acc.width); // exactly one transform each way
            CHECK(c.counted == static_cast<std::int64_t>(k) * acc.width);
        }
    }
    SUBCASE("random addend lists reduce mod 2^width") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<std::uint64_t> value(0, 15);
            std::uniform_int_distribution<std::size_t> length(0, 6);
            std::vector<UIntOperand> addends(length(rng));
            std::uint64_t sum = 0;
            for (auto& op : addends) {
                op = UIntOperand{value(rng), 4};
                sum += op.value;
            }
            const StateVector s = run_with(build_accumulator(addends, acc), {{"acc", 0}});
            CHECK(measure(s, acc) == sum % 32);
        }
    }
}

TEST_CASE("original multiplier equals integer multiplication (exhaustive, n <= 3)") {
    for (int n = 1; n <= 3; ++n) {
        const Register a = operand_reg("a", 0, n);
        const Register b = operand_reg("b", n, n);
        const Register out = acc_reg("out", 2 * n, 2 * n);
        const Circuit mul = build_multiplier_original(a, b, out);
        for (std::uint64_t av = 0; av < (std::uint64_t{1} << n); ++av) {
            for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << n); ++bv) {
                const StateVector s = run_with(mul, {{"a", av}, {"b", bv}});
                CHECK(measure(s, out) == av * bv);
            }
        }
    }

    SUBCASE("resources at n=2: 16 counted gates on 8 qubits") {
        const Circuit c = build_multiplier_original(operand_reg("a", 0, 2),
                                                    operand_reg("b", 2, 2),
                                                    acc_reg("out", 4, 4));
        CHECK(census(c).counted == 16);
        CHECK(c.num_qubits() == 8);
    }
    SUBCASE("width mismatches are structural errors") {
        CHECK_THROWS_AS(build_multiplier_original(operand_reg("a", 0, 2),
                                                  operand_reg("b", 2, 3),
                                                  acc_reg("out", 5, 4)),
                        ConstraintError);
        CHECK_THROWS_AS(build_multiplier_original(operand_reg("a", 0, 2),
                                                  operand_reg("b", 2, 2),
                                                  acc_reg("out", 4, 5)),
                        ConstraintError);
    }
}

TEST_CASE("optimized multiplier equals integer multiplication (exhaustive, n <= 3)") {
    for (int n = 1; n <= 3; ++n) {
        const Register b = operand_reg("b", 0, n);
        const Register out = acc_reg("out", n, 2 * n);
        for (std::uint64_t av = 0; av < (std::uint64_t{1} << n); ++av) {
            const Circuit mul = build_multiplier_optimized(UIntOperand{av, n}, b, out);
            for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << n); ++bv) {
                const StateVector s = run_with(mul, {{"b", bv}});
                CHECK(measure(s, out) == av * bv);
            }
        }
    }

    SUBCASE("multiplying by one is the identity") {
        const Register b = operand_reg("b", 0, 3);
        const Register out = acc_reg("out", 3, 6);
        const Circuit mul = build_multiplier_optimized(UIntOperand{1, 3}, b, out);
        for (std::uint64_t bv = 0; bv < 8; ++bv) {
            CHECK(measure(run_with(mul, {{"b", bv}}), out) == bv);
        }
    }
    SUBCASE("3 * 2 = 6 at n=2") {
        const Register b = operand_reg("b", 0, 2);
        const Register out = acc_reg("out", 2, 4);
        const StateVector s = run_with(build_multiplier_optimized(UIntOperand{3, 2}, b, out),
                                       {{"b", 2}});
        CHECK(measure(s, out) == 6);
    }
    SUBCASE("resources at n=3: 15 counted gates on 9 qubits") {
        const Circuit c = build_multiplier_optimized(UIntOperand{5, 3}, operand_reg("b", 0, 3),
                                                     acc_reg("out", 3, 6));
        CHECK(census(c).counted == 15);
        CHECK(c.num_qubits() == 9);
    }
}

TEST_CASE("pre-inverse-transform phases encode the product") {
    // After the rotation stages the accumulator is the tensor product of
    //
    //   (|0> + e^{2 pi i a b / 2^l} |1>) / sqrt(2),  l = 1..2n.
    //
    // checked as the relative phase between paired basis amplitudes.
    const int n = 3;
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> value(0, 7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t a = value(rng);
        const std::int64_t b = value(rng);
        Circuit c = new_circuit({RegisterSpec{"b", n}, RegisterSpec{"out", 2 * n}});
        const Register& b_reg = c.reg("b");
        const Register& out = c.reg("out");
        append_load(c, b_reg, static_cast<std::uint64_t>(b));
        append_qft(c, out);
        append_multiply_stage(c, b_reg, out, a);

        StateVector s = init_basis_state(c.num_qubits(), 0);
        run_circuit(s, c);

        const std::uint64_t base = basis_index_for(static_cast<std::uint64_t>(b), b_reg);
        for (int l = 1; l <= 2 * n; ++l) {
            const std::uint64_t lifted = base | (std::uint64_t{1} << fourier_qubit(out, l));
            const std::complex<double> ratio =
                s.amplitudes(static_cast<Eigen::Index>(lifted)) /
                s.amplitudes(static_cast<Eigen::Index>(base));
            const double expected =
                phase_angle(a * b, l); // 2 pi a b / 2^l reduced mod 2 pi
            CHECK(qfmm::test::phase_distance(std::arg(ratio), expected) < 1e-9);
        }
    }
}

TEST_CASE("signed adds are exact for every in-range pair (m <= 5)") {
    for (int m = 1; m <= 5; ++m) {
        const Register acc = acc_reg("acc", 0, m);
        const std::int64_t half = std::int64_t{1} << (m - 1);
        for (std::int64_t c = -half; c < half; ++c) {
            const Circuit adder = signed_add_constant(SignedOperand{c, m}, acc);
            for (std::int64_t accv = -half; accv < half; ++accv) {
                if (accv + c < -half || accv + c >= half) {
                    continue;
                }
                const StateVector s =
                    run_with(adder, {{"acc", encode_signed(accv, m)}});
                CHECK(decode_signed(measure(s, acc), m) == accv + c);
            }
        }
    }

    SUBCASE("3 + (-1) decodes to 2 at m=4") {
        const Register acc = acc_reg("acc", 0, 4);
        const StateVector s = run_with(signed_add_constant(SignedOperand{-1, 4}, acc),
                                       {{"acc", 3}});
        CHECK(decode_signed(measure(s, acc), 4) == 2);
    }
    SUBCASE("adding zero is the identity") {
        const Register acc = acc_reg("acc", 0, 4);
        const StateVector s = run_with(signed_add_constant(SignedOperand{0, 4}, acc),
                                       {{"acc", encode_signed(-3, 4)}});
        CHECK(decode_signed(measure(s, acc), 4) == -3);
    }
    SUBCASE("0 + (-5) measures as 0b1011 and decodes to -5") {
        const Register acc = acc_reg("acc", 0, 4);
        const StateVector s = run_with(signed_add_constant(SignedOperand{-5, 4}, acc),
                                       {{"acc", 0}});
        const std::uint64_t raw = measure(s, acc);
        CHECK(raw == 0b1011);
        CHECK(decode_signed(raw, 4) == -5);
    }
}

TEST_CASE("two's-complement decode") {
    CHECK(decode_signed(11, 4) == -5);
    CHECK(decode_signed(5, 4) == 5);
    CHECK(decode_signed(8, 4) == -8); // boundary
    CHECK(decode_signed(0, 1) == 0);
    CHECK(decode_signed(1, 1) == -1);
    CHECK_THROWS_AS(decode_signed(16, 4), std::out_of_range);
    CHECK(encode_signed(-5, 4) == 11);
    CHECK(encode_signed(5, 4) == 5);
}

TEST_CASE("resource formulas") {
    SUBCASE("table values") {
        const ResourceEstimate a = resource_estimate(Construction::AdderOptimized, 5);
        CHECK(a.qubits == 6);
        CHECK(a.gates == 6);
        const ResourceEstimate m = resource_estimate(Construction::MultiplierOriginal, 3);
        CHECK(m.qubits == 12);
        CHECK(m.gates == 54);
        const ResourceEstimate c = resource_estimate(Construction::MultiplierClassical, 4);
        CHECK_FALSE(c.qubits.has_value());
        CHECK(c.gates == 96);
        CHECK(resource_estimate(Construction::AdderClassical, 3).gates == 12);
    }
    SUBCASE("built circuits agree with the formulas for n = 1..6") {
        for (int n = 1; n <= 6; ++n) {
            const Circuit ao = build_adder_original(operand_reg("a", 0, n),
                                                    acc_reg("acc", n, n + 1));
            const ResourceEstimate eo = resource_estimate(Construction::AdderOriginal, n);
            CHECK(census(ao).counted == eo.gates);
            CHECK(ao.num_qubits() == eo.qubits);

            const Circuit ap = build_adder_optimized(UIntOperand{1, n}, acc_reg("acc", 0, n + 1));
            const ResourceEstimate ep = resource_estimate(Construction::AdderOptimized, n);
            CHECK(census(ap).counted == ep.gates);
            CHECK(ap.num_qubits() == ep.qubits);

            const Circuit mo = build_multiplier_original(operand_reg("a", 0, n),
                                                         operand_reg("b", n, n),
                                                         acc_reg("out", 2 * n, 2 * n));
            const ResourceEstimate emo = resource_estimate(Construction::MultiplierOriginal, n);
            CHECK(census(mo).counted == emo.gates);
            CHECK(mo.num_qubits() == emo.qubits);

            const Circuit mp = build_multiplier_optimized(UIntOperand{1, n},
                                                          operand_reg("b", 0, n),
                                                          acc_reg("out", n, 2 * n));
            const ResourceEstimate emp = resource_estimate(Construction::MultiplierOptimized, n);
            CHECK(census(mp).counted == emp.gates);
            CHECK(mp.num_qubits() == emp.qubits);
        }
    }
    SUBCASE("optimized stays below original for n >= 2; n = 1 ties") {
        for (int n = 2; n <= 8; ++n) {
            CHECK(resource_estimate(Construction::AdderOptimized, n).gates <
                  resource_estimate(Construction::AdderOriginal, n).gates);
            CHECK(resource_estimate(Construction::MultiplierOptimized, n).gates <
                  resource_estimate(Construction::MultiplierOriginal, n).gates);
        }
        CHECK(resource_estimate(Construction::AdderOptimized, 1).gates ==
              resource_estimate(Construction::AdderOriginal, 1).gates);
        CHECK(resource_estimate(Construction::MultiplierOptimized, 1).gates ==
              resource_estimate(Construction::MultiplierOriginal, 1).gates);
    }
    SUBCASE("n must be positive") {
        CHECK_THROWS_AS(resource_estimate(Construction::AdderOriginal, 0),
                        std::invalid_argument);
    }
}

TEST_CASE("construction names round-trip") {
    for (const Construction c :
         {Construction::AdderOriginal, Construction::AdderOptimized,
          Construction::AdderClassical, Construction::MultiplierOriginal,
          Construction::MultiplierOptimized, Construction::MultiplierClassical}) {
        CHECK(construction_from_string(to_string(c)) == c);
    }
    CHECK_THROWS_AS(construction_from_string("divider"), std::invalid_argument);
}

TEST_CASE("arithmetic-core angles are reduced to [0, 2 pi)") {
    // Inverse-transform internals carry exactly negated angles instead so
    // that double inversion is bit-exact; the counted stages are reduced.
    const Circuit c = build_multiplier_original(operand_reg("a", 0, 3), operand_reg("b", 3, 3),
                                                acc_reg("out", 6, 6));
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        if (c.counted_flags()[i] && c.gates()[i].has_angle()) {
            CHECK(c.gates()[i].angle >= 0.0);
            CHECK(c.gates()[i].angle < 2.0 * std::numbers::pi);
        }
    }
}

TEST_CASE("operand invariants are enforced") {
    CHECK_THROWS_AS(build_adder_optimized(UIntOperand{8, 3}, acc_reg("acc", 0, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(signed_add_constant(SignedOperand{8, 4}, acc_reg("acc", 0, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(signed_add_constant(SignedOperand{-9, 4}, acc_reg("acc", 0, 4)),
                    std::invalid_argument);
}
