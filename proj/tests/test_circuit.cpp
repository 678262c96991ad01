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

#include "qfmm/circuit.hpp"

#include "qfmm/arithmetic.hpp"
#include "qfmm/errors.hpp"
#include "qfmm/qft.hpp"
#include "qfmm/statevector.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <complex>
#include <random>

using namespace qfmm;

TEST_CASE("register layout") {
    SUBCASE("single register sits at offset zero") {
        const Circuit c = new_circuit({RegisterSpec{"a", 3, BitOrder::MsbFirst,
                                                    RegisterRole::Operand}});
        CHECK(c.num_qubits() == 3);
        CHECK(c.reg("a").offset == 0);
        CHECK(c.reg("a").width == 3);
    }
    SUBCASE("original multiplier layout uses 4n qubits") {
        const Circuit c = new_circuit({RegisterSpec{"a", 2}, RegisterSpec{"b", 2},
                                       RegisterSpec{"out", 4}});
        CHECK(c.num_qubits() == 8);
        CHECK(c.reg("b").offset == 2);
        CHECK(c.reg("out").offset == 4);
    }
    SUBCASE("optimized multiplier layout uses 3n qubits") {
        const Circuit c = new_circuit({RegisterSpec{"b", 2}, RegisterSpec{"out", 4}});
        CHECK(c.num_qubits() == 6);
    }
    SUBCASE("duplicate names are rejected") {
        CHECK_THROWS_AS(new_circuit({RegisterSpec{"a", 2}, RegisterSpec{"a", 2}}),
                        ConstraintError);
    }
    SUBCASE("the qubit cap applies") {
        CHECK_THROWS_AS(new_circuit({RegisterSpec{"wide", 27}}), ConstraintError);
        CHECK(new_circuit({RegisterSpec{"wide", 32}}, /*qubit_cap=*/32).num_qubits() == 32);
    }
    SUBCASE("overlapping registers are rejected") {
        CHECK_THROWS_AS(Circuit(4, {Register{"a", 0, 3}, Register{"b", 2, 2}}), ConstraintError);
    }
    SUBCASE("unknown register lookup fails") {
        const Circuit c = new_circuit({RegisterSpec{"a", 2}});
        CHECK_THROWS_AS(c.reg("missing"), std::invalid_argument);
    }
}

TEST_CASE("append tracks counted flags") {
    Circuit c = new_circuit({RegisterSpec{"r", 3}});
    c.append(Gate::hadamard(0), false);
    GateCensus after_h = census(c);
    CHECK(after_h.total == 1);
    CHECK(after_h.counted == 0);

    c.append(Gate::controlled_phase(0, 1, 0.5), true);
    GateCensus after_cp = census(c);
    CHECK(after_cp.total == 2);
    CHECK(after_cp.counted == 1);
    CHECK(after_cp.by_kind.at("H") == 1);
    CHECK(after_cp.by_kind.at("CP") == 1);

    CHECK_THROWS_AS(c.append(Gate::hadamard(5), false), std::out_of_range);

    c.freeze();
    CHECK_THROWS_AS(c.append(Gate::hadamard(0), false), std::logic_error);
}

TEST_CASE("optimized adder body has n+1 counted gates") {
    const Register acc{"acc", 0, 4, BitOrder::LsbFirst, RegisterRole::Accumulator};
    const Circuit c = build_adder_optimized(UIntOperand{5, 3}, acc);
    CHECK(census(c).counted == 4);
}

TEST_CASE("census of the arithmetic cores") {
    SUBCASE("empty circuit") {
        const GateCensus z = census(new_circuit({RegisterSpec{"r", 2}}));
        CHECK(z.total == 0);
        CHECK(z.counted == 0);
        CHECK(z.by_kind.empty());
    }
    SUBCASE("original adder controlled-rotation stage at n=3") {
        const Register a{"a", 0, 3, BitOrder::LsbFirst, RegisterRole::Operand};
        const Register acc{"acc", 3, 4, BitOrder::LsbFirst, RegisterRole::Accumulator};
        CHECK(census(build_adder_original(a, acc)).counted == 9);
    }
    SUBCASE("original multiplier core at n=2") {
        const Register a{"a", 0, 2, BitOrder::LsbFirst, RegisterRole::Operand};
        const Register b{"b", 2, 2, BitOrder::LsbFirst, RegisterRole::Operand};
        const Register out{"out", 4, 4, BitOrder::LsbFirst, RegisterRole::Accumulator};
        CHECK(census(build_multiplier_original(a, b, out)).counted == 16);
    }
}

TEST_CASE("inverse reverses, negates and preserves bookkeeping") {
    SUBCASE("inverse of empty is empty") {
        CHECK(inverse(new_circuit({RegisterSpec{"r", 2}})).size() == 0);
    }
    SUBCASE("QFT composed with its inverse is the identity on all basis states") {
        const Register r{"r", 0, 3, BitOrder::LsbFirst, RegisterRole::Operand};
        const Circuit round_trip = compose(build_qft(r), inverse(build_qft(r)));
        for (std::uint64_t j = 0; j < 8; ++j) {
            StateVector s = init_basis_state(3, j);
            run_circuit(s, round_trip);
            CHECK(std::abs(s.amplitudes(static_cast<Eigen::Index>(j)) -
                           std::complex<double>(1.0, 0.0)) < 1e-10);
        }
    }
    SUBCASE("involution, census preservation") {
        Circuit c = new_circuit({RegisterSpec{"r", 4}});
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> angle(-3.0, 3.0);
        for (int i = 0; i < 50; ++i) {
            c.append(Gate::controlled_phase(i % 4, (i + 1) % 4, angle(rng)), i % 2 == 0);
            c.append(Gate::hadamard(i % 4), false);
        }
        const Circuit inv = inverse(c);
        CHECK(inv.size() == c.size());
        const Circuit back = inverse(inv);
        CHECK(back.gates() == c.gates());
        CHECK(back.counted_flags() == c.counted_flags());

        const GateCensus orig = census(c);
        const GateCensus invc = census(inv);
        CHECK(orig.total == invc.total);
        CHECK(orig.counted == invc.counted);
        CHECK(orig.by_kind == invc.by_kind);
    }
}

TEST_CASE("composition adds censuses") {
    const Register r{"r", 0, 3, BitOrder::LsbFirst, RegisterRole::Operand};
    const Circuit c1 = build_qft(r);
    const Circuit c2 = build_iqft(r);
    const GateCensus sum = census(compose(c1, c2));
    CHECK(sum.total == census(c1).total + census(c2).total);

    const Circuit wide = new_circuit({RegisterSpec{"r", 4}});
    CHECK_THROWS_AS(compose(c1, wide), std::invalid_argument);
}

TEST_CASE("gate list round trip is bit exact") {
    const Register a{"a", 0, 3, BitOrder::MsbFirst, RegisterRole::Operand};
    const Register acc{"acc", 3, 4, BitOrder::LsbFirst, RegisterRole::Accumulator};
    const Circuit c = build_adder_original(a, acc);

    const std::string text = export_gatelist(c);
    CHECK(text.rfind("qubits=7\n", 0) == 0);
    CHECK(text.find("reg=a,0,3,msb_first,operand\n") != std::string::npos);
    CHECK(text.find("reg=acc,3,4,lsb_first,accumulator\n") != std::string::npos);

    const Circuit imported = import_gatelist(text);
    CHECK(imported.num_qubits() == c.num_qubits());
    CHECK(imported.registers() == c.registers());
    REQUIRE(imported.gates().size() == c.gates().size());
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        CHECK(imported.gates()[i] == c.gates()[i]); // bit-exact angles included
    }
    CHECK(export_gatelist(imported) == text);
}

TEST_CASE("gate list import rejects malformed input") {
    CHECK_THROWS_AS(import_gatelist("reg=a,0,1,lsb_first,operand\n"), std::invalid_argument);
    CHECK_THROWS_AS(import_gatelist("qubits=2\nFOO 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(import_gatelist("qubits=2\nCP 0,1\n"), std::invalid_argument);
    CHECK_THROWS_AS(import_gatelist("qubits=2\nP 0,notanangle\n"), std::invalid_argument);
    CHECK_THROWS_AS(import_gatelist("qubits=2\nH 5\n"), std::out_of_range);
    CHECK_THROWS_AS(
        import_gatelist("qubits=2\nreg=a,0,2,lsb_first,operand\nreg=b,1,1,lsb_first,carry\n"),
        ConstraintError);
}

TEST_CASE("imported gates come back uncounted") {
    const Register r{"r", 0, 2, BitOrder::LsbFirst, RegisterRole::Accumulator};
    Circuit c(2, {r});
    c.append(Gate::phase(0, 1.25), true);
    const Circuit imported = import_gatelist(export_gatelist(c));
    CHECK(census(imported).counted == 0);
    CHECK(census(imported).total == 1);
}
