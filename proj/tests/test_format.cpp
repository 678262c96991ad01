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

#include "qfmm/format.hpp"

#include "doctest.h"

#include <random>
#include <sstream>

using namespace qfmm;

TEST_CASE("measurement rendering reverses bits before hex") {
    CHECK(format_measurement(10, 12) == "0x500");
    CHECK(format_measurement(0, 12) == "0x000");
    CHECK(format_measurement(29, 12) == "0xb80"); // bit-reverse of 000000011101
    CHECK(format_measurement(1, 1) == "0x1");
    CHECK(format_measurement(1, 4) == "0x8");
    CHECK(format_measurement(13, 5) == "0x16"); // 01101 -> 10110
}

TEST_CASE("measurement rendering validates its input") {
    CHECK_THROWS_AS(format_measurement(16, 4), std::invalid_argument);
    CHECK_THROWS_AS(format_measurement(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_measurement("500", 12), std::invalid_argument);
    CHECK_THROWS_AS(parse_measurement("0xZZ", 8), std::invalid_argument);
    CHECK_THROWS_AS(parse_measurement("0xfff", 4), std::invalid_argument);
}

TEST_CASE("format and parse round-trip for widths up to 16") {
    for (int w = 1; w <= 12; ++w) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << w); ++v) {
            CHECK(parse_measurement(format_measurement(v, w), w) == v);
        }
    }
    std::mt19937_64 rng(2);
    for (int w = 13; w <= 16; ++w) {
        std::uniform_int_distribution<std::uint64_t> value(0, (std::uint64_t{1} << w) - 1);
        for (int trial = 0; trial < 500; ++trial) {
            const std::uint64_t v = value(rng);
            CHECK(parse_measurement(format_measurement(v, w), w) == v);
        }
    }
}

TEST_CASE("matrix text format") {
    SUBCASE("parses the documented layout") {
        const IntMatrix m = parse_matrix_text("2 2\n1 2\n3 4\n", 3);
        CHECK(m.rows() == 2);
        CHECK(m.cols() == 2);
        CHECK(m.elements(1, 0) == 3);
        CHECK(m.element_width == 3);
    }
    SUBCASE("whitespace shape does not matter") {
        const IntMatrix m = parse_matrix_text("2 3 1 2 3 4 5 6", 3);
        CHECK(m.elements(1, 2) == 6);
    }
    SUBCASE("round-trips through the writer") {
        const IntMatrix m = parse_matrix_text("2 2\n10 13\n22 29\n", 5);
        CHECK(parse_matrix_text(write_matrix_text(m), 5).elements == m.elements);
        CHECK(write_matrix_text(m) == "2 2\n10 13\n22 29\n");
    }
    SUBCASE("rejects malformed input") {
        CHECK_THROWS_AS(parse_matrix_text("", 3), std::invalid_argument);
        CHECK_THROWS_AS(parse_matrix_text("2 2\n1 2 3", 3), std::invalid_argument);
        CHECK_THROWS_AS(parse_matrix_text("0 2\n", 3), std::invalid_argument);
        CHECK_THROWS_AS(parse_matrix_text("2 2\n1 2 3 x", 3), std::invalid_argument);
    }
}
