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

#include "qfmm/matmul.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qfmm {

/// Measurement rendering used by the result tables: the value is
/// zero-padded to register_width bits, the bit string is reversed, and
/// the reversed string prints as 0x-prefixed hex with ceil(width/4)
/// digits. A 12-bit readout of 10 renders as "0x500".
std::string format_measurement(std::uint64_t value, int register_width);

/// Inverse of format_measurement for the same width.
/// Throws std::invalid_argument on malformed text.
std::uint64_t parse_measurement(std::string_view text, int register_width);

/// Matrix text format: first line "rows cols", then row-major integers,
/// whitespace separated.
IntMatrix read_matrix_text(std::istream& in, int element_width);
IntMatrix parse_matrix_text(std::string_view text, int element_width);
std::string write_matrix_text(const IntMatrix& m);

} // namespace qfmm
