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

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qfmm {

namespace {

std::uint64_t reverse_bits(std::uint64_t value, int width) {
    std::uint64_t out = 0;
    for (int i = 0; i < width; ++i) {
        out = (out << 1) | ((value >> i) & 1u);
    }
    return out;
}

} // namespace

std::string format_measurement(std::uint64_t value, int register_width) {
    if (register_width < 1 || register_width > 62) {
        throw std::invalid_argument("register width must be in [1, 62]");
    }
    if (value >> register_width) {
        throw std::invalid_argument("value does not fit in " + std::to_string(register_width) +
                                    " bits");
    }
    const std::uint64_t reversed = reverse_bits(value, register_width);
    const int digits = (register_width + 3) / 4;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%0*llx", digits,
                  static_cast<unsigned long long>(reversed));
    return buf;
}

std::uint64_t parse_measurement(std::string_view text, int register_width) {
    if (register_width < 1 || register_width > 62) {
        throw std::invalid_argument("register width must be in [1, 62]");
    }
    if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
        throw std::invalid_argument("measurement text must be 0x-prefixed hex");
    }
    std::uint64_t reversed = 0;
    for (const char ch : text.substr(2)) {
        int digit;
        if (ch >= '0' && ch <= '9') {
            digit = ch - '0';
        } else if (ch >= 'a' && ch <= 'f') {
            digit = ch - 'a' + 10;
        } else if (ch >= 'A' && ch <= 'F') {
            digit = ch - 'A' + 10;
        } else {
            throw std::invalid_argument("bad hex digit in measurement text");
        }
        reversed = (reversed << 4) | static_cast<std::uint64_t>(digit);
    }
    if (reversed >> register_width) {
        throw std::invalid_argument("measurement text wider than the register");
    }
    return reverse_bits(reversed, register_width);
}

IntMatrix read_matrix_text(std::istream& in, int element_width) {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    if (!(in >> rows >> cols)) {
        throw std::invalid_argument("matrix text must start with 'rows cols'");
    }
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    IntMatrix m;
    m.element_width = element_width;
    m.elements.resize(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            std::int64_t v = 0;
            if (!(in >> v)) {
                throw std::invalid_argument("matrix text ended after " +
                                            std::to_string(i * cols + j) + " of " +
                                            std::to_string(rows * cols) + " elements");
            }
            m.elements(i, j) = v;
        }
    }
    return m;
}

IntMatrix parse_matrix_text(std::string_view text, int element_width) {
    std::istringstream in{std::string(text)};
    return read_matrix_text(in, element_width);
}

std::string write_matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << m.elements(i, j) << (j + 1 == m.cols() ? '\n' : ' ');
        }
    }
    return out.str();
}

} // namespace qfmm
