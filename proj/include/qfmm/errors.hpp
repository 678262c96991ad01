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

#include <stdexcept>
#include <string>

namespace qfmm {

/// Violated resource or sizing constraint (register widths, width plans,
/// qubit caps). The message names the constraint that failed.
struct ConstraintError : std::runtime_error {
    explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

/// A self-check the library guarantees by construction did not hold
/// (non-deterministic readout, decode out of range, result mismatch).
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qfmm
