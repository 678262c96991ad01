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

namespace qfmm {

// Fourier encoding convention: after append_qft(reg), qubit
// fourier_qubit(reg, l) carries the relative phase 2*pi*m / 2^l of the
// register value m, for l = 1..width. No trailing swap gates are emitted;
// the significance reversal lives in this mapping (see reversed()).

/// Physical qubit carrying Fourier phase index l (1-based) of a register
/// transformed by append_qft. Equals the wire of computational bit l-1.
int fourier_qubit(const Register& reg, int l);

/// Appends the transform over `reg`: per wire, most significant first,
/// one Hadamard then the controlled rotation ladder with angles 2*pi/2^k.
/// All gates are flagged uncounted (encoding overhead). The full ladder
/// is emitted; there is no small-angle cutoff.
void append_qft(Circuit& circuit, const Register& reg);

/// Appends the exact inverse gate sequence of append_qft.
void append_iqft(Circuit& circuit, const Register& reg);

/// Standalone circuits spanning the register (plus any leading qubits
/// below its offset). build_iqft(r) == inverse(build_qft(r)) exactly.
/// On the Fourier side of build_qft the register reads through
/// reversed(reg).
Circuit build_qft(const Register& reg);
Circuit build_iqft(const Register& reg);

} // namespace qfmm
