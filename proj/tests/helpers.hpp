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
#include "qfmm/statevector.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace qfmm::test {

/// Basis index with `value` encoded in `reg` and zeros elsewhere.
inline std::uint64_t basis_index_for(std::uint64_t value, const Register& reg) {
    std::uint64_t idx = 0;
    for (int i = 0; i < reg.width; ++i) {
        idx |= ((value >> i) & 1u) << reg.qubit_of_bit(i);
    }
    return idx;
}

/// Runs a circuit from a basis state with the named registers preloaded.
inline StateVector run_with(const Circuit& circuit,
                            std::initializer_list<std::pair<const char*, std::uint64_t>> loads) {
    std::uint64_t idx = 0;
    for (const auto& [name, value] : loads) {
        idx |= basis_index_for(value, circuit.reg(name));
    }
    StateVector s = init_basis_state(circuit.num_qubits(), idx);
    run_circuit(s, circuit);
    return s;
}

inline double prob_floor() { return 1.0 - 1e-9; }

/// Circular distance between two angles.
inline double phase_distance(double a, double b) {
    const double two_pi = 6.283185307179586476925286766559;
    double d = std::fmod(a - b, two_pi);
    if (d < 0) {
        d += two_pi;
    }
    return std::min(d, two_pi - d);
}

/// Random state of unit norm, reproducible per seed.
inline StateVector random_state(int num_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector s;
    s.num_qubits = num_qubits;
    s.amplitudes.resize(Eigen::Index{1} << num_qubits);
    for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
        s.amplitudes(i) = std::complex<double>(gauss(rng), gauss(rng));
    }
    s.amplitudes /= s.amplitudes.norm();
    return s;
}

/// Splits [0, count) across hardware threads. The worker returns an empty
/// string on success or a failure description; the first failure is
/// reported. doctest assertions stay on the calling thread.
inline std::string parallel_check(std::int64_t count,
                                  const std::function<std::string(std::int64_t)>& worker) {
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex mu;
    std::string first_failure;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::int64_t i = next.fetch_add(1); i < count && !failed.load();
                 i = next.fetch_add(1)) {
                std::string msg;
                try {
                    msg = worker(i);
                } catch (const std::exception& e) {
                    msg = std::string("exception: ") + e.what();
                }
                if (!msg.empty()) {
                    const std::lock_guard<std::mutex> lock(mu);
                    if (!failed.exchange(true)) {
                        first_failure = "case " + std::to_string(i) + ": " + msg;
                    }
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    return first_failure;
}

} // namespace qfmm::test
