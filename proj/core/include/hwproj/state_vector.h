// Copyright 2026 The hwproj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HWPROJ_STATE_VECTOR_H
#define HWPROJ_STATE_VECTOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hwproj/rng.h"

namespace hwproj {

using Amp = std::complex<double>;

/// Pure state of `num_qubits` qubits.
///
/// Basis index b encodes qubit q as bit q of b; qubit 0 is the least
/// significant bit. Construction checks the length and the unit norm.
class StateVector {
   public:
    static constexpr double kNormTolerance = 1e-10;

    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(uint32_t num_qubits = 0);

    /// Takes ownership of `amps`. Throws std::invalid_argument unless
    /// amps.size() == 2^num_qubits and the norm is 1 within kNormTolerance.
    StateVector(uint32_t num_qubits, std::vector<Amp> amps);

    /// Like the checked constructor, but rescales to unit norm first.
    /// Throws std::invalid_argument on a zero or non-finite vector.
    static StateVector normalized(uint32_t num_qubits, std::vector<Amp> amps);

    static StateVector basis(uint32_t num_qubits, uint64_t index);

    uint32_t num_qubits() const {
        return num_qubits_;
    }
    size_t size() const {
        return amps_.size();
    }
    std::span<const Amp> amps() const {
        return amps_;
    }
    const Amp &operator[](size_t index) const {
        return amps_[index];
    }

    double norm_squared() const;

    /// Mutable access for simulator kernels. Callers own the unit-norm invariant.
    std::vector<Amp> &raw() {
        return amps_;
    }

    bool operator==(const StateVector &other) const = default;

    std::string str() const;

   private:
    uint32_t num_qubits_;
    std::vector<Amp> amps_;
};

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// max(0, 1 - fidelity(a, b)).
double infidelity(const StateVector &a, const StateVector &b);

/// Copy of `state` multiplied by the phase that makes its first amplitude of
/// magnitude > 1e-8 real and positive.
StateVector canonical_phase(const StateVector &state);

/// Largest entrywise |a - b| after both are put in canonical phase.
double max_abs_diff_mod_phase(const StateVector &a, const StateVector &b);

/// low ⊗ high: `low` occupies qubits [0, low.num_qubits()).
StateVector tensor(const StateVector &low, const StateVector &high);

/// Haar-random pure state (normalized complex Gaussian vector).
StateVector random_state(uint32_t num_qubits, Rng &rng);

}  // namespace hwproj

#endif
