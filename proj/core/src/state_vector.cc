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

#include "hwproj/state_vector.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hwproj {

namespace {

void check_length(uint32_t num_qubits, size_t size) {
    if (num_qubits >= 63 || size != (size_t{1} << num_qubits)) {
        throw std::invalid_argument(
            "state vector length " + std::to_string(size) + " does not match 2^" + std::to_string(num_qubits));
    }
}

double sum_norm(const std::vector<Amp> &amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace

StateVector::StateVector(uint32_t num_qubits) : num_qubits_(num_qubits), amps_(size_t{1} << num_qubits) {
    amps_[0] = 1;
}

StateVector::StateVector(uint32_t num_qubits, std::vector<Amp> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
    check_length(num_qubits_, amps_.size());
    double n = sum_norm(amps_);
    if (!std::isfinite(n) || std::abs(n - 1) > kNormTolerance) {
        throw std::invalid_argument("state vector is not unit norm (norm^2 = " + std::to_string(n) + ")");
    }
}

StateVector StateVector::normalized(uint32_t num_qubits, std::vector<Amp> amps) {
    check_length(num_qubits, amps.size());
    double n = sum_norm(amps);
    if (!std::isfinite(n) || n <= 0) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    double scale = 1 / std::sqrt(n);
    for (auto &a : amps) {
        a *= scale;
    }
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::basis(uint32_t num_qubits, uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.size()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

double StateVector::norm_squared() const {
    return sum_norm(amps_);
}

std::string StateVector::str() const {
    std::stringstream out;
    out << "StateVector(" << num_qubits_ << ")";
    for (size_t b = 0; b < amps_.size(); b++) {
        if (std::abs(amps_[b]) > 1e-12) {
            out << "\n  |";
            for (uint32_t q = num_qubits_; q-- > 0;) {
                out << ((b >> q) & 1);
            }
            out << "> " << amps_[b].real() << (amps_[b].imag() < 0 ? "" : "+") << amps_[b].imag() << "i";
        }
    }
    return out.str();
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("fidelity of states with different qubit counts");
    }
    Amp inner = 0;
    for (size_t i = 0; i < a.size(); i++) {
        inner += std::conj(a[i]) * b[i];
    }
    return std::norm(inner);
}

double infidelity(const StateVector &a, const StateVector &b) {
    return std::max(0.0, 1.0 - fidelity(a, b));
}

StateVector canonical_phase(const StateVector &state) {
    std::vector<Amp> amps(state.amps().begin(), state.amps().end());
    for (const auto &a : amps) {
        if (std::abs(a) > 1e-8) {
            Amp phase = std::conj(a) / std::abs(a);
            for (auto &x : amps) {
                x *= phase;
            }
            break;
        }
    }
    return StateVector::normalized(state.num_qubits(), std::move(amps));
}

double max_abs_diff_mod_phase(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("comparing states with different qubit counts");
    }
    auto ca = canonical_phase(a);
    auto cb = canonical_phase(b);
    double worst = 0;
    for (size_t i = 0; i < ca.size(); i++) {
        worst = std::max(worst, std::abs(ca[i] - cb[i]));
    }
    return worst;
}

StateVector tensor(const StateVector &low, const StateVector &high) {
    uint32_t nl = low.num_qubits();
    std::vector<Amp> amps(low.size() * high.size());
    for (size_t h = 0; h < high.size(); h++) {
        for (size_t l = 0; l < low.size(); l++) {
            amps[(h << nl) | l] = low[l] * high[h];
        }
    }
    return StateVector::normalized(nl + high.num_qubits(), std::move(amps));
}

StateVector random_state(uint32_t num_qubits, Rng &rng) {
    std::vector<Amp> amps(size_t{1} << num_qubits);
    for (auto &a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = Amp(re, im);
    }
    return StateVector::normalized(num_qubits, std::move(amps));
}

}  // namespace hwproj
