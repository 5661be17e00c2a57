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

#ifndef HWPROJ_KERNELS_H
#define HWPROJ_KERNELS_H

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hwproj/circuit.h"
#include "hwproj/state_vector.h"

// Amplitude-buffer kernels. "Slot" is a bit position in the buffer index,
// which the executor maps from circuit qubits.
namespace hwproj::kernels {

using Matrix2 = std::array<Amp, 4>;  // row-major

Matrix2 matrix_of(GateKind kind, double angle);

/// Rz(phi) = diag(e^{-i phi/2}, e^{+i phi/2}).
inline Amp rz_phase(double phi, bool one) {
    return std::polar(1.0, one ? phi / 2 : -phi / 2);
}

void apply_1q(std::span<Amp> amps, uint32_t slot, const Matrix2 &m);
void apply_diag_1q(std::span<Amp> amps, uint32_t slot, Amp d0, Amp d1);
void apply_x(std::span<Amp> amps, uint32_t slot);
void apply_cx(std::span<Amp> amps, uint32_t control, uint32_t target);
void apply_cz(std::span<Amp> amps, uint32_t a, uint32_t b);
void apply_crz(std::span<Amp> amps, uint32_t control, uint32_t target, double phi);
void scale(std::span<Amp> amps, Amp factor);

/// Applies a unitary instruction; slots[i] is the buffer position of inst.qubits[i].
/// The condition, if any, is ignored here.
void apply_unitary(std::span<Amp> amps, const Instruction &inst, std::span<const uint32_t> slots);

double probability_of_one(std::span<const Amp> amps, uint32_t slot);

/// Projects `slot` onto `outcome`, renormalizes by 1/sqrt(prob), and drops the slot.
std::vector<Amp> collapse_remove(std::span<const Amp> amps, uint32_t slot, bool outcome, double prob);

/// Projects `slot` onto `outcome` and renormalizes, keeping the slot.
std::vector<Amp> collapse_keep(std::span<const Amp> amps, uint32_t slot, bool outcome, double prob);

/// Inserts a new slot at position `slot` holding the basis value `value`.
std::vector<Amp> insert_slot(std::span<const Amp> amps, uint32_t slot, bool value);

}  // namespace hwproj::kernels

#endif
