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

#ifndef HWPROJ_CIRCUIT_H
#define HWPROJ_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hwproj {

enum class GateKind : uint8_t {
    H,
    X,
    RY,
    RZ,
    GLOBAL_PHASE,
    CX,
    CZ,
    CRZ,
    MEASURE,
    RESET,
    BARRIER,
};

std::string_view gate_name(GateKind kind);

/// Fires when the XOR of the listed classical bits equals `value`.
/// A single-bit condition is a plain equality test.
struct Condition {
    std::vector<uint32_t> cbits;
    bool value = true;

    bool holds(std::span<const uint8_t> bits) const;
    bool operator==(const Condition &) const = default;
};

/// One circuit step.
///
/// `qubits` holds the target for one-qubit gates, {control, target} for CX and
/// CRZ, {a, b} for CZ, the measured or reset qubit, or the barrier set (empty
/// means every qubit). `cbit` is only meaningful for MEASURE. A condition may
/// only be attached to a unitary kind.
struct Instruction {
    GateKind kind = GateKind::BARRIER;
    std::vector<uint32_t> qubits;
    double angle = 0;
    uint32_t cbit = 0;
    std::optional<Condition> condition;

    bool is_unitary() const;
    /// True for gates that are diagonal in the computational basis.
    bool is_diagonal() const;
    bool operator==(const Instruction &) const = default;
};

bool is_unitary_kind(GateKind kind);

namespace op {
Instruction h(uint32_t q);
Instruction x(uint32_t q);
Instruction ry(double angle, uint32_t q);
Instruction rz(double angle, uint32_t q);
Instruction gphase(double angle);
Instruction cx(uint32_t control, uint32_t target);
Instruction cz(uint32_t a, uint32_t b);
Instruction crz(double angle, uint32_t control, uint32_t target);
Instruction measure(uint32_t q, uint32_t cbit);
Instruction reset(uint32_t q);
Instruction barrier(std::vector<uint32_t> qubits = {});
/// `inner` executed only when parity(cbits) == value. Throws
/// std::invalid_argument for a non-unitary inner instruction.
Instruction if_parity(std::vector<uint32_t> cbits, bool value, Instruction inner);
}  // namespace op

/// Ordered instruction list over `num_qubits` qubits and `num_cbits` classical bits.
struct Circuit {
    uint32_t num_qubits = 0;
    uint32_t num_cbits = 0;
    std::vector<Instruction> instructions;

    Circuit() = default;
    Circuit(uint32_t qubits, uint32_t cbits) : num_qubits(qubits), num_cbits(cbits) {
    }

    /// Appends after checking indices against the declared sizes.
    Circuit &push(Instruction inst);

    /// Appends every instruction of `fragment`, renaming qubit i to
    /// qubit_map[i] and cbit i to cbit_map[i].
    Circuit &append(const Circuit &fragment, std::span<const uint32_t> qubit_map, std::span<const uint32_t> cbit_map);

    /// Throws std::invalid_argument on an out-of-range index, a malformed
    /// arity, a condition on a non-unitary instruction, or a condition that
    /// reads a cbit no earlier MEASURE wrote.
    void validate() const;

    bool operator==(const Circuit &) const = default;
};

/// Checks one instruction against qubit and cbit counts; throws std::invalid_argument.
void validate_instruction(const Instruction &inst, uint32_t num_qubits, uint32_t num_cbits);

}  // namespace hwproj

#endif
