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

#include "hwproj/circuit.h"

#include <algorithm>
#include <stdexcept>

namespace hwproj {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::X:
            return "x";
        case GateKind::RY:
            return "ry";
        case GateKind::RZ:
            return "rz";
        case GateKind::GLOBAL_PHASE:
            return "gphase";
        case GateKind::CX:
            return "cx";
        case GateKind::CZ:
            return "cz";
        case GateKind::CRZ:
            return "crz";
        case GateKind::MEASURE:
            return "measure";
        case GateKind::RESET:
            return "reset";
        case GateKind::BARRIER:
            return "barrier";
    }
    return "?";
}

bool Condition::holds(std::span<const uint8_t> bits) const {
    bool parity = false;
    for (auto c : cbits) {
        parity ^= bits[c] != 0;
    }
    return parity == value;
}

bool is_unitary_kind(GateKind kind) {
    switch (kind) {
        case GateKind::MEASURE:
        case GateKind::RESET:
        case GateKind::BARRIER:
            return false;
        default:
            return true;
    }
}

bool Instruction::is_unitary() const {
    return is_unitary_kind(kind);
}

bool Instruction::is_diagonal() const {
    switch (kind) {
        case GateKind::RZ:
        case GateKind::GLOBAL_PHASE:
        case GateKind::CZ:
        case GateKind::CRZ:
            return true;
        default:
            return false;
    }
}

namespace op {

namespace {
Instruction make(GateKind kind, std::vector<uint32_t> qubits, double angle, uint32_t cbit) {
    Instruction inst;
    inst.kind = kind;
    inst.qubits = std::move(qubits);
    inst.angle = angle;
    inst.cbit = cbit;
    return inst;
}
}  // namespace

Instruction h(uint32_t q) {
    return make(GateKind::H, {q}, 0, 0);
}
Instruction x(uint32_t q) {
    return make(GateKind::X, {q}, 0, 0);
}
Instruction ry(double angle, uint32_t q) {
    return make(GateKind::RY, {q}, angle, 0);
}
Instruction rz(double angle, uint32_t q) {
    return make(GateKind::RZ, {q}, angle, 0);
}
Instruction gphase(double angle) {
    return make(GateKind::GLOBAL_PHASE, {}, angle, 0);
}
Instruction cx(uint32_t control, uint32_t target) {
    return make(GateKind::CX, {control, target}, 0, 0);
}
Instruction cz(uint32_t a, uint32_t b) {
    return make(GateKind::CZ, {a, b}, 0, 0);
}
Instruction crz(double angle, uint32_t control, uint32_t target) {
    return make(GateKind::CRZ, {control, target}, angle, 0);
}
Instruction measure(uint32_t q, uint32_t cbit) {
    return make(GateKind::MEASURE, {q}, 0, cbit);
}
Instruction reset(uint32_t q) {
    return make(GateKind::RESET, {q}, 0, 0);
}
Instruction barrier(std::vector<uint32_t> qubits) {
    return make(GateKind::BARRIER, std::move(qubits), 0, 0);
}
Instruction if_parity(std::vector<uint32_t> cbits, bool value, Instruction inner) {
    if (!inner.is_unitary()) {
        throw std::invalid_argument("only unitary instructions can be classically controlled");
    }
    if (inner.condition.has_value()) {
        throw std::invalid_argument("nested classical conditions are not supported");
    }
    inner.condition = Condition{std::move(cbits), value};
    return inner;
}

}  // namespace op

void validate_instruction(const Instruction &inst, uint32_t num_qubits, uint32_t num_cbits) {
    size_t expected = 0;
    switch (inst.kind) {
        case GateKind::GLOBAL_PHASE:
            expected = 0;
            break;
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::CRZ:
            expected = 2;
            break;
        case GateKind::BARRIER:
            expected = inst.qubits.size();
            break;
        default:
            expected = 1;
    }
    if (inst.qubits.size() != expected) {
        throw std::invalid_argument(std::string(gate_name(inst.kind)) + " has the wrong number of qubit operands");
    }
    for (auto q : inst.qubits) {
        if (q >= num_qubits) {
            throw std::invalid_argument(
                std::string(gate_name(inst.kind)) + " qubit index " + std::to_string(q) + " out of range (" +
                std::to_string(num_qubits) + " qubits)");
        }
    }
    if (inst.qubits.size() == 2 && inst.qubits[0] == inst.qubits[1]) {
        throw std::invalid_argument(std::string(gate_name(inst.kind)) + " operands must be distinct qubits");
    }
    if (inst.kind == GateKind::MEASURE && inst.cbit >= num_cbits) {
        throw std::invalid_argument(
            "measure cbit index " + std::to_string(inst.cbit) + " out of range (" + std::to_string(num_cbits) +
            " cbits)");
    }
    if (inst.condition.has_value()) {
        if (!inst.is_unitary()) {
            throw std::invalid_argument("classical condition on a non-unitary instruction");
        }
        if (inst.condition->cbits.empty()) {
            throw std::invalid_argument("classical condition reads no cbits");
        }
        for (auto c : inst.condition->cbits) {
            if (c >= num_cbits) {
                throw std::invalid_argument("condition cbit index " + std::to_string(c) + " out of range");
            }
        }
    }
}

Circuit &Circuit::push(Instruction inst) {
    validate_instruction(inst, num_qubits, num_cbits);
    instructions.push_back(std::move(inst));
    return *this;
}

Circuit &Circuit::append(
    const Circuit &fragment, std::span<const uint32_t> qubit_map, std::span<const uint32_t> cbit_map) {
    if (qubit_map.size() < fragment.num_qubits || cbit_map.size() < fragment.num_cbits) {
        throw std::invalid_argument("fragment map smaller than the fragment");
    }
    for (Instruction inst : fragment.instructions) {
        for (auto &q : inst.qubits) {
            q = qubit_map[q];
        }
        if (inst.kind == GateKind::MEASURE) {
            inst.cbit = cbit_map[inst.cbit];
        }
        if (inst.condition.has_value()) {
            for (auto &c : inst.condition->cbits) {
                c = cbit_map[c];
            }
        }
        if (inst.kind == GateKind::BARRIER && inst.qubits.empty()) {
            inst.qubits.assign(qubit_map.begin(), qubit_map.begin() + fragment.num_qubits);
        }
        push(std::move(inst));
    }
    return *this;
}

void Circuit::validate() const {
    std::vector<bool> written(num_cbits, false);
    for (size_t i = 0; i < instructions.size(); i++) {
        const auto &inst = instructions[i];
        try {
            validate_instruction(inst, num_qubits, num_cbits);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("instruction " + std::to_string(i) + ": " + e.what());
        }
        if (inst.condition.has_value()) {
            for (auto c : inst.condition->cbits) {
                if (!written[c]) {
                    throw std::invalid_argument(
                        "instruction " + std::to_string(i) + ": condition reads c" + std::to_string(c) +
                        " before any measurement writes it");
                }
            }
        }
        if (inst.kind == GateKind::MEASURE) {
            written[inst.cbit] = true;
        }
    }
}

}  // namespace hwproj
