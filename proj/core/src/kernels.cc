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

#include "kernels.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hwproj::kernels {

Matrix2 matrix_of(GateKind kind, double angle) {
    switch (kind) {
        case GateKind::H: {
            double r = std::numbers::sqrt2 / 2;
            return {r, r, r, -r};
        }
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::RY: {
            double c = std::cos(angle / 2);
            double s = std::sin(angle / 2);
            return {c, -s, s, c};
        }
        case GateKind::RZ:
            return {rz_phase(angle, false), 0, 0, rz_phase(angle, true)};
        default:
            throw std::invalid_argument("no 2x2 matrix for " + std::string(gate_name(kind)));
    }
}

void apply_1q(std::span<Amp> amps, uint32_t slot, const Matrix2 &m) {
    size_t bit = size_t{1} << slot;
    for (size_t i = 0; i < amps.size(); i++) {
        if (i & bit) {
            continue;
        }
        Amp a0 = amps[i];
        Amp a1 = amps[i | bit];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void apply_diag_1q(std::span<Amp> amps, uint32_t slot, Amp d0, Amp d1) {
    size_t bit = size_t{1} << slot;
    for (size_t i = 0; i < amps.size(); i++) {
        amps[i] *= (i & bit) ? d1 : d0;
    }
}

void apply_x(std::span<Amp> amps, uint32_t slot) {
    size_t bit = size_t{1} << slot;
    for (size_t i = 0; i < amps.size(); i++) {
        if (!(i & bit)) {
            std::swap(amps[i], amps[i | bit]);
        }
    }
}

void apply_cx(std::span<Amp> amps, uint32_t control, uint32_t target) {
    size_t cb = size_t{1} << control;
    size_t tb = size_t{1} << target;
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & cb) && !(i & tb)) {
            std::swap(amps[i], amps[i | tb]);
        }
    }
}

void apply_cz(std::span<Amp> amps, uint32_t a, uint32_t b) {
    size_t mask = (size_t{1} << a) | (size_t{1} << b);
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

void apply_crz(std::span<Amp> amps, uint32_t control, uint32_t target, double phi) {
    size_t cb = size_t{1} << control;
    size_t tb = size_t{1} << target;
    Amp d0 = rz_phase(phi, false);
    Amp d1 = rz_phase(phi, true);
    for (size_t i = 0; i < amps.size(); i++) {
        if (i & cb) {
            amps[i] *= (i & tb) ? d1 : d0;
        }
    }
}

void scale(std::span<Amp> amps, Amp factor) {
    for (auto &a : amps) {
        a *= factor;
    }
}

void apply_unitary(std::span<Amp> amps, const Instruction &inst, std::span<const uint32_t> slots) {
    switch (inst.kind) {
        case GateKind::H:
        case GateKind::RY:
            apply_1q(amps, slots[0], matrix_of(inst.kind, inst.angle));
            return;
        case GateKind::X:
            apply_x(amps, slots[0]);
            return;
        case GateKind::RZ:
            apply_diag_1q(amps, slots[0], rz_phase(inst.angle, false), rz_phase(inst.angle, true));
            return;
        case GateKind::GLOBAL_PHASE:
            scale(amps, std::polar(1.0, inst.angle));
            return;
        case GateKind::CX:
            apply_cx(amps, slots[0], slots[1]);
            return;
        case GateKind::CZ:
            apply_cz(amps, slots[0], slots[1]);
            return;
        case GateKind::CRZ:
            apply_crz(amps, slots[0], slots[1], inst.angle);
            return;
        default:
            throw std::invalid_argument(std::string(gate_name(inst.kind)) + " is not a unitary instruction");
    }
}

double probability_of_one(std::span<const Amp> amps, uint32_t slot) {
    size_t bit = size_t{1} << slot;
    double p = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        if (i & bit) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

std::vector<Amp> collapse_remove(std::span<const Amp> amps, uint32_t slot, bool outcome, double prob) {
    std::vector<Amp> out(amps.size() / 2);
    double scale_factor = 1 / std::sqrt(prob);
    size_t low_mask = (size_t{1} << slot) - 1;
    size_t fixed = outcome ? (size_t{1} << slot) : 0;
    for (size_t j = 0; j < out.size(); j++) {
        size_t i = (j & low_mask) | ((j & ~low_mask) << 1) | fixed;
        out[j] = amps[i] * scale_factor;
    }
    return out;
}

std::vector<Amp> collapse_keep(std::span<const Amp> amps, uint32_t slot, bool outcome, double prob) {
    std::vector<Amp> out(amps.size());
    double scale_factor = 1 / std::sqrt(prob);
    size_t bit = size_t{1} << slot;
    for (size_t i = 0; i < amps.size(); i++) {
        if (((i & bit) != 0) == outcome) {
            out[i] = amps[i] * scale_factor;
        }
    }
    return out;
}

std::vector<Amp> insert_slot(std::span<const Amp> amps, uint32_t slot, bool value) {
    std::vector<Amp> out(amps.size() * 2);
    size_t low_mask = (size_t{1} << slot) - 1;
    size_t fixed = value ? (size_t{1} << slot) : 0;
    for (size_t j = 0; j < amps.size(); j++) {
        size_t i = (j & low_mask) | ((j & ~low_mask) << 1) | fixed;
        out[i] = amps[j];
    }
    return out;
}

}  // namespace hwproj::kernels
