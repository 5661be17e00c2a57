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

#include "hwproj/scheduler.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hwproj {

namespace {

Schedule layer_unchecked(const Circuit &circuit) {
    Schedule sch;
    const auto &instrs = circuit.instructions;
    sch.layer_of.assign(instrs.size(), std::nullopt);
    std::vector<size_t> qfree(circuit.num_qubits, 0);
    std::vector<int64_t> last_on(circuit.num_qubits, -1);
    std::vector<int64_t> written(circuit.num_cbits, -1);
    std::vector<int64_t> read(circuit.num_cbits, -1);

    auto place = [&](size_t i, size_t layer) {
        if (sch.layers.size() <= layer) {
            sch.layers.resize(layer + 1);
        }
        sch.layers[layer].push_back(i);
        sch.layer_of[i] = layer;
    };

    for (size_t i = 0; i < instrs.size(); i++) {
        const auto &inst = instrs[i];
        if (inst.kind == GateKind::GLOBAL_PHASE) {
            sch.zero_depth.push_back(i);
            continue;
        }
        if (inst.kind == GateKind::BARRIER) {
            std::vector<uint32_t> qs = inst.qubits;
            if (qs.empty()) {
                for (uint32_t q = 0; q < circuit.num_qubits; q++) {
                    qs.push_back(q);
                }
            }
            size_t m = 0;
            for (auto q : qs) {
                m = std::max(m, qfree[q]);
            }
            for (auto q : qs) {
                qfree[q] = m;
                last_on[q] = -1;
            }
            sch.zero_depth.push_back(i);
            continue;
        }

        if (inst.kind == GateKind::RZ && inst.condition.has_value()) {
            int64_t j = last_on[inst.qubits[0]];
            if (j >= 0 && instrs[j].kind == GateKind::RZ && instrs[j].condition.has_value()) {
                auto layer = static_cast<int64_t>(*sch.layer_of[j]);
                bool ready = std::all_of(inst.condition->cbits.begin(), inst.condition->cbits.end(), [&](uint32_t c) {
                    return written[c] < layer;
                });
                if (ready) {
                    place(i, static_cast<size_t>(layer));
                    for (auto c : inst.condition->cbits) {
                        read[c] = std::max(read[c], layer);
                    }
                    last_on[inst.qubits[0]] = static_cast<int64_t>(i);
                    continue;
                }
            }
        }

        int64_t layer = 0;
        for (auto q : inst.qubits) {
            layer = std::max(layer, static_cast<int64_t>(qfree[q]));
        }
        if (inst.condition.has_value()) {
            for (auto c : inst.condition->cbits) {
                layer = std::max(layer, written[c] + 1);
            }
        }
        if (inst.kind == GateKind::MEASURE) {
            layer = std::max({layer, written[inst.cbit] + 1, read[inst.cbit] + 1});
        }
        place(i, static_cast<size_t>(layer));
        for (auto q : inst.qubits) {
            qfree[q] = static_cast<size_t>(layer) + 1;
            last_on[q] = static_cast<int64_t>(i);
        }
        if (inst.condition.has_value()) {
            for (auto c : inst.condition->cbits) {
                read[c] = std::max(read[c], layer);
            }
        }
        if (inst.kind == GateKind::MEASURE) {
            written[inst.cbit] = layer;
        }
    }
    return sch;
}

}  // namespace

Schedule layer_circuit(const Circuit &circuit) {
    circuit.validate();
    return layer_unchecked(circuit);
}

size_t stage_depth(const Circuit &circuit, const std::function<bool(const Instruction &)> &keep) {
    Circuit sub(circuit.num_qubits, circuit.num_cbits);
    for (const auto &inst : circuit.instructions) {
        if (keep(inst)) {
            sub.instructions.push_back(inst);
        }
    }
    // The filtered circuit may read cbits whose measurements were dropped,
    // so it skips the read-before-write check.
    return layer_unchecked(sub).depth();
}

Circuit reorder_by_layers(const Circuit &circuit, const Schedule &schedule) {
    // Zero-depth instructions follow the layer of the last layered
    // instruction before them.
    std::vector<std::vector<size_t>> after(schedule.layers.size() + 1);
    int64_t anchor = -1;
    for (size_t i = 0; i < circuit.instructions.size(); i++) {
        if (schedule.layer_of[i].has_value()) {
            anchor = std::max(anchor, static_cast<int64_t>(*schedule.layer_of[i]));
        } else {
            after[static_cast<size_t>(anchor + 1)].push_back(i);
        }
    }
    Circuit out(circuit.num_qubits, circuit.num_cbits);
    for (auto i : after[0]) {
        out.instructions.push_back(circuit.instructions[i]);
    }
    for (size_t l = 0; l < schedule.layers.size(); l++) {
        for (auto i : schedule.layers[l]) {
            out.instructions.push_back(circuit.instructions[i]);
        }
        for (auto i : after[l + 1]) {
            out.instructions.push_back(circuit.instructions[i]);
        }
    }
    return out;
}

ResourceReport measure_resources(const Circuit &circuit, const LayoutMap &layout) {
    ResourceReport r;
    r.quantum_depth = layer_circuit(circuit).depth();
    r.total_qubits = circuit.num_qubits;
    r.control_qubits = static_cast<uint32_t>(layout.control_qubits().size());
    r.block_width = layout.control_blocks.empty() ? 0 : static_cast<uint32_t>(layout.control_blocks[0].size());
    r.data_qubits = static_cast<uint32_t>(layout.data_qubits.size());
    r.padding_qubits = static_cast<uint32_t>(layout.padding_qubits.size());
    r.helper_qubits = static_cast<uint32_t>(layout.helper_qubits.size());
    for (const auto &inst : circuit.instructions) {
        switch (inst.kind) {
            case GateKind::CX:
            case GateKind::CZ:
            case GateKind::CRZ:
                r.two_qubit_gate_count++;
                break;
            case GateKind::MEASURE:
                r.measurement_count++;
                break;
            case GateKind::RESET:
                r.reset_count++;
                break;
            default:
                break;
        }
        if (inst.condition.has_value()) {
            r.classically_controlled_count++;
        }
    }
    return r;
}

ResourceReport measure_resources(const HammingCircuit &hc) {
    return measure_resources(hc.circuit, hc.layout);
}

uint32_t SPolicy::for_n(uint32_t n) const {
    uint32_t s = 1;
    switch (kind) {
        case Kind::ONE:
            s = 1;
            break;
        case Kind::ALL:
            s = n;
            break;
        case Kind::HALF:
            s = n / 2;
            break;
        case Kind::FIXED:
            s = value;
            break;
    }
    return std::clamp<uint32_t>(s, 1, std::max<uint32_t>(n, 1));
}

std::string SPolicy::str() const {
    switch (kind) {
        case Kind::ONE:
            return "1";
        case Kind::ALL:
            return "n";
        case Kind::HALF:
            return "n/2";
        case Kind::FIXED:
            return std::to_string(value);
    }
    return "?";
}

std::optional<SPolicy> parse_s_policy(std::string_view text) {
    if (text == "1") {
        return SPolicy{SPolicy::Kind::ONE, 1};
    }
    if (text == "n") {
        return SPolicy{SPolicy::Kind::ALL, 0};
    }
    if (text == "n/2") {
        return SPolicy{SPolicy::Kind::HALF, 0};
    }
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
        return std::nullopt;
    }
    return SPolicy{SPolicy::Kind::FIXED, v};
}

double ScalingRow::depth_per_log() const {
    return static_cast<double>(report.quantum_depth) / k;
}

double ScalingRow::depth_per_nlog() const {
    return static_cast<double>(report.quantum_depth) / (static_cast<double>(n) * k);
}

std::vector<ScalingRow> predicted_scaling(const std::vector<uint32_t> &ns, const SPolicy &policy) {
    std::vector<ScalingRow> rows;
    for (auto n : ns) {
        auto params = derive_params(n, policy.for_n(n));
        auto hc = build_alg2_resets(params);
        rows.push_back({n, params.s, params.k, measure_resources(hc)});
    }
    return rows;
}

}  // namespace hwproj
