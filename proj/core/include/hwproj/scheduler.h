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

#ifndef HWPROJ_SCHEDULER_H
#define HWPROJ_SCHEDULER_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hwproj/circuit.h"
#include "hwproj/hamming.h"

namespace hwproj {

/// Greedy as-soon-as-possible layering.
///
/// Every unitary gate, measurement and reset takes one layer; GlobalPhase
/// and Barrier take none. A classically controlled instruction goes strictly
/// after the layer of the last measurement writing a cbit it reads, and a
/// measurement goes strictly after any earlier reader or writer of its cbit.
/// A Barrier lines up the next free layer of its qubits (all qubits when
/// empty).
///
/// Consecutive classically controlled Rz gates on one qubit share a layer:
/// they compose into a single rotation whose angle is a classical function
/// of the cbits read, so they cost one layer of quantum depth.
struct Schedule {
    std::vector<std::vector<size_t>> layers;
    /// Instructions that occupy no layer, in program order.
    std::vector<size_t> zero_depth;
    /// Layer of each instruction; nullopt for zero-depth ones.
    std::vector<std::optional<size_t>> layer_of;

    size_t depth() const {
        return layers.size();
    }
};

Schedule layer_circuit(const Circuit &circuit);

/// Layer count of the sub-circuit made of the instructions matching `keep`.
size_t stage_depth(const Circuit &circuit, const std::function<bool(const Instruction &)> &keep);

/// The circuit's instructions in layer order (program order within a layer,
/// zero-depth instructions kept where they were relative to their layer
/// neighbours).
Circuit reorder_by_layers(const Circuit &circuit, const Schedule &schedule);

struct ResourceReport {
    size_t quantum_depth = 0;
    uint32_t total_qubits = 0;
    /// Distinct physical control qubits.
    uint32_t control_qubits = 0;
    /// Qubits per control block (s).
    uint32_t block_width = 0;
    uint32_t data_qubits = 0;
    uint32_t padding_qubits = 0;
    uint32_t helper_qubits = 0;
    size_t two_qubit_gate_count = 0;
    size_t measurement_count = 0;
    size_t reset_count = 0;
    size_t classically_controlled_count = 0;
};

ResourceReport measure_resources(const Circuit &circuit, const LayoutMap &layout);
ResourceReport measure_resources(const HammingCircuit &hc);

/// How the fanout width follows n in a scaling sweep.
struct SPolicy {
    enum class Kind : uint8_t { ONE, ALL, HALF, FIXED } kind = Kind::ALL;
    uint32_t value = 1;

    /// s for a given n, clamped to [1, n].
    uint32_t for_n(uint32_t n) const;
    std::string str() const;
};

/// Parses `1`, `n`, `n/2` or a positive integer.
std::optional<SPolicy> parse_s_policy(std::string_view text);

struct ScalingRow {
    uint32_t n;
    uint32_t s;
    uint32_t k;
    ResourceReport report;

    /// depth / k
    double depth_per_log() const;
    /// depth / (n k)
    double depth_per_nlog() const;
};

/// Builds the reset-reuse circuit for each n and reports its resources.
std::vector<ScalingRow> predicted_scaling(const std::vector<uint32_t> &ns, const SPolicy &policy);

}  // namespace hwproj

#endif
