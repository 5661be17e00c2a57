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

#ifndef HWPROJ_HAMMING_H
#define HWPROJ_HAMMING_H

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hwproj/circuit.h"

namespace hwproj {

/// n data qubits, k = ceil(log2(n + 1)) control qubits, w = 2^k - (n + 1)
/// padding qubits, N = 2^k - 1, and fanout width s.
struct HammingParams {
    uint32_t n = 1;
    uint32_t k = 1;
    uint32_t w = 0;
    uint32_t N = 1;
    uint32_t s = 1;

    bool operator==(const HammingParams &) const = default;
};

/// Throws std::invalid_argument unless n >= 1 and 1 <= s <= n.
HammingParams derive_params(uint32_t n, uint32_t s = 1);

/// Rotation angles indexed by j - 1 for j = 1..k:
///   alphas[j-1] = pi N 2^(j-1) / (N+1)
///   betas[j-1]  = 2 pi 2^(j-1) / (N+1)
///   gammas[j-1] = n pi 2^(j-1) / (N+1)
struct AngleSet {
    std::vector<double> alphas;
    std::vector<double> betas;
    std::vector<double> gammas;
};

AngleSet angle_set(const HammingParams &params);

/// Where every role lives in a built circuit.
///
/// control_blocks[j-1] holds the qubits encoding control C_j (weight 2^(j-1)).
/// Outcome bit a_l (weight 2^(l-1)) is the parity of outcome_groups[l-1].
/// With resets, every round reuses the same block, so all control_blocks alias.
struct LayoutMap {
    std::vector<uint32_t> data_qubits;
    std::vector<uint32_t> padding_qubits;
    std::vector<std::vector<uint32_t>> control_blocks;
    std::vector<uint32_t> helper_qubits;
    std::vector<std::vector<uint32_t>> outcome_groups;
    std::vector<uint32_t> helper_cbits;

    /// Distinct physical control qubits.
    std::vector<uint32_t> control_qubits() const;
};

enum class Variant : uint8_t { ALG1, ALG2, TRADEOFF, RESETS };

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

enum class FanoutStrategy : uint8_t { TREE, MEASUREMENT_BASED };

struct BuildOptions {
    FanoutStrategy fanout = FanoutStrategy::MEASUREMENT_BASED;
    /// Added to beta_1. Only useful for negative controls.
    double beta_offset = 0;
};

struct HammingCircuit {
    Variant variant = Variant::ALG2;
    HammingParams params;
    Circuit circuit;
    LayoutMap layout;

    /// Integer sum of parity(outcome_groups[l]) * 2^l.
    uint64_t decode_outcome(std::span<const uint8_t> cbits) const;
};

/// U_y = e^(i pi y N/(N+1)) Rz(2 pi y/(N+1))^(x)N on N qubits, 0 <= y <= N.
Circuit build_u_y(const HammingParams &params, uint32_t y);

/// Width-optimal circuit with zero padding: qubits are k controls, n data,
/// w padding; controlled-U_(2^(j-1)) realized exactly, dense inverse QFT.
HammingCircuit build_alg1(const HammingParams &params, const BuildOptions &options = {});

/// k controls then n data, Rz(gamma_j) on C_j instead of padding, dense
/// inverse QFT.
HammingCircuit build_alg2(const HammingParams &params, const BuildOptions &options = {});

/// Extends qubit 0 to the repetition block 0..s-1. Fresh ancillas 1..s-1 must
/// start in |0>. The measurement-based strategy also uses helper qubits
/// s..2s-2 (in |0>) and cbits 0..s-2.
Circuit build_fanout(uint32_t s, FanoutStrategy strategy);

/// Dense inverse QFT on k qubits followed by measurement. Qubit j-1 carries
/// weight 2^(j-1); cbit l-1 receives outcome bit a_l.
Circuit build_dense_iqft(uint32_t k);

/// Semiclassical encoded inverse QFT on k blocks of s qubits. Block j-1
/// (qubits (j-1)s..js-1) encodes C_j; cbits (l-1)s..ls-1 receive the block
/// measured at level l, whose parity is a_l.
Circuit build_semiclassical_iqft(uint32_t k, uint32_t s);

/// k separate blocks of s control qubits with fanout and semiclassical IQFT.
HammingCircuit build_alg2_tradeoff(const HammingParams &params, const BuildOptions &options = {});

/// One block of s control qubits reset and reused for each of the k rounds.
HammingCircuit build_alg2_resets(const HammingParams &params, const BuildOptions &options = {});

HammingCircuit build_variant(Variant variant, const HammingParams &params, const BuildOptions &options = {});

}  // namespace hwproj

#endif
