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

#include "hwproj/hamming.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "hwproj/angles.h"

namespace hwproj {

namespace {

std::vector<uint32_t> iota(uint32_t start, uint32_t count) {
    std::vector<uint32_t> out(count);
    for (uint32_t i = 0; i < count; i++) {
        out[i] = start + i;
    }
    return out;
}

// Extends block[0] over the rest of the block.
void emit_fanout(
    Circuit &c,
    std::span<const uint32_t> block,
    std::span<const uint32_t> helpers,
    std::span<const uint32_t> helper_cbits,
    FanoutStrategy strategy) {
    size_t s = block.size();
    if (s <= 1) {
        return;
    }
    if (strategy == FanoutStrategy::TREE) {
        size_t filled = 1;
        while (filled < s) {
            size_t count = std::min(filled, s - filled);
            for (size_t i = 0; i < count; i++) {
                c.push(op::cx(block[i], block[filled + i]));
            }
            filled += count;
        }
        return;
    }
    for (size_t i = 1; i < s; i++) {
        c.push(op::h(block[i]));
    }
    // Helper i-1 records the parity of block[i-1] and block[i].
    for (size_t i = 1; i < s; i++) {
        c.push(op::cx(block[i], helpers[i - 1]));
        c.push(op::cx(block[i - 1], helpers[i - 1]));
        c.push(op::measure(helpers[i - 1], helper_cbits[i - 1]));
    }
    for (size_t i = 1; i < s; i++) {
        std::vector<uint32_t> prefix(helper_cbits.begin(), helper_cbits.begin() + i);
        c.push(op::if_parity(std::move(prefix), true, op::x(block[i])));
    }
}

// Level l of the semiclassical inverse QFT: undo the phase of the bits
// already read, then read one more bit in the X basis of the block.
void emit_iqft_level(
    Circuit &c,
    uint32_t level,
    std::span<const uint32_t> block,
    const std::vector<std::vector<uint32_t>> &groups,
    std::span<const uint32_t> out) {
    for (uint32_t i = 1; i < level; i++) {
        c.push(op::if_parity(groups[i - 1], true, op::rz(pi_fraction(-1, int64_t{1} << (level - i)), block[0])));
    }
    for (auto q : block) {
        c.push(op::h(q));
    }
    for (size_t m = 0; m < block.size(); m++) {
        c.push(op::measure(block[m], out[m]));
    }
}

// Controlled phase diag(1, 1, 1, e^(i pi p / q)) from Rz and CRz.
void emit_cphase(Circuit &c, int64_t p, int64_t q, uint32_t a, uint32_t b) {
    c.push(op::gphase(pi_fraction(p, 4 * q)));
    c.push(op::rz(pi_fraction(p, 2 * q), a));
    c.push(op::crz(pi_fraction(p, q), a, b));
}

void emit_dense_iqft(Circuit &c, std::span<const uint32_t> controls, std::span<const uint32_t> out) {
    auto k = static_cast<uint32_t>(controls.size());
    for (uint32_t l = 1; l <= k; l++) {
        uint32_t target = controls[k - l];
        for (uint32_t i = 1; i < l; i++) {
            emit_cphase(c, -1, int64_t{1} << (l - i), controls[k - i], target);
        }
        c.push(op::h(target));
    }
    for (uint32_t l = 1; l <= k; l++) {
        c.push(op::measure(controls[k - l], out[l - 1]));
    }
}

std::vector<std::vector<uint32_t>> singleton_groups(uint32_t k) {
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t l = 0; l < k; l++) {
        out.push_back({l});
    }
    return out;
}

AngleSet angles_for(const HammingParams &params, const BuildOptions &options) {
    auto a = angle_set(params);
    a.betas[0] += options.beta_offset;
    return a;
}

// Shared body of the tradeoff and reset builders. blocks[j-1] encodes C_j,
// helper_blocks[j-1] and helper_cbit_blocks[j-1] serve its fanout.
void emit_encoded_rounds(
    Circuit &c,
    const HammingParams &params,
    const AngleSet &angles,
    const LayoutMap &layout,
    const std::vector<std::vector<uint32_t>> &helper_blocks,
    const std::vector<std::vector<uint32_t>> &helper_cbit_blocks,
    FanoutStrategy strategy,
    bool reuse) {
    uint32_t k = params.k;
    for (uint32_t l = 1; l <= k; l++) {
        uint32_t j = k - l + 1;
        const auto &block = layout.control_blocks[j - 1];
        const auto &helpers = helper_blocks[j - 1];
        if (reuse && l > 1) {
            for (auto q : block) {
                c.push(op::reset(q));
            }
            for (auto q : helpers) {
                c.push(op::reset(q));
            }
        }
        c.push(op::h(block[0]));
        c.push(op::rz(angles.gammas[j - 1], block[0]));
        emit_fanout(c, block, helpers, helper_cbit_blocks[j - 1], strategy);
        for (size_t i = 0; i < layout.data_qubits.size(); i++) {
            c.push(op::crz(angles.betas[j - 1], block[i % block.size()], layout.data_qubits[i]));
        }
        emit_iqft_level(c, l, block, layout.outcome_groups, layout.outcome_groups[l - 1]);
    }
}

}  // namespace

HammingParams derive_params(uint32_t n, uint32_t s) {
    if (n < 1 || n > (uint32_t{1} << 30)) {
        throw std::invalid_argument("n must be in [1, 2^30], got " + std::to_string(n));
    }
    if (s < 1 || s > n) {
        throw std::invalid_argument("s must be in [1, n] = [1, " + std::to_string(n) + "], got " + std::to_string(s));
    }
    HammingParams p;
    p.n = n;
    p.k = static_cast<uint32_t>(std::bit_width(n));
    p.N = (uint32_t{1} << p.k) - 1;
    p.w = p.N - n;
    p.s = s;
    return p;
}

AngleSet angle_set(const HammingParams &params) {
    AngleSet a;
    int64_t m = int64_t{params.N} + 1;
    for (uint32_t j = 1; j <= params.k; j++) {
        int64_t pow = int64_t{1} << (j - 1);
        a.alphas.push_back(pi_fraction(int64_t{params.N} * pow, m));
        a.betas.push_back(pi_fraction(2 * pow, m));
        a.gammas.push_back(pi_fraction(int64_t{params.n} * pow, m));
    }
    return a;
}

std::vector<uint32_t> LayoutMap::control_qubits() const {
    std::vector<uint32_t> out;
    for (const auto &b : control_blocks) {
        out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::ALG1:
            return "alg1";
        case Variant::ALG2:
            return "alg2";
        case Variant::TRADEOFF:
            return "tradeoff";
        case Variant::RESETS:
            return "resets";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (auto v : {Variant::ALG1, Variant::ALG2, Variant::TRADEOFF, Variant::RESETS}) {
        if (variant_name(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

uint64_t HammingCircuit::decode_outcome(std::span<const uint8_t> cbits) const {
    uint64_t a = 0;
    for (size_t l = 0; l < layout.outcome_groups.size(); l++) {
        bool p = false;
        for (auto c : layout.outcome_groups[l]) {
            p ^= cbits[c] != 0;
        }
        a |= uint64_t{p} << l;
    }
    return a;
}

Circuit build_u_y(const HammingParams &params, uint32_t y) {
    if (y > params.N) {
        throw std::invalid_argument("y must be in [0, " + std::to_string(params.N) + "], got " + std::to_string(y));
    }
    int64_t m = int64_t{params.N} + 1;
    Circuit c(params.N, 0);
    c.push(op::gphase(pi_fraction(int64_t{y} * params.N, m)));
    double phi = pi_fraction(2 * int64_t{y}, m);
    for (uint32_t q = 0; q < params.N; q++) {
        c.push(op::rz(phi, q));
    }
    return c;
}

HammingCircuit build_alg1(const HammingParams &params, const BuildOptions &options) {
    uint32_t k = params.k;
    HammingCircuit out{Variant::ALG1, params, Circuit(k + params.N, k), {}};
    auto &layout = out.layout;
    layout.data_qubits = iota(k, params.n);
    layout.padding_qubits = iota(k + params.n, params.w);
    for (uint32_t j = 0; j < k; j++) {
        layout.control_blocks.push_back({j});
    }
    layout.outcome_groups = singleton_groups(k);

    auto angles = angles_for(params, options);
    auto &c = out.circuit;
    auto controls = iota(0, k);
    for (auto q : controls) {
        c.push(op::h(q));
    }
    int64_t m = int64_t{params.N} + 1;
    for (uint32_t j = 1; j <= k; j++) {
        // Controlled U_(2^(j-1)): the alpha rotation plus its phase cancel the
        // -N beta_j / 2 offset of the targets on the |1> branch.
        c.push(op::gphase(pi_fraction(int64_t{params.N} << (j - 1), 2 * m)));
        c.push(op::rz(angles.alphas[j - 1], j - 1));
        for (uint32_t t = k; t < k + params.N; t++) {
            c.push(op::crz(angles.betas[j - 1], j - 1, t));
        }
    }
    emit_dense_iqft(c, controls, iota(0, k));
    return out;
}

HammingCircuit build_alg2(const HammingParams &params, const BuildOptions &options) {
    uint32_t k = params.k;
    HammingCircuit out{Variant::ALG2, params, Circuit(k + params.n, k), {}};
    auto &layout = out.layout;
    layout.data_qubits = iota(k, params.n);
    for (uint32_t j = 0; j < k; j++) {
        layout.control_blocks.push_back({j});
    }
    layout.outcome_groups = singleton_groups(k);

    auto angles = angles_for(params, options);
    auto &c = out.circuit;
    auto controls = iota(0, k);
    for (auto q : controls) {
        c.push(op::h(q));
    }
    for (uint32_t j = 1; j <= k; j++) {
        c.push(op::rz(angles.gammas[j - 1], j - 1));
        for (auto t : layout.data_qubits) {
            c.push(op::crz(angles.betas[j - 1], j - 1, t));
        }
    }
    emit_dense_iqft(c, controls, iota(0, k));
    return out;
}

Circuit build_fanout(uint32_t s, FanoutStrategy strategy) {
    if (s == 0) {
        throw std::invalid_argument("fanout width must be at least 1");
    }
    bool mb = strategy == FanoutStrategy::MEASUREMENT_BASED;
    Circuit c(mb ? 2 * s - 1 : s, mb ? s - 1 : 0);
    auto block = iota(0, s);
    emit_fanout(c, block, iota(s, s - 1), iota(0, s - 1), strategy);
    return c;
}

Circuit build_dense_iqft(uint32_t k) {
    if (k == 0) {
        throw std::invalid_argument("IQFT needs at least one qubit");
    }
    Circuit c(k, k);
    emit_dense_iqft(c, iota(0, k), iota(0, k));
    return c;
}

Circuit build_semiclassical_iqft(uint32_t k, uint32_t s) {
    if (k == 0 || s == 0) {
        throw std::invalid_argument("semiclassical IQFT needs k >= 1 and s >= 1");
    }
    Circuit c(k * s, k * s);
    std::vector<std::vector<uint32_t>> groups;
    for (uint32_t l = 0; l < k; l++) {
        groups.push_back(iota(l * s, s));
    }
    for (uint32_t l = 1; l <= k; l++) {
        uint32_t j = k - l + 1;
        emit_iqft_level(c, l, iota((j - 1) * s, s), groups, groups[l - 1]);
    }
    return c;
}

HammingCircuit build_alg2_tradeoff(const HammingParams &params, const BuildOptions &options) {
    uint32_t k = params.k, s = params.s, n = params.n;
    bool mb = options.fanout == FanoutStrategy::MEASUREMENT_BASED;
    uint32_t hs = mb ? s - 1 : 0;
    HammingCircuit out{Variant::TRADEOFF, params, Circuit(k * s + n + k * hs, k * s + k * hs), {}};
    auto &layout = out.layout;
    layout.data_qubits = iota(k * s, n);
    std::vector<std::vector<uint32_t>> helper_blocks, helper_cbit_blocks;
    for (uint32_t j = 0; j < k; j++) {
        layout.control_blocks.push_back(iota(j * s, s));
        layout.outcome_groups.push_back(iota(j * s, s));
        helper_blocks.push_back(iota(k * s + n + j * hs, hs));
        helper_cbit_blocks.push_back(iota(k * s + j * hs, hs));
    }
    layout.helper_qubits = iota(k * s + n, k * hs);
    layout.helper_cbits = iota(k * s, k * hs);
    emit_encoded_rounds(
        out.circuit, params, angles_for(params, options), layout, helper_blocks, helper_cbit_blocks, options.fanout,
        false);
    return out;
}

HammingCircuit build_alg2_resets(const HammingParams &params, const BuildOptions &options) {
    uint32_t k = params.k, s = params.s, n = params.n;
    bool mb = options.fanout == FanoutStrategy::MEASUREMENT_BASED;
    uint32_t hs = mb ? s - 1 : 0;
    HammingCircuit out{Variant::RESETS, params, Circuit(s + n + hs, k * s + k * hs), {}};
    auto &layout = out.layout;
    layout.data_qubits = iota(s, n);
    layout.helper_qubits = iota(s + n, hs);
    layout.helper_cbits = iota(k * s, k * hs);
    std::vector<std::vector<uint32_t>> helper_blocks, helper_cbit_blocks;
    for (uint32_t j = 0; j < k; j++) {
        layout.control_blocks.push_back(iota(0, s));
        layout.outcome_groups.push_back(iota(j * s, s));
        helper_blocks.push_back(layout.helper_qubits);
        // Rounds run j = k..1; round l writes the l-th slice of helper cbits.
        helper_cbit_blocks.push_back(iota(k * s + (k - 1 - j) * hs, hs));
    }
    emit_encoded_rounds(
        out.circuit, params, angles_for(params, options), layout, helper_blocks, helper_cbit_blocks, options.fanout,
        true);
    return out;
}

HammingCircuit build_variant(Variant variant, const HammingParams &params, const BuildOptions &options) {
    switch (variant) {
        case Variant::ALG1:
            return build_alg1(params, options);
        case Variant::ALG2:
            return build_alg2(params, options);
        case Variant::TRADEOFF:
            return build_alg2_tradeoff(params, options);
        case Variant::RESETS:
            return build_alg2_resets(params, options);
    }
    throw std::invalid_argument("unknown variant");
}

}  // namespace hwproj
