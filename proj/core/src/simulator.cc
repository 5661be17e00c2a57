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

#include "hwproj/simulator.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "kernels.h"

namespace hwproj {

namespace {

void check_qubit(const StateVector &state, uint32_t q) {
    if (q >= state.num_qubits()) {
        throw std::invalid_argument(
            "qubit " + std::to_string(q) + " out of range for a " + std::to_string(state.num_qubits()) +
            "-qubit state");
    }
}

std::pair<double, double> outcome_probabilities(std::span<const Amp> amps, uint32_t slot) {
    double p1 = kernels::probability_of_one(amps, slot);
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return {std::max(0.0, total - p1), p1};
}

// ---------------------------------------------------------------------------
// Frame operations.

constexpr uint32_t kNoSlot = UINT32_MAX;

uint32_t slot_of(const QubitFrame &f, uint32_t q) {
    auto it = std::lower_bound(f.active.begin(), f.active.end(), q);
    if (it != f.active.end() && *it == q) {
        return static_cast<uint32_t>(it - f.active.begin());
    }
    return kNoSlot;
}

uint32_t materialize(QubitFrame &f, uint32_t q, uint32_t cap) {
    auto it = std::lower_bound(f.active.begin(), f.active.end(), q);
    auto pos = static_cast<uint32_t>(it - f.active.begin());
    if (it != f.active.end() && *it == q) {
        return pos;
    }
    if (f.active.size() + 1 > cap) {
        throw CapacityError(
            "execution needs more than " + std::to_string(cap) + " simultaneously simulated qubits");
    }
    auto amps = kernels::insert_slot(f.state.amps(), pos, f.classical[q] != 0);
    f.active.insert(it, q);
    f.state = StateVector(static_cast<uint32_t>(f.active.size()), std::move(amps));
    return pos;
}

void collapse(QubitFrame &f, uint32_t q, bool bit, double prob) {
    uint32_t s = slot_of(f, q);
    auto amps = kernels::collapse_remove(f.state.amps(), s, bit, prob);
    f.active.erase(f.active.begin() + s);
    f.state = StateVector::normalized(static_cast<uint32_t>(f.active.size()), std::move(amps));
    f.classical[q] = bit;
}

std::pair<double, double> frame_outcome_probabilities(const QubitFrame &f, uint32_t q) {
    uint32_t s = slot_of(f, q);
    if (s == kNoSlot) {
        return f.classical[q] ? std::pair{0.0, 1.0} : std::pair{1.0, 0.0};
    }
    return outcome_probabilities(f.state.amps(), s);
}

void phase(QubitFrame &f, Amp factor) {
    kernels::scale(f.state.raw(), factor);
}

// Applies a one-qubit gate, keeping classical qubits classical when the gate
// maps basis states to basis states.
void apply_single(QubitFrame &f, const Instruction &inst, uint32_t q, uint32_t cap) {
    uint32_t s = slot_of(f, q);
    if (s == kNoSlot) {
        if (inst.kind == GateKind::X) {
            f.classical[q] ^= 1;
            return;
        }
        if (inst.kind == GateKind::RZ) {
            phase(f, kernels::rz_phase(inst.angle, f.classical[q] != 0));
            return;
        }
        s = materialize(f, q, cap);
    }
    uint32_t slots[1] = {s};
    Instruction single = inst;
    single.qubits = {q};
    kernels::apply_unitary(f.state.raw(), single, slots);
}

void apply_unitary_frame(QubitFrame &f, const Instruction &inst, uint32_t cap) {
    switch (inst.kind) {
        case GateKind::GLOBAL_PHASE:
            phase(f, std::polar(1.0, inst.angle));
            return;
        case GateKind::H:
        case GateKind::X:
        case GateKind::RY:
        case GateKind::RZ:
            apply_single(f, inst, inst.qubits[0], cap);
            return;
        case GateKind::CX: {
            uint32_t c = inst.qubits[0], t = inst.qubits[1];
            if (!f.is_active(c)) {
                if (f.classical[c]) {
                    apply_single(f, op::x(t), t, cap);
                }
                return;
            }
            uint32_t ts = materialize(f, t, cap);
            kernels::apply_cx(f.state.raw(), slot_of(f, c), ts);
            return;
        }
        case GateKind::CZ: {
            uint32_t a = inst.qubits[0], b = inst.qubits[1];
            if (!f.is_active(a) || !f.is_active(b)) {
                uint32_t known = f.is_active(a) ? b : a;
                uint32_t other = known == a ? b : a;
                if (f.classical[known]) {
                    if (!f.is_active(other)) {
                        if (f.classical[other]) {
                            phase(f, -1.0);
                        }
                    } else {
                        kernels::apply_diag_1q(f.state.raw(), slot_of(f, other), 1.0, -1.0);
                    }
                }
                return;
            }
            kernels::apply_cz(f.state.raw(), slot_of(f, a), slot_of(f, b));
            return;
        }
        case GateKind::CRZ: {
            uint32_t c = inst.qubits[0], t = inst.qubits[1];
            if (!f.is_active(c)) {
                if (f.classical[c]) {
                    apply_single(f, op::rz(inst.angle, t), t, cap);
                }
                return;
            }
            uint32_t ts = materialize(f, t, cap);
            kernels::apply_crz(f.state.raw(), slot_of(f, c), ts, inst.angle);
            return;
        }
        default:
            throw std::invalid_argument(std::string(gate_name(inst.kind)) + " is not a unitary instruction");
    }
}

// ---------------------------------------------------------------------------
// Liveness tables for branch coalescing.

struct Liveness {
    std::vector<std::vector<uint32_t>> groups;
    // Indexed by instruction position i; describes what is read after i.
    std::vector<std::vector<uint32_t>> live_groups_after;
    std::vector<std::vector<uint32_t>> needed_qubits_after;

    explicit Liveness(const Circuit &circuit) {
        std::map<std::vector<uint32_t>, uint32_t> group_ids;
        std::vector<int32_t> group_of(circuit.instructions.size(), -1);
        for (size_t i = 0; i < circuit.instructions.size(); i++) {
            const auto &inst = circuit.instructions[i];
            if (!inst.condition.has_value()) {
                continue;
            }
            auto key = inst.condition->cbits;
            std::sort(key.begin(), key.end());
            auto [it, inserted] = group_ids.emplace(key, static_cast<uint32_t>(groups.size()));
            if (inserted) {
                groups.push_back(key);
            }
            group_of[i] = static_cast<int32_t>(it->second);
        }

        size_t n = circuit.instructions.size();
        live_groups_after.resize(n);
        needed_qubits_after.resize(n);
        std::vector<bool> live(groups.size(), false);
        enum class Next : uint8_t { NONE, RESET, USE };
        std::vector<Next> next(circuit.num_qubits, Next::NONE);
        for (size_t i = n; i-- > 0;) {
            for (uint32_t g = 0; g < live.size(); g++) {
                if (live[g]) {
                    live_groups_after[i].push_back(g);
                }
            }
            for (uint32_t q = 0; q < circuit.num_qubits; q++) {
                if (next[q] == Next::USE) {
                    needed_qubits_after[i].push_back(q);
                }
            }
            const auto &inst = circuit.instructions[i];
            if (group_of[i] >= 0) {
                live[group_of[i]] = true;
            }
            if (inst.kind == GateKind::BARRIER) {
                continue;
            }
            for (auto q : inst.qubits) {
                next[q] = inst.kind == GateKind::RESET ? Next::RESET : Next::USE;
            }
        }
    }
};

bool parity_of(std::span<const uint8_t> bits, std::span<const uint32_t> group) {
    bool p = false;
    for (auto c : group) {
        p ^= bits[c] != 0;
    }
    return p;
}

bool same_up_to_phase(const StateVector &a, const StateVector &b, double tol) {
    Amp inner = 0;
    for (size_t i = 0; i < a.size(); i++) {
        inner += std::conj(a[i]) * b[i];
    }
    double mag = std::abs(inner);
    if (mag < 0.5) {
        return false;
    }
    Amp rot = inner / mag;
    for (size_t i = 0; i < a.size(); i++) {
        if (std::abs(a[i] * rot - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

void coalesce(std::vector<Branch> &branches, const Liveness &live, size_t index, const RunOptions &options) {
    if (branches.size() < 2) {
        return;
    }
    std::map<std::vector<uint64_t>, std::vector<size_t>> buckets;
    std::vector<Branch> out;
    out.reserve(branches.size());
    for (auto &b : branches) {
        std::vector<uint64_t> key;
        key.push_back(b.frame.active.size());
        key.insert(key.end(), b.frame.active.begin(), b.frame.active.end());
        for (auto g : live.live_groups_after[index]) {
            key.push_back(parity_of(b.cbits, live.groups[g]));
        }
        for (const auto &g : options.observables) {
            key.push_back(parity_of(b.cbits, g));
        }
        for (auto q : live.needed_qubits_after[index]) {
            if (!b.frame.is_active(q)) {
                key.push_back(uint64_t{2} + b.frame.classical[q]);
            }
        }
        auto &reps = buckets[key];
        bool merged = false;
        for (auto r : reps) {
            if (same_up_to_phase(out[r].frame.state, b.frame.state, 1e-10)) {
                out[r].probability += b.probability;
                merged = true;
                break;
            }
        }
        if (!merged) {
            reps.push_back(out.size());
            out.push_back(std::move(b));
        }
    }
    branches = std::move(out);
}

void check_input(const Circuit &circuit, const QubitFrame &input) {
    circuit.validate();
    if (input.num_qubits != circuit.num_qubits || input.classical.size() != circuit.num_qubits) {
        throw std::invalid_argument(
            "input frame covers " + std::to_string(input.num_qubits) + " qubits but the circuit has " +
            std::to_string(circuit.num_qubits));
    }
}

}  // namespace

// ---------------------------------------------------------------------------

void apply_instruction(StateVector &state, const Instruction &inst, std::span<const uint8_t> cbits) {
    if (!inst.is_unitary()) {
        throw std::invalid_argument(std::string(gate_name(inst.kind)) + " is not a unitary instruction");
    }
    validate_instruction(inst, state.num_qubits(), static_cast<uint32_t>(cbits.size()));
    if (inst.condition.has_value() && !inst.condition->holds(cbits)) {
        return;
    }
    kernels::apply_unitary(state.raw(), inst, inst.qubits);
}

std::vector<MeasureResult> measure_branches(const StateVector &state, uint32_t q, double prune_below) {
    check_qubit(state, q);
    auto [p0, p1] = outcome_probabilities(state.amps(), q);
    if (p0 < kDefaultPruneBelow && p1 < kDefaultPruneBelow) {
        throw std::domain_error("both measurement outcomes have vanishing probability; state is corrupted");
    }
    std::vector<MeasureResult> out;
    for (bool bit : {false, true}) {
        double p = bit ? p1 : p0;
        if (p < prune_below || p <= 0) {
            continue;
        }
        auto amps = kernels::collapse_keep(state.amps(), q, bit, p);
        out.push_back({bit, p, StateVector::normalized(state.num_qubits(), std::move(amps))});
    }
    return out;
}

MeasureResult measure_qubit(const StateVector &state, uint32_t q, Rng &rng) {
    check_qubit(state, q);
    auto [p0, p1] = outcome_probabilities(state.amps(), q);
    if (p0 < kDefaultPruneBelow && p1 < kDefaultPruneBelow) {
        throw std::domain_error("both measurement outcomes have vanishing probability; state is corrupted");
    }
    bool bit = rng.uniform() * (p0 + p1) >= p0;
    double p = bit ? p1 : p0;
    auto amps = kernels::collapse_keep(state.amps(), q, bit, p);
    return {bit, p, StateVector::normalized(state.num_qubits(), std::move(amps))};
}

MeasureResult reset_qubit(const StateVector &state, uint32_t q, Rng &rng) {
    auto r = measure_qubit(state, q, rng);
    if (r.outcome) {
        kernels::apply_x(r.post.raw(), q);
    }
    return r;
}

std::vector<MeasureResult> reset_branches(const StateVector &state, uint32_t q, double prune_below) {
    auto out = measure_branches(state, q, prune_below);
    for (auto &r : out) {
        if (r.outcome) {
            kernels::apply_x(r.post.raw(), q);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

QubitFrame QubitFrame::from_state(const StateVector &state) {
    QubitFrame f;
    f.num_qubits = state.num_qubits();
    f.active.resize(f.num_qubits);
    for (uint32_t q = 0; q < f.num_qubits; q++) {
        f.active[q] = q;
    }
    f.state = state;
    f.classical.assign(f.num_qubits, 0);
    return f;
}

QubitFrame QubitFrame::embed(const StateVector &sub, std::span<const uint32_t> qubits, uint32_t num_qubits) {
    if (qubits.size() != sub.num_qubits()) {
        throw std::invalid_argument("embed: qubit list does not match the state size");
    }
    QubitFrame f;
    f.num_qubits = num_qubits;
    f.active.assign(qubits.begin(), qubits.end());
    std::sort(f.active.begin(), f.active.end());
    if (std::adjacent_find(f.active.begin(), f.active.end()) != f.active.end()) {
        throw std::invalid_argument("embed: duplicate qubit");
    }
    if (!f.active.empty() && f.active.back() >= num_qubits) {
        throw std::invalid_argument("embed: qubit index out of range");
    }
    std::vector<uint32_t> pos(qubits.size());
    for (size_t i = 0; i < qubits.size(); i++) {
        pos[i] = static_cast<uint32_t>(std::lower_bound(f.active.begin(), f.active.end(), qubits[i]) - f.active.begin());
    }
    std::vector<Amp> amps(sub.size());
    for (size_t j = 0; j < sub.size(); j++) {
        size_t idx = 0;
        for (size_t i = 0; i < qubits.size(); i++) {
            idx |= ((j >> i) & 1) << pos[i];
        }
        amps[idx] = sub[j];
    }
    f.state = StateVector(sub.num_qubits(), std::move(amps));
    f.classical.assign(num_qubits, 0);
    return f;
}

bool QubitFrame::is_active(uint32_t q) const {
    return std::binary_search(active.begin(), active.end(), q);
}

StateVector QubitFrame::expand() const {
    if (num_qubits > 30) {
        throw CapacityError("cannot expand a frame of " + std::to_string(num_qubits) + " qubits");
    }
    size_t fixed = 0;
    for (uint32_t q = 0; q < num_qubits; q++) {
        if (!is_active(q) && classical[q]) {
            fixed |= size_t{1} << q;
        }
    }
    std::vector<Amp> amps(size_t{1} << num_qubits);
    for (size_t j = 0; j < state.size(); j++) {
        size_t idx = fixed;
        for (size_t i = 0; i < active.size(); i++) {
            idx |= ((j >> i) & 1) << active[i];
        }
        amps[idx] = state[j];
    }
    return StateVector(num_qubits, std::move(amps));
}

StateVector QubitFrame::extract(std::span<const uint32_t> qubits, double tol) const {
    // For each active amplitude: index within `qubits`, and the pattern of the
    // active qubits that are not requested.
    std::vector<int32_t> want(active.size(), -1);
    size_t fixed_out = 0;
    for (size_t i = 0; i < qubits.size(); i++) {
        uint32_t q = qubits[i];
        if (q >= num_qubits) {
            throw std::invalid_argument("extract: qubit index out of range");
        }
        uint32_t s = slot_of(*this, q);
        if (s == kNoSlot) {
            fixed_out |= size_t{classical[q]} << i;
        } else {
            want[s] = static_cast<int32_t>(i);
        }
    }
    auto rest_of = [&](size_t j) {
        size_t r = 0;
        size_t k = 0;
        for (size_t s = 0; s < active.size(); s++) {
            if (want[s] < 0) {
                r |= ((j >> s) & 1) << k++;
            }
        }
        return r;
    };
    std::map<size_t, double> weight;
    for (size_t j = 0; j < state.size(); j++) {
        weight[rest_of(j)] += std::norm(state[j]);
    }
    auto best = std::max_element(
        weight.begin(), weight.end(), [](const auto &a, const auto &b) { return a.second < b.second; });
    double outside = 0;
    for (const auto &[k, w] : weight) {
        if (k != best->first) {
            outside += w;
        }
    }
    if (outside > tol) {
        throw std::domain_error("extract: requested qubits are entangled with the rest of the register");
    }
    std::vector<Amp> amps(size_t{1} << qubits.size());
    for (size_t j = 0; j < state.size(); j++) {
        if (rest_of(j) != best->first) {
            continue;
        }
        size_t idx = fixed_out;
        for (size_t s = 0; s < active.size(); s++) {
            if (want[s] >= 0) {
                idx |= ((j >> s) & 1) << want[s];
            }
        }
        amps[idx] = state[j];
    }
    return StateVector::normalized(static_cast<uint32_t>(qubits.size()), std::move(amps));
}

double QubitFrame::probability_nonzero(std::span<const uint32_t> qubits) const {
    size_t mask = 0;
    for (auto q : qubits) {
        uint32_t s = slot_of(*this, q);
        if (s == kNoSlot) {
            if (classical[q]) {
                return 1.0;
            }
        } else {
            mask |= size_t{1} << s;
        }
    }
    double p = 0;
    for (size_t j = 0; j < state.size(); j++) {
        if (j & mask) {
            p += std::norm(state[j]);
        }
    }
    return p;
}

// ---------------------------------------------------------------------------

SampleResult run_sampled(const Circuit &circuit, const QubitFrame &input, Rng &rng, const RunOptions &options) {
    check_input(circuit, input);
    SampleResult r{std::vector<uint8_t>(circuit.num_cbits, 0), input};
    for (const auto &inst : circuit.instructions) {
        if (inst.is_unitary()) {
            if (!inst.condition.has_value() || inst.condition->holds(r.cbits)) {
                apply_unitary_frame(r.frame, inst, options.max_active_qubits);
            }
            continue;
        }
        if (inst.kind == GateKind::BARRIER) {
            continue;
        }
        uint32_t q = inst.qubits[0];
        bool bit;
        if (!r.frame.is_active(q)) {
            bit = r.frame.classical[q] != 0;
        } else {
            auto [p0, p1] = frame_outcome_probabilities(r.frame, q);
            if (p0 < kDefaultPruneBelow && p1 < kDefaultPruneBelow) {
                throw std::domain_error("both measurement outcomes have vanishing probability; state is corrupted");
            }
            bit = rng.uniform() * (p0 + p1) >= p0;
            collapse(r.frame, q, bit, bit ? p1 : p0);
        }
        if (inst.kind == GateKind::MEASURE) {
            r.cbits[inst.cbit] = bit;
        } else {
            r.frame.classical[q] = 0;
        }
    }
    return r;
}

SampleResult run_sampled(const Circuit &circuit, const StateVector &input, uint64_t seed) {
    Rng rng(seed);
    return run_sampled(circuit, QubitFrame::from_state(input), rng);
}

std::vector<Branch> run_branches(const Circuit &circuit, const QubitFrame &input, const RunOptions &options) {
    check_input(circuit, input);
    std::optional<Liveness> live;
    if (options.merge_equivalent) {
        live.emplace(circuit);
    }
    std::vector<Branch> branches;
    branches.push_back({1.0, std::vector<uint8_t>(circuit.num_cbits, 0), {}, input});

    for (size_t i = 0; i < circuit.instructions.size(); i++) {
        const auto &inst = circuit.instructions[i];
        if (inst.kind == GateKind::BARRIER) {
            continue;
        }
        if (inst.is_unitary()) {
            for (auto &b : branches) {
                if (!inst.condition.has_value() || inst.condition->holds(b.cbits)) {
                    apply_unitary_frame(b.frame, inst, options.max_active_qubits);
                }
            }
            if (live && inst.condition.has_value()) {
                coalesce(branches, *live, i, options);
            }
            continue;
        }

        uint32_t q = inst.qubits[0];
        std::vector<Branch> next;
        next.reserve(branches.size() * 2);
        for (auto &b : branches) {
            if (!b.frame.is_active(q)) {
                bool bit = b.frame.classical[q] != 0;
                if (inst.kind == GateKind::MEASURE) {
                    b.cbits[inst.cbit] = bit;
                } else {
                    b.frame.classical[q] = 0;
                }
                next.push_back(std::move(b));
                continue;
            }
            auto [p0, p1] = frame_outcome_probabilities(b.frame, q);
            bool take[2] = {p0 > 0 && b.probability * p0 >= options.prune_below,
                            p1 > 0 && b.probability * p1 >= options.prune_below};
            for (int bit = 0; bit < 2; bit++) {
                if (!take[bit]) {
                    continue;
                }
                double p = bit ? p1 : p0;
                Branch child = (bit == 0 && take[1]) ? b : std::move(b);
                child.probability *= p;
                collapse(child.frame, q, bit != 0, p);
                if (inst.kind == GateKind::MEASURE) {
                    child.cbits[inst.cbit] = static_cast<uint8_t>(bit);
                } else {
                    child.frame.classical[q] = 0;
                }
                next.push_back(std::move(child));
            }
        }
        if (next.size() > options.max_branches) {
            throw BranchLimitError(
                "branch enumeration exceeded " + std::to_string(options.max_branches) + " branches at instruction " +
                std::to_string(i));
        }
        branches = std::move(next);
        if (live) {
            coalesce(branches, *live, i, options);
        }
    }

    for (auto &b : branches) {
        b.observed.clear();
        for (const auto &g : options.observables) {
            b.observed.push_back(parity_of(b.cbits, g));
        }
    }
    return branches;
}

std::vector<Branch> run_branches(const Circuit &circuit, const StateVector &input, const RunOptions &options) {
    if (input.num_qubits() != circuit.num_qubits) {
        throw std::invalid_argument("input state qubit count does not match the circuit");
    }
    return run_branches(circuit, QubitFrame::from_state(input), options);
}

uint32_t peak_active_qubits(const Circuit &circuit, std::span<const uint32_t> initially_active) {
    std::vector<bool> active(circuit.num_qubits, false);
    uint32_t count = 0;
    auto activate = [&](uint32_t q) {
        if (!active[q]) {
            active[q] = true;
            count++;
        }
    };
    for (auto q : initially_active) {
        activate(q);
    }
    uint32_t peak = count;
    for (const auto &inst : circuit.instructions) {
        switch (inst.kind) {
            case GateKind::H:
            case GateKind::RY:
                activate(inst.qubits[0]);
                break;
            case GateKind::CX:
            case GateKind::CRZ:
                if (active[inst.qubits[0]]) {
                    activate(inst.qubits[1]);
                }
                break;
            case GateKind::MEASURE:
            case GateKind::RESET:
                if (active[inst.qubits[0]]) {
                    active[inst.qubits[0]] = false;
                    count--;
                }
                break;
            default:
                break;
        }
        peak = std::max(peak, count);
    }
    return peak;
}

Eigen::MatrixXcd unitary_matrix(const Circuit &circuit) {
    if (circuit.num_qubits > 12) {
        throw CapacityError("unitary_matrix is limited to 12 qubits");
    }
    for (const auto &inst : circuit.instructions) {
        validate_instruction(inst, circuit.num_qubits, circuit.num_cbits);
        if ((!inst.is_unitary() && inst.kind != GateKind::BARRIER) || inst.condition.has_value()) {
            throw std::invalid_argument("unitary_matrix needs a circuit of unconditioned unitary gates");
        }
    }
    size_t dim = size_t{1} << circuit.num_qubits;
    Eigen::MatrixXcd m(dim, dim);
    std::vector<Amp> buf(dim);
    for (size_t col = 0; col < dim; col++) {
        std::fill(buf.begin(), buf.end(), Amp{0});
        buf[col] = 1;
        for (const auto &inst : circuit.instructions) {
            if (inst.kind != GateKind::BARRIER) {
                kernels::apply_unitary(buf, inst, inst.qubits);
            }
        }
        for (size_t row = 0; row < dim; row++) {
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = buf[row];
        }
    }
    return m;
}

std::vector<Amp> diagonal_of(const Circuit &circuit) {
    if (circuit.num_qubits > 24) {
        throw CapacityError("diagonal_of is limited to 24 qubits");
    }
    std::vector<Amp> diag(size_t{1} << circuit.num_qubits, Amp{1});
    for (const auto &inst : circuit.instructions) {
        validate_instruction(inst, circuit.num_qubits, circuit.num_cbits);
        if (inst.kind == GateKind::BARRIER) {
            continue;
        }
        if (!inst.is_diagonal() || inst.condition.has_value()) {
            throw std::invalid_argument("diagonal_of needs a circuit of unconditioned diagonal gates");
        }
        kernels::apply_unitary(diag, inst, inst.qubits);
    }
    return diag;
}

}  // namespace hwproj
