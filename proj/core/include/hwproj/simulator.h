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

#ifndef HWPROJ_SIMULATOR_H
#define HWPROJ_SIMULATOR_H

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hwproj/circuit.h"
#include "hwproj/rng.h"
#include "hwproj/state_vector.h"

namespace hwproj {

/// Outcome probabilities below this are treated as impossible.
constexpr double kDefaultPruneBelow = 1e-14;
constexpr size_t kDefaultMaxBranches = size_t{1} << 20;
constexpr uint32_t kDefaultMaxActiveQubits = 24;

/// Thrown when an execution needs more simulated qubits than allowed.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when branch enumeration exceeds RunOptions::max_branches.
struct BranchLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Applies a unitary instruction to `state` in place. A classically
/// controlled instruction is applied only if its condition holds on `cbits`.
/// Throws std::invalid_argument for non-unitary kinds or bad indices.
void apply_instruction(StateVector &state, const Instruction &inst, std::span<const uint8_t> cbits = {});

struct MeasureResult {
    bool outcome;
    double probability;
    StateVector post;
};

/// Samples a computational-basis measurement of qubit q.
/// Throws std::domain_error if both outcome probabilities are below 1e-14.
MeasureResult measure_qubit(const StateVector &state, uint32_t q, Rng &rng);

/// Both outcomes of measuring q, skipping any with probability < prune_below.
std::vector<MeasureResult> measure_branches(
    const StateVector &state, uint32_t q, double prune_below = kDefaultPruneBelow);

/// Measure then flip back to |0>; `post` always has qubit q in |0>.
MeasureResult reset_qubit(const StateVector &state, uint32_t q, Rng &rng);
std::vector<MeasureResult> reset_branches(const StateVector &state, uint32_t q, double prune_below = kDefaultPruneBelow);

/// Execution state over all circuit qubits.
///
/// Qubits that have been measured or reset, or never touched, are in a known
/// basis state and are stored as classical bits; the rest live in `state`.
/// Bit i of `state` is circuit qubit active[i], and `active` is ascending.
struct QubitFrame {
    uint32_t num_qubits = 0;
    std::vector<uint32_t> active;
    StateVector state{0};
    std::vector<uint8_t> classical;

    /// Every qubit of `state` active.
    static QubitFrame from_state(const StateVector &state);

    /// `sub` placed on `qubits` (bit i of sub is qubits[i]); all other qubits |0>.
    static QubitFrame embed(const StateVector &sub, std::span<const uint32_t> qubits, uint32_t num_qubits);

    bool is_active(uint32_t q) const;

    /// State over all num_qubits qubits.
    StateVector expand() const;

    /// Pure state of `qubits` (bit i is qubits[i]). The remaining qubits must be
    /// in a single basis state up to `tol` probability mass; otherwise throws
    /// std::domain_error.
    StateVector extract(std::span<const uint32_t> qubits, double tol = 1e-10) const;

    /// Probability that at least one of `qubits` reads 1.
    double probability_nonzero(std::span<const uint32_t> qubits) const;
};

struct RunOptions {
    double prune_below = kDefaultPruneBelow;
    size_t max_branches = kDefaultMaxBranches;
    uint32_t max_active_qubits = kDefaultMaxActiveQubits;

    /// Coalesce branches whose futures are indistinguishable: same simulated
    /// state up to global phase, same values of every parity still read by a
    /// later condition or listed in `observables`, and same values of classical
    /// qubits used again before a reset. Coalesced branches keep the cbits of
    /// the first branch; only `observed` is meaningful for the rest.
    bool merge_equivalent = false;

    /// Parity groups evaluated into Branch::observed at the end of the run.
    std::vector<std::vector<uint32_t>> observables;
};

struct Branch {
    double probability;
    std::vector<uint8_t> cbits;
    std::vector<uint8_t> observed;
    QubitFrame frame;
};

struct SampleResult {
    std::vector<uint8_t> cbits;
    QubitFrame frame;
};

/// Runs the circuit once, sampling measurement outcomes from `rng`.
SampleResult run_sampled(const Circuit &circuit, const QubitFrame &input, Rng &rng, const RunOptions &options = {});

/// Seeded single run. `input` must cover every circuit qubit.
SampleResult run_sampled(const Circuit &circuit, const StateVector &input, uint64_t seed);

/// Enumerates every measurement and reset outcome. Branches with probability
/// below options.prune_below are dropped. Throws BranchLimitError past
/// options.max_branches.
std::vector<Branch> run_branches(const Circuit &circuit, const QubitFrame &input, const RunOptions &options = {});
std::vector<Branch> run_branches(const Circuit &circuit, const StateVector &input, const RunOptions &options = {});

/// Largest number of simultaneously simulated qubits the executor will need.
uint32_t peak_active_qubits(const Circuit &circuit, std::span<const uint32_t> initially_active);

/// Dense matrix of a circuit made only of unconditioned unitary gates
/// (at most 12 qubits). Column b is the image of basis state b.
Eigen::MatrixXcd unitary_matrix(const Circuit &circuit);

/// Diagonal of a circuit made only of unconditioned diagonal gates.
std::vector<Amp> diagonal_of(const Circuit &circuit);

}  // namespace hwproj

#endif
