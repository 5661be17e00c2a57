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

#ifndef HWPROJ_ORACLE_H
#define HWPROJ_ORACLE_H

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hwproj/hamming.h"
#include "hwproj/rng.h"
#include "hwproj/simulator.h"
#include "hwproj/state_vector.h"

namespace hwproj {

/// Basis indices of popcount x among n qubits, ascending.
struct WeightMask {
    uint32_t n;
    uint32_t x;
    std::vector<uint64_t> indices;
};

/// Throws std::invalid_argument unless x <= n <= 30.
WeightMask weight_mask(uint32_t n, uint32_t x);

/// P_x applied to `state`, not renormalized.
std::vector<Amp> project(const StateVector &state, const WeightMask &mask);

struct OutcomeReport {
    std::map<uint32_t, double> probs;
    std::map<uint32_t, StateVector> post_states;
    std::string source;
};

/// Outcome law and post-measurement states of the projective measurement
/// {P_x}; outcomes with probability below 1e-14 are omitted.
OutcomeReport exact_hamming_distribution(const StateVector &state);

/// One surviving execution branch of a Hamming circuit, reduced to the data
/// register.
struct OutcomeBranch {
    uint64_t outcome;
    double probability;
    StateVector data_state;
};

/// Enumerates the branches of `hc` on `input` (n data qubits, everything else
/// starting in |0>), coalescing equivalent branches.
std::vector<OutcomeBranch> outcome_branches(
    const HammingCircuit &hc, const StateVector &input, RunOptions options = {});

/// Outcome distribution of `hc` on `input`; post_states keeps the most likely
/// branch per outcome.
OutcomeReport circuit_distribution(const HammingCircuit &hc, const StateVector &input, RunOptions options = {});

struct VerifyResult {
    bool pass = false;
    double max_prob_dev = 0;
    double max_infidelity = 0;
    /// Probability of decoded outcomes above n.
    double out_of_range_prob = 0;
    std::string detail;
};

/// Compares the branch-mode outcome law and post-states of `hc` with the
/// oracle. Probabilities must agree within tol, post-states within
/// infidelity tol for outcomes whose oracle probability exceeds tol, and
/// outcomes above n must carry at most tol probability.
VerifyResult verify_variant(const HammingCircuit &hc, const StateVector &input, double tol, RunOptions options = {});

/// Seeded random density operator: G G^dagger / tr(G G^dagger), G complex Gaussian.
Eigen::MatrixXcd random_density(uint32_t num_qubits, Rng &rng);

/// sum_x P_x L P_x on N qubits.
Eigen::MatrixXcd pinch(const Eigen::MatrixXcd &L, uint32_t N);

/// (1/(N+1)) sum_y U_y L U_y^dagger with U_y taken from the built circuits.
Eigen::MatrixXcd twirl(const Eigen::MatrixXcd &L, uint32_t N);

/// Max entrywise |pinch(L) - twirl(L)|.
double pinching_deviation(const Eigen::MatrixXcd &L, uint32_t N);

/// Max pinching_deviation over `trials` random density operators on
/// 1 <= N <= 4 qubits.
double check_pinching(uint32_t N, uint32_t trials, uint64_t seed);

}  // namespace hwproj

#endif
