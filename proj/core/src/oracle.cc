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

#include "hwproj/oracle.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hwproj {

namespace {

HammingParams cyclic_params(uint32_t N) {
    // Only N matters to build_u_y.
    HammingParams p;
    p.n = N;
    p.N = N;
    p.k = static_cast<uint32_t>(std::bit_width(N));
    p.w = 0;
    p.s = 1;
    return p;
}

void check_dense(const Eigen::MatrixXcd &L, uint32_t N) {
    if (N < 1 || N > 8) {
        throw std::invalid_argument("dense pinching algebra needs 1 <= N <= 8");
    }
    auto dim = Eigen::Index{1} << N;
    if (L.rows() != dim || L.cols() != dim) {
        throw std::invalid_argument("operator dimension does not match N");
    }
}

}  // namespace

WeightMask weight_mask(uint32_t n, uint32_t x) {
    if (n > 30 || x > n) {
        throw std::invalid_argument(
            "weight_mask needs x <= n <= 30, got n=" + std::to_string(n) + " x=" + std::to_string(x));
    }
    WeightMask m{n, x, {}};
    for (uint64_t b = 0; b < (uint64_t{1} << n); b++) {
        if (static_cast<uint32_t>(std::popcount(b)) == x) {
            m.indices.push_back(b);
        }
    }
    return m;
}

std::vector<Amp> project(const StateVector &state, const WeightMask &mask) {
    if (mask.n != state.num_qubits()) {
        throw std::invalid_argument("mask and state sizes differ");
    }
    std::vector<Amp> out(state.size());
    for (auto b : mask.indices) {
        out[b] = state[b];
    }
    return out;
}

OutcomeReport exact_hamming_distribution(const StateVector &state) {
    OutcomeReport r;
    r.source = "oracle";
    uint32_t n = state.num_qubits();
    for (uint32_t x = 0; x <= n; x++) {
        auto amps = project(state, weight_mask(n, x));
        double p = 0;
        for (const auto &a : amps) {
            p += std::norm(a);
        }
        if (p < kDefaultPruneBelow) {
            continue;
        }
        r.probs[x] = p;
        r.post_states.emplace(x, StateVector::normalized(n, std::move(amps)));
    }
    return r;
}

std::vector<OutcomeBranch> outcome_branches(const HammingCircuit &hc, const StateVector &input, RunOptions options) {
    const auto &layout = hc.layout;
    if (input.num_qubits() != layout.data_qubits.size()) {
        throw std::invalid_argument(
            "input has " + std::to_string(input.num_qubits()) + " qubits but the circuit has " +
            std::to_string(layout.data_qubits.size()) + " data qubits");
    }
    options.merge_equivalent = true;
    options.observables = layout.outcome_groups;
    auto frame = QubitFrame::embed(input, layout.data_qubits, hc.circuit.num_qubits);
    auto branches = run_branches(hc.circuit, frame, options);
    std::vector<OutcomeBranch> out;
    out.reserve(branches.size());
    for (const auto &b : branches) {
        uint64_t a = 0;
        for (size_t l = 0; l < b.observed.size(); l++) {
            a |= uint64_t{b.observed[l]} << l;
        }
        out.push_back({a, b.probability, b.frame.extract(layout.data_qubits)});
    }
    return out;
}

OutcomeReport circuit_distribution(const HammingCircuit &hc, const StateVector &input, RunOptions options) {
    OutcomeReport r;
    r.source = std::string(variant_name(hc.variant));
    std::map<uint32_t, double> best;
    for (auto &b : outcome_branches(hc, input, std::move(options))) {
        auto a = static_cast<uint32_t>(b.outcome);
        r.probs[a] += b.probability;
        if (b.probability > best[a]) {
            best[a] = b.probability;
            r.post_states.insert_or_assign(a, std::move(b.data_state));
        }
    }
    return r;
}

VerifyResult verify_variant(const HammingCircuit &hc, const StateVector &input, double tol, RunOptions options) {
    VerifyResult v;
    auto oracle = exact_hamming_distribution(input);
    auto branches = outcome_branches(hc, input, std::move(options));
    uint32_t n = hc.params.n;

    std::map<uint64_t, double> probs;
    for (const auto &b : branches) {
        probs[b.outcome] += b.probability;
    }
    std::ostringstream detail;
    for (uint32_t x = 0; x <= n; x++) {
        double want = oracle.probs.contains(x) ? oracle.probs.at(x) : 0.0;
        double got = probs.contains(x) ? probs.at(x) : 0.0;
        double dev = std::abs(want - got);
        if (dev > v.max_prob_dev) {
            v.max_prob_dev = dev;
        }
        if (dev > tol) {
            detail << "p(" << x << "): circuit " << got << " vs oracle " << want << "; ";
        }
    }
    for (const auto &[a, p] : probs) {
        if (a > n) {
            v.out_of_range_prob += p;
        }
    }
    if (v.out_of_range_prob > tol) {
        detail << "outcomes above n carry probability " << v.out_of_range_prob << "; ";
    }
    for (const auto &b : branches) {
        auto it = oracle.probs.find(static_cast<uint32_t>(b.outcome));
        if (b.outcome > n || it == oracle.probs.end() || it->second <= tol) {
            continue;
        }
        double inf = infidelity(b.data_state, oracle.post_states.at(it->first));
        if (inf > v.max_infidelity) {
            v.max_infidelity = inf;
        }
        if (inf > tol) {
            detail << "post-state for outcome " << b.outcome << " has infidelity " << inf << "; ";
        }
    }
    v.pass = v.max_prob_dev <= tol && v.max_infidelity <= tol && v.out_of_range_prob <= tol;
    v.detail = detail.str();
    return v;
}

Eigen::MatrixXcd random_density(uint32_t num_qubits, Rng &rng) {
    auto dim = Eigen::Index{1} << num_qubits;
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index c = 0; c < dim; c++) {
        for (Eigen::Index r = 0; r < dim; r++) {
            double re = rng.normal();
            double im = rng.normal();
            g(r, c) = Amp(re, im);
        }
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    return rho / rho.trace().real();
}

Eigen::MatrixXcd pinch(const Eigen::MatrixXcd &L, uint32_t N) {
    check_dense(L, N);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(L.rows(), L.cols());
    for (uint32_t x = 0; x <= N; x++) {
        auto mask = weight_mask(N, x);
        for (auto a : mask.indices) {
            for (auto b : mask.indices) {
                out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                    L(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            }
        }
    }
    return out;
}

Eigen::MatrixXcd twirl(const Eigen::MatrixXcd &L, uint32_t N) {
    check_dense(L, N);
    auto params = cyclic_params(N);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(L.rows(), L.cols());
    for (uint32_t y = 0; y <= N; y++) {
        auto d = diagonal_of(build_u_y(params, y));
        Eigen::Map<const Eigen::VectorXcd> u(d.data(), static_cast<Eigen::Index>(d.size()));
        out += u.asDiagonal() * L * u.conjugate().asDiagonal();
    }
    return out / static_cast<double>(N + 1);
}

double pinching_deviation(const Eigen::MatrixXcd &L, uint32_t N) {
    return (pinch(L, N) - twirl(L, N)).cwiseAbs().maxCoeff();
}

double check_pinching(uint32_t N, uint32_t trials, uint64_t seed) {
    if (N < 1 || N > 4) {
        throw std::invalid_argument("check_pinching needs 1 <= N <= 4");
    }
    Rng rng(seed);
    double worst = 0;
    for (uint32_t t = 0; t < trials; t++) {
        worst = std::max(worst, pinching_deviation(random_density(N, rng), N));
    }
    return worst;
}

}  // namespace hwproj
