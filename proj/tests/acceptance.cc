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

// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "hwproj/circuit_io.h"
#include "hwproj/hamming.h"
#include "hwproj/oracle.h"
#include "hwproj/scheduler.h"
#include "hwproj/simulator.h"
#include "hwproj/states.h"
#include "test_util.h"

using namespace hwproj;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            note << "first failure: " << what << "; ";
        }
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int id, const std::string &title, double limit_s, const std::function<void(Outcome &)> &body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception &e) {
        o.pass = false;
        o.note << "exception: " << e.what() << "; ";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        o.pass = false;
        o.note << "runtime " << secs << " s over the " << limit_s << " s limit; ";
    }
    std::printf("[%s] criterion %d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
        o.note.str().c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
}

double prob_at(const std::map<uint32_t, double> &m, uint32_t x) {
    auto it = m.find(x);
    return it == m.end() ? 0.0 : it->second;
}

// Outcome law and post-states of `hc` on `st` against the popcount reference.
void check_against_reference(Outcome &o, const HammingCircuit &hc, const StateVector &st, double tol, double &worst_p,
    double &worst_f) {
    auto want = hwtest::popcount_probs(st);
    RunOptions opts;
    opts.merge_equivalent = true;
    auto branches = outcome_branches(hc, st, opts);
    std::map<uint64_t, double> got;
    for (const auto &b : branches) {
        got[b.outcome] += b.probability;
    }
    for (const auto &[a, p] : got) {
        double w = a <= hc.params.n ? prob_at(want, static_cast<uint32_t>(a)) : 0.0;
        worst_p = std::max(worst_p, std::abs(p - w));
    }
    for (const auto &[x, p] : want) {
        double g = got.contains(x) ? got[x] : 0.0;
        worst_p = std::max(worst_p, std::abs(p - g));
    }
    for (const auto &b : branches) {
        if (b.outcome <= hc.params.n && prob_at(want, static_cast<uint32_t>(b.outcome)) > tol) {
            double f = infidelity(b.data_state, hwtest::popcount_post(st, static_cast<uint32_t>(b.outcome)));
            worst_f = std::max(worst_f, f);
        }
    }
    std::ostringstream what;
    what << variant_name(hc.variant) << " n=" << hc.params.n << " s=" << hc.params.s;
    o.require(worst_p <= tol, what.str() + " distribution");
    o.require(worst_f <= tol, what.str() + " post-state");
}

uint64_t parity_decode(const std::vector<uint8_t> &cbits, uint32_t k, uint32_t s) {
    uint64_t a = 0;
    for (uint32_t l = 0; l < k; l++) {
        bool p = false;
        for (uint32_t m = 0; m < s; m++) {
            p ^= cbits[l * s + m] != 0;
        }
        a |= uint64_t{p} << l;
    }
    return a;
}

std::vector<uint32_t> range(uint32_t begin, uint32_t count) {
    std::vector<uint32_t> out(count);
    for (uint32_t i = 0; i < count; i++) {
        out[i] = begin + i;
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "intro example through alg2", 1.0, [](Outcome &o) {
        auto d = circuit_distribution(build_alg2(derive_params(3)), intro3_state());
        double p0 = prob_at(d.probs, 0), p1 = prob_at(d.probs, 1), p2 = prob_at(d.probs, 2), p3 = prob_at(d.probs, 3);
        o.note << "p = {" << p0 << ", " << p1 << ", " << p2 << ", " << p3 << "}; ";
        o.require(std::abs(p0 - 0.25) <= 1e-10, "p(0)");
        o.require(std::abs(p1 - 0.5) <= 1e-10, "p(1)");
        o.require(std::abs(p2) <= 1e-10, "p(2)");
        o.require(std::abs(p3 - 0.25) <= 1e-10, "p(3)");
    });

    criterion(2, "oracle equivalence for every variant, n <= 6, 25 states", 300.0, [](Outcome &o) {
        double worst_p = 0, worst_f = 0;
        size_t cases = 0;
        for (uint32_t n = 1; n <= 6; n++) {
            Rng rng(20000 + n);
            std::vector<StateVector> states;
            for (int t = 0; t < 25; t++) {
                states.push_back(random_state(n, rng));
            }
            std::vector<HammingCircuit> circuits = {build_alg1(derive_params(n)), build_alg2(derive_params(n))};
            for (uint32_t s : std::set<uint32_t>{1u, std::min(2u, n), n}) {
                circuits.push_back(build_alg2_tradeoff(derive_params(n, s)));
                circuits.push_back(build_alg2_resets(derive_params(n, s)));
            }
            for (const auto &hc : circuits) {
                for (const auto &st : states) {
                    check_against_reference(o, hc, st, 1e-9, worst_p, worst_f);
                    cases++;
                }
            }
        }
        o.note << cases << " cases, max prob dev " << worst_p << ", max infidelity " << worst_f << "; ";
    });

    criterion(3, "pinching equals the cyclic twirl, N = 3", 10.0, [](Outcome &o) {
        const uint32_t N = 3;
        const size_t dim = size_t{1} << N;
        auto params = derive_params(N);
        std::vector<std::vector<Amp>> diag;
        for (uint32_t y = 0; y <= N; y++) {
            diag.push_back(diagonal_of(build_u_y(params, y)));
        }
        Rng rng(303);
        double worst = 0;
        for (int t = 0; t < 20; t++) {
            auto L = random_density(N, rng);
            Eigen::MatrixXcd pinched = Eigen::MatrixXcd::Zero(dim, dim);
            Eigen::MatrixXcd twirled = Eigen::MatrixXcd::Zero(dim, dim);
            for (size_t a = 0; a < dim; a++) {
                for (size_t b = 0; b < dim; b++) {
                    if (std::popcount(a) == std::popcount(b)) {
                        pinched(a, b) = L(a, b);
                    }
                    for (uint32_t y = 0; y <= N; y++) {
                        twirled(a, b) += diag[y][a] * L(a, b) * std::conj(diag[y][b]) / double(N + 1);
                    }
                }
            }
            worst = std::max(worst, (pinched - twirled).cwiseAbs().maxCoeff());
        }
        o.note << "max deviation " << worst << "; ";
        o.require(worst < 1e-10, "pinching deviation");
    });

    criterion(4, "U_y represents the cyclic group", 0, [](Outcome &o) {
        for (uint32_t N : {3u, 7u, 15u}) {
            auto p = derive_params(N);
            auto u0 = diagonal_of(build_u_y(p, 0));
            o.require(std::all_of(u0.begin(), u0.end(), [](Amp v) { return v == Amp(1); }), "U_0 == I exactly");
            auto u1 = diagonal_of(build_u_y(p, 1));
            double worst = 0;
            for (auto v : u1) {
                worst = std::max(worst, std::abs(std::pow(v, N + 1) - Amp(1)));
            }
            // pow on complex goes through log/exp; repeat by multiplication too.
            double worst_mul = 0;
            for (auto v : u1) {
                Amp acc = 1;
                for (uint32_t r = 0; r <= N; r++) {
                    acc *= v;
                }
                worst_mul = std::max(worst_mul, std::abs(acc - Amp(1)));
            }
            o.require(std::max(worst, worst_mul) < 1e-10, "U_1^(N+1) == I for N=" + std::to_string(N));
        }
        auto p = derive_params(7);
        std::vector<std::vector<Amp>> d;
        for (uint32_t y = 0; y <= 7; y++) {
            d.push_back(diagonal_of(build_u_y(p, y)));
        }
        double worst = 0;
        for (uint32_t y = 0; y <= 7; y++) {
            for (uint32_t z = 0; z <= 7; z++) {
                for (size_t i = 0; i < d[y].size(); i++) {
                    worst = std::max(worst, std::abs(d[y][i] * d[z][i] - d[(y + z) % 8][i]));
                }
            }
        }
        o.note << "N=7 addition table max deviation " << worst << "; ";
        o.require(worst < 1e-10, "addition table");
    });

    criterion(5, "controlled Rz on |0> target acts as Rz(-phi/2) on the control", 0, [](Outcome &o) {
        double worst = 0;
        for (int t = 0; t < 16; t++) {
            double phi = -kPi + (2 * kPi) * t / 15.0 + 0.1;
            Circuit c(2, 0);
            c.push(op::crz(phi, 0, 1));
            auto u = unitary_matrix(c);
            // Block with target (qubit 1) in |0>: basis indices 0 and 1.
            Eigen::Matrix2cd block = u.block(0, 0, 2, 2);
            Eigen::Matrix2cd rz = hwtest::rz_matrix(-phi / 2);
            Amp g = block(0, 0) / rz(0, 0);
            worst = std::max(worst, std::abs(std::abs(g) - 1));
            worst = std::max(worst, (block - g * rz).cwiseAbs().maxCoeff());
            // Nothing leaks out of the target-|0> subspace.
            worst = std::max(worst, u.block(2, 0, 2, 2).cwiseAbs().maxCoeff());
        }
        o.note << "max deviation " << worst << "; ";
        o.require(worst < 1e-12, "control rotation deviation");
    });

    criterion(6, "semiclassical encoded IQFT matches the dense IQFT", 0, [](Outcome &o) {
        Rng rng(606);
        double worst = 0;
        for (uint32_t k = 1; k <= 3; k++) {
            for (uint32_t s = 1; s <= 3; s++) {
                auto c = build_semiclassical_iqft(k, s);
                for (int t = 0; t < 20; t++) {
                    auto logical = random_state(k, rng);
                    auto want = hwtest::dense_iqft_probs(logical);
                    std::vector<double> got(want.size());
                    for (const auto &b : run_branches(c, hwtest::encode_repetition(logical, s))) {
                        got[parity_decode(b.cbits, k, s)] += b.probability;
                    }
                    for (size_t a = 0; a < want.size(); a++) {
                        worst = std::max(worst, std::abs(got[a] - want[a]));
                    }
                }
            }
        }
        double worst_single = 0;
        for (int t = 0; t < 20; t++) {
            auto logical = random_state(1, rng);
            Amp al = logical[0], be = logical[1];
            double re = 2 * (al * std::conj(be)).real();
            for (uint32_t s : {1u, 2u, 3u}) {
                double p[2] = {0, 0};
                for (const auto &b : run_branches(build_semiclassical_iqft(1, s), hwtest::encode_repetition(logical, s))) {
                    p[parity_decode(b.cbits, 1, s)] += b.probability;
                }
                for (int a = 0; a < 2; a++) {
                    double f = 0.5 * (1 + (a == 0 ? 1 : -1) * re);
                    worst_single = std::max(worst_single, std::abs(p[a] - f));
                }
            }
        }
        o.note << "max dev vs dense " << worst << ", single-level " << worst_single << "; ";
        o.require(worst <= 1e-9, "dense comparison");
        o.require(worst_single <= 1e-10, "single-level formula");
    });

    criterion(7, "tree and measurement-based fanout agree; constant depth", 0, [](Outcome &o) {
        Rng rng(707);
        double worst = 0;
        std::vector<size_t> depths;
        for (uint32_t s = 2; s <= 6; s++) {
            auto in = random_state(1, rng);
            auto reference = hwtest::encode_repetition(in, s);
            auto tree = build_fanout(s, FanoutStrategy::TREE);
            auto tb = run_branches(tree, QubitFrame::embed(in, std::vector<uint32_t>{0}, tree.num_qubits));
            o.require(tb.size() == 1, "tree is deterministic");
            auto tree_state = tb[0].frame.extract(range(0, s));
            worst = std::max(worst, infidelity(tree_state, reference));
            auto mb = build_fanout(s, FanoutStrategy::MEASUREMENT_BASED);
            auto branches = run_branches(mb, QubitFrame::embed(in, std::vector<uint32_t>{0}, mb.num_qubits));
            o.require(branches.size() == (size_t{1} << (s - 1)), "every parity branch enumerated");
            for (const auto &b : branches) {
                worst = std::max(worst, infidelity(b.frame.extract(range(0, s)), tree_state));
            }
            depths.push_back(layer_circuit(mb).depth());
        }
        o.note << "max infidelity " << worst << ", measurement-based depths";
        for (auto d : depths) {
            o.note << " " << d;
        }
        o.note << "; ";
        o.require(worst < 1e-10, "branch infidelity");
        o.require(std::all_of(depths.begin(), depths.end(), [&](size_t d) { return d == depths[0]; }), "constant depth");
    });

    criterion(8, "depth and control-qubit scaling", 30.0, [](Outcome &o) {
        const double C = 10.0;
        const double lo = 1.0, hi = 4.0;
        std::vector<uint32_t> ns = {4, 8, 16, 32, 64};
        auto full = predicted_scaling(ns, *parse_s_policy("n"));
        auto unit = predicted_scaling(ns, *parse_s_policy("1"));
        o.note << "depth/k at s=n:";
        for (const auto &r : full) {
            o.note << " " << r.depth_per_log();
            o.require(static_cast<double>(r.report.quantum_depth) <= C * r.k, "s=n depth bound at n=" + std::to_string(r.n));
            o.require(r.report.control_qubits == r.n, "s=n control count");
        }
        o.note << "; depth/(n k) at s=1:";
        for (const auto &r : unit) {
            o.note << " " << r.depth_per_nlog();
            o.require(r.depth_per_nlog() >= lo && r.depth_per_nlog() <= hi, "s=1 band at n=" + std::to_string(r.n));
            o.require(r.report.control_qubits == 1, "s=1 control count");
        }
        o.note << "; ";
        for (auto n : ns) {
            for (uint32_t s : {2u, n / 2, n / 4}) {
                auto r = measure_resources(build_alg2_resets(derive_params(n, s)));
                o.require(r.control_qubits == s, "control count s=" + std::to_string(s));
            }
        }
    });

    criterion(9, "benchmark states, exact and 10,000 shots", 0, [](Outcome &o) {
        struct Case {
            std::string name;
            StateVector state;
            std::map<uint32_t, double> expected;
        };
        std::vector<Case> cases = {
            {"ghz3", ghz_state(3), {{0, 0.5}, {3, 0.5}}},
            {"w3", w_state(3), {{1, 1.0}}},
            {"sqrt3-pair", sqrt3_pair_state(), {{0, 0.75}, {2, 0.25}}},
            {"bell-pairs", bell_pair_product(4), {{0, 0.25}, {2, 0.5}, {4, 0.25}}},
            {"w5", w_state(5), {{1, 1.0}}},
            {"ghz6", ghz_state(6), {{0, 0.5}, {6, 0.5}}},
        };
        const uint64_t shots = 10000;
        double worst_exact = 0, worst_sigma = 0;
        uint64_t seed = 909;
        for (const auto &c : cases) {
            uint32_t n = c.state.num_qubits();
            auto oracle = hwtest::popcount_probs(c.state);
            for (uint32_t x = 0; x <= n; x++) {
                o.require(std::abs(prob_at(oracle, x) - prob_at(c.expected, x)) <= 1e-12, c.name + " oracle value");
            }
            for (auto v : {Variant::ALG1, Variant::ALG2, Variant::TRADEOFF, Variant::RESETS}) {
                auto hc = build_variant(v, derive_params(n, v == Variant::ALG1 || v == Variant::ALG2 ? 1 : n));
                auto d = circuit_distribution(hc, c.state);
                for (uint32_t x = 0; x <= n; x++) {
                    worst_exact = std::max(worst_exact, std::abs(prob_at(d.probs, x) - prob_at(c.expected, x)));
                }
            }
            auto hc = build_alg2(derive_params(n));
            Rng rng(seed++);
            auto frame = QubitFrame::embed(c.state, hc.layout.data_qubits, hc.circuit.num_qubits);
            std::map<uint64_t, uint64_t> counts;
            for (uint64_t i = 0; i < shots; i++) {
                counts[hc.decode_outcome(run_sampled(hc.circuit, frame, rng).cbits)]++;
            }
            for (const auto &[a, cnt] : counts) {
                o.require(a <= n, c.name + " outcome in range");
            }
            for (uint32_t x = 0; x <= n; x++) {
                double p = prob_at(c.expected, x);
                double mean = p * static_cast<double>(shots);
                double sd = std::sqrt(static_cast<double>(shots) * p * (1 - p));
                double dev = std::abs(static_cast<double>(counts[x]) - mean);
                if (sd > 0) {
                    worst_sigma = std::max(worst_sigma, dev / sd);
                }
                o.require(dev <= 3 * sd + 1e-6, c.name + " bin " + std::to_string(x) + " within 3 sigma");
            }
        }
        o.note << "max exact dev " << worst_exact << ", max shot deviation " << worst_sigma << " sigma; ";
        o.require(worst_exact <= 1e-10, "exact mode");
    });

    criterion(10, "circuit text round trip and diagnostics", 0, [](Outcome &o) {
        RunOptions opts;
        opts.merge_equivalent = true;
        size_t circuits = 0;
        for (uint32_t n = 1; n <= 6; n++) {
            Rng rng(1000 + n);
            auto st = random_state(n, rng);
            for (auto v : {Variant::ALG1, Variant::ALG2, Variant::TRADEOFF, Variant::RESETS}) {
                for (uint32_t s : std::set<uint32_t>{1u, std::min(2u, n), n}) {
                    for (auto f : {FanoutStrategy::MEASUREMENT_BASED, FanoutStrategy::TREE}) {
                        BuildOptions bo;
                        bo.fanout = f;
                        auto hc = build_variant(v, derive_params(n, s), bo);
                        auto copy = hc;
                        copy.circuit = parse(emit(hc.circuit));
                        o.require(copy.circuit == hc.circuit, "structural round trip");
                        auto a = outcome_branches(hc, st, opts);
                        auto b = outcome_branches(copy, st, opts);
                        bool same = a.size() == b.size();
                        for (size_t i = 0; same && i < a.size(); i++) {
                            same = a[i].outcome == b[i].outcome && a[i].probability == b[i].probability &&
                                   a[i].data_state == b[i].data_state;
                        }
                        o.require(same, std::string(variant_name(v)) + " n=" + std::to_string(n) + " branch-identical");
                        circuits++;
                    }
                }
            }
        }
        struct Bad {
            std::string text;
            size_t line;
        };
        std::vector<Bad> bad = {
            {"qubits 2\ncbits 0\nh q0\nfoo q1\n", 4},
            {"qubits 2\ncbits 0\ncx q0, q2\n", 3},
            {"qubits 1\ncbits 0\nrz(pi/x) q0\n", 3},
            {"qubits 2\ncbits 1\n\nif (parity(c0) == 1) x q1\n", 4},
            {"qubits 1\ncbits 1\nh q0\nmeasure q0 -> c0\nif (c0 == 1) reset q0\n", 5},
        };
        for (const auto &b : bad) {
            try {
                parse(b.text);
                o.require(false, "malformed input accepted");
            } catch (const ParseError &e) {
                std::string prefix = "line " + std::to_string(b.line) + ", column ";
                o.require(e.line == b.line && std::string(e.what()).rfind(prefix, 0) == 0,
                    std::string("diagnostic anchored: ") + e.what());
            }
        }
        o.note << circuits << " circuits round-tripped; ";
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
