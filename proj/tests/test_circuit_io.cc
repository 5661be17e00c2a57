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

#include "hwproj/circuit_io.h"

#include <gtest/gtest.h>

#include <numbers>

#include "hwproj/angles.h"
#include "hwproj/hamming.h"
#include "hwproj/oracle.h"
#include "hwproj/simulator.h"

using namespace hwproj;

namespace {

std::vector<HammingCircuit> all_variants(uint32_t n) {
    std::vector<HammingCircuit> out;
    for (auto v : {Variant::ALG1, Variant::ALG2, Variant::TRADEOFF, Variant::RESETS}) {
        for (uint32_t s : {1u, n}) {
            out.push_back(build_variant(v, derive_params(n, s)));
        }
    }
    return out;
}

// Expects parse(text) to fail at the given line and column.
void expect_error_at(const std::string &text, size_t line, size_t column, const std::string &fragment = "") {
    try {
        parse(text);
        ADD_FAILURE() << "parsed without error:\n" << text;
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, line) << e.what();
        EXPECT_EQ(e.column, column) << e.what();
        if (!fragment.empty()) {
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
        }
    }
}

}  // namespace

TEST(Emit, hadamard_measure_example) {
    Circuit c(1, 1);
    c.push(op::h(0));
    c.push(op::measure(0, 0));
    EXPECT_EQ(emit(c), "qubits 1\ncbits 1\nh q0\nmeasure q0 -> c0\n");
}

TEST(Emit, every_instruction_form) {
    Circuit c(3, 2);
    c.push(op::h(0));
    c.push(op::x(1));
    c.push(op::ry(pi_fraction(1, 3), 2));
    c.push(op::rz(-0.25, 0));
    c.push(op::gphase(pi_fraction(-3, 4)));
    c.push(op::cx(0, 1));
    c.push(op::cz(1, 2));
    c.push(op::crz(pi_fraction(1, 2), 0, 2));
    c.push(op::measure(0, 0));
    c.push(op::measure(1, 1));
    c.push(op::reset(0));
    c.push(op::barrier());
    c.push(op::barrier({1, 2}));
    c.push(op::if_parity({0, 1}, true, op::x(2)));
    c.push(op::if_parity({1}, false, op::rz(std::numbers::pi, 2)));
    EXPECT_EQ(emit(c),
        "qubits 3\n"
        "cbits 2\n"
        "h q0\n"
        "x q1\n"
        "ry(pi*1/3) q2\n"
        "rz(-0.25) q0\n"
        "gphase(pi*-3/4)\n"
        "cx q0, q1\n"
        "cz q1, q2\n"
        "crz(pi*1/2) q0, q2\n"
        "measure q0 -> c0\n"
        "measure q1 -> c1\n"
        "reset q0\n"
        "barrier\n"
        "barrier q1, q2\n"
        "if (parity(c0,c1) == 1) x q2\n"
        "if (parity(c1) == 0) rz(pi*1) q2\n");
}

TEST(Emit, alg2_contains_pi_half_rotation) {
    auto text = emit(build_alg2(derive_params(2)).circuit);
    EXPECT_NE(text.find("crz(pi*1/2) q0, q2\n"), std::string::npos);
}

TEST(RoundTrip, bytes_are_identical) {
    for (uint32_t n : {1u, 2u, 3u, 5u, 6u}) {
        for (const auto &hc : all_variants(n)) {
            auto text = emit(hc.circuit);
            auto back = parse(text);
            EXPECT_EQ(back, hc.circuit) << variant_name(hc.variant) << " n=" << n;
            EXPECT_EQ(emit(back), text);
        }
    }
}

TEST(RoundTrip, non_pi_angles_survive) {
    Circuit c(1, 0);
    for (double a : {0.1, -1e-300, 1.0 / 3.0, 6.283185307179586, 12345.678, pi_fraction(7, 1 << 20)}) {
        c.push(op::rz(a, 0));
    }
    auto back = parse(emit(c));
    for (size_t i = 0; i < c.instructions.size(); i++) {
        EXPECT_EQ(back.instructions[i].angle, c.instructions[i].angle);
    }
}

TEST(RoundTrip, parsed_circuit_runs_identically) {
    Rng rng(3);
    RunOptions opts;
    opts.merge_equivalent = true;
    for (const auto &hc : all_variants(4)) {
        auto st = random_state(4, rng);
        HammingCircuit copy = hc;
        copy.circuit = parse(emit(hc.circuit));
        auto a = outcome_branches(hc, st, opts);
        auto b = outcome_branches(copy, st, opts);
        ASSERT_EQ(a.size(), b.size());
        for (size_t i = 0; i < a.size(); i++) {
            EXPECT_EQ(a[i].outcome, b[i].outcome);
            EXPECT_EQ(a[i].probability, b[i].probability);
            EXPECT_EQ(a[i].data_state, b[i].data_state);
        }
    }
}

TEST(Parse, header_comments_and_crlf) {
    auto c = parse("# leading comment\r\nversion 1\r\nqubits 2\r\ncbits 1\r\n\r\nh q0   # trailing\r\ncx q0, q1\r\n");
    EXPECT_EQ(c.num_qubits, 2u);
    EXPECT_EQ(c.num_cbits, 1u);
    ASSERT_EQ(c.instructions.size(), 2u);
    EXPECT_EQ(c.instructions[1], op::cx(0, 1));
}

TEST(Parse, angle_spellings) {
    auto c = parse("qubits 1\ncbits 0\nrz(pi) q0\nrz(-pi/4) q0\nrz(pi*3/8) q0\nrz(pi*2) q0\nrz(0.5) q0\nrz(-1e-3) q0\n");
    std::vector<double> want = {std::numbers::pi, pi_fraction(-1, 4), pi_fraction(3, 8), pi_fraction(2, 1), 0.5, -1e-3};
    ASSERT_EQ(c.instructions.size(), want.size());
    for (size_t i = 0; i < want.size(); i++) {
        EXPECT_EQ(c.instructions[i].angle, want[i]);
    }
}

TEST(Parse, single_bit_condition) {
    auto c = parse("qubits 2\ncbits 1\nmeasure q0 -> c0\nif (c0 == 1) x q1\n");
    ASSERT_TRUE(c.instructions[1].condition.has_value());
    EXPECT_EQ(c.instructions[1].condition->cbits, (std::vector<uint32_t>{0}));
    EXPECT_TRUE(c.instructions[1].condition->value);
}

TEST(Parse, errors_report_position) {
    expect_error_at("qubits 2\ncbits 0\nh q0\nfoo q1\n", 4, 1, "unknown mnemonic");
    expect_error_at("qubits 2\ncbits 0\ncx q0, q2\n", 3, 8, "out of range; 2 declared");
    expect_error_at("qubits 1\ncbits 0\nrz(pi/x) q0\n", 3, 4, "malformed angle");
    expect_error_at("qubits 1\ncbits 0\nrz(0.5 q0\n", 3, 4, "unterminated");
    expect_error_at("qubits 2\ncbits 1\nif (parity(c0) == 1) x q1\n", 3, 12, "read before");
    expect_error_at("qubits 1\ncbits 1\nmeasure q0 -> c0\nif (c0 == 1) measure q0 -> c0\n", 4, 14, "unitary");
    expect_error_at("qubits 1\ncbits 0\nh q0 q0\n", 3, 6, "trailing");
    expect_error_at("qubits 2\ncbits 0\ncx q1, q1\n", 3, 8, "distinct");
    expect_error_at("qubits 1\ncbits 1\nmeasure q0 -> c0\nif (c0 == 2) x q0\n", 4, 11, "0 or 1");
    expect_error_at("cbits 1\nqubits 1\n", 1, 1, "qubits");
    expect_error_at("qubits 1\n", 1, 1, "header");
    expect_error_at("", 1, 1, "header");
    expect_error_at("version 2\nqubits 1\ncbits 0\n", 1, 9, "version");
}

TEST(Parse, error_message_format) {
    try {
        parse("qubits 1\ncbits 0\nbogus q0\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(std::string(e.what()).rfind("line 3, column 1: ", 0), 0u) << e.what();
    }
}

TEST(Parse, two_level_fragment_round_trips) {
    const std::string text =
        "qubits 3\n"
        "cbits 2\n"
        "h q0\n"
        "h q1\n"
        "rz(pi*3/4) q2\n"
        "crz(pi*1/2) q0, q2\n"
        "crz(pi*1) q1, q2\n"
        "measure q1 -> c0\n"
        "if (parity(c0) == 1) rz(pi*-1/2) q0\n"
        "h q0\n"
        "measure q0 -> c1\n";
    auto c = parse(text);
    EXPECT_EQ(c.instructions.size(), 9u);
    EXPECT_EQ(c.instructions[6].angle, pi_fraction(-1, 2));
    EXPECT_EQ(emit(c), text);
}
