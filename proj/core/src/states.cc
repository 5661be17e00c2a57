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

#include "hwproj/states.h"

#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwproj/angles.h"

namespace hwproj {

namespace {

void check_size(uint32_t n) {
    if (n < 1 || n > 30) {
        throw std::invalid_argument("named states need 1 <= n <= 30, got " + std::to_string(n));
    }
}

StateVector from_terms(uint32_t n, const std::vector<std::pair<uint64_t, double>> &terms) {
    std::vector<Amp> amps(size_t{1} << n);
    for (const auto &[b, a] : terms) {
        amps[b] += a;
    }
    return StateVector::normalized(n, std::move(amps));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

StateVector zeros_state(uint32_t n) {
    check_size(n);
    return StateVector(n);
}

StateVector ones_state(uint32_t n) {
    check_size(n);
    return StateVector::basis(n, (uint64_t{1} << n) - 1);
}

StateVector ghz_state(uint32_t n) {
    check_size(n);
    return from_terms(n, {{0, 1.0}, {(uint64_t{1} << n) - 1, 1.0}});
}

StateVector w_state(uint32_t n) {
    check_size(n);
    std::vector<std::pair<uint64_t, double>> terms;
    for (uint32_t q = 0; q < n; q++) {
        terms.push_back({uint64_t{1} << q, 1.0});
    }
    return from_terms(n, terms);
}

StateVector bell_pair_product(uint32_t n) {
    check_size(n);
    if (n % 2 != 0) {
        throw std::invalid_argument("bellpair-product needs an even n, got " + std::to_string(n));
    }
    StateVector bell = from_terms(2, {{0, 1.0}, {3, 1.0}});
    StateVector out = bell;
    for (uint32_t i = 2; i < n; i += 2) {
        out = tensor(out, bell);
    }
    return out;
}

StateVector ry_product(uint32_t n, double theta) {
    check_size(n);
    StateVector one = from_terms(1, {{0, std::cos(theta / 2)}, {1, std::sin(theta / 2)}});
    StateVector out = one;
    for (uint32_t i = 1; i < n; i++) {
        out = tensor(out, one);
    }
    return out;
}

StateVector intro3_state() {
    return from_terms(3, {{0b000, 1.0}, {0b001, 1.0}, {0b010, 1.0}, {0b111, 1.0}});
}

StateVector sqrt3_pair_state() {
    return from_terms(2, {{0b00, std::sqrt(3.0)}, {0b11, 1.0}});
}

StateVector named_state(std::string_view name, uint32_t n) {
    auto need = [&](uint32_t want) {
        if (n != want) {
            throw std::invalid_argument(
                std::string(name) + " is a " + std::to_string(want) + "-qubit state, but n = " + std::to_string(n));
        }
    };
    if (name == "zeros") {
        return zeros_state(n);
    }
    if (name == "ones") {
        return ones_state(n);
    }
    if (name == "ghz") {
        return ghz_state(n);
    }
    if (name == "w") {
        return w_state(n);
    }
    if (name == "bellpair-product") {
        return bell_pair_product(n);
    }
    if (name == "intro3") {
        need(3);
        return intro3_state();
    }
    if (name == "sqrt3-pair") {
        need(2);
        return sqrt3_pair_state();
    }
    if (name.starts_with("ry(") && name.ends_with(")-product")) {
        auto inner = name.substr(3, name.size() - 3 - 9);
        if (auto theta = parse_angle(inner)) {
            return ry_product(n, *theta);
        }
        throw std::invalid_argument("bad angle in state name: " + std::string(name));
    }
    throw std::invalid_argument("unknown state: " + std::string(name));
}

StateVector parse_amplitudes(std::string_view text) {
    std::vector<Amp> amps;
    size_t line_no = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        double parts[2] = {0, 0};
        int count = 0;
        while (!line.empty()) {
            auto sp = line.find_first_of(" \t");
            auto tok = line.substr(0, sp);
            line = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
            double v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (count == 2 || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
                throw std::invalid_argument(
                    "amplitude file line " + std::to_string(line_no) + ": expected `re im`, got `" + std::string(tok) +
                    "`");
            }
            parts[count++] = v;
        }
        amps.emplace_back(parts[0], parts[1]);
    }
    if (amps.empty() || (amps.size() & (amps.size() - 1)) != 0) {
        throw std::invalid_argument(
            "amplitude file has " + std::to_string(amps.size()) + " entries; expected a power of two");
    }
    auto n = static_cast<uint32_t>(std::countr_zero(amps.size()));
    double norm = 0;
    for (const auto &a : amps) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1) > 1e-6) {
        throw std::invalid_argument("amplitude file is not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
    return StateVector::normalized(n, std::move(amps));
}

}  // namespace hwproj
