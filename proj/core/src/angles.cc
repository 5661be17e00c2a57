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

#include "hwproj/angles.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hwproj {

double pi_fraction(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("pi_fraction with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

std::optional<PiFraction> as_pi_fraction(double angle, int64_t max_den) {
    if (!std::isfinite(angle)) {
        return std::nullopt;
    }
    if (angle == 0) {
        return PiFraction{0, 1};
    }
    double x = angle / std::numbers::pi;
    if (std::abs(x) > 1e12) {
        return std::nullopt;
    }
    // Continued-fraction convergents of angle/pi; accept the first one that
    // maps back to exactly the same double.
    int64_t h_prev = 1, h = static_cast<int64_t>(std::floor(x));
    int64_t k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64; iter++) {
        for (int64_t adj : {int64_t{0}, int64_t{-1}, int64_t{1}}) {
            int64_t p = h + adj * k;
            if (k <= max_den && pi_fraction(p, k) == angle) {
                int64_t g = std::gcd(p, k);
                return PiFraction{p / (g ? g : 1), k / (g ? g : 1)};
            }
        }
        if (frac < 1e-15) {
            break;
        }
        double inv = 1 / frac;
        double a_real = std::floor(inv);
        frac = inv - a_real;
        if (a_real > 1e12) {
            break;
        }
        auto a = static_cast<int64_t>(a_real);
        int64_t h_next = a * h + h_prev;
        int64_t k_next = a * k + k_prev;
        if (k_next > max_den) {
            break;
        }
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return std::nullopt;
}

std::string format_angle(double angle) {
    if (angle == 0) {
        return "0";
    }
    if (auto f = as_pi_fraction(angle)) {
        if (f->den == 1) {
            return "pi*" + std::to_string(f->num);
        }
        return "pi*" + std::to_string(f->num) + "/" + std::to_string(f->den);
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

namespace {

std::optional<int64_t> parse_int(std::string_view text) {
    if (!text.empty() && text.front() == '+') {
        return std::nullopt;
    }
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace

std::optional<double> parse_angle(std::string_view text) {
    bool negate = false;
    std::string_view rest = text;
    if (rest.starts_with("-pi")) {
        negate = true;
        rest.remove_prefix(1);
    }
    if (rest.starts_with("pi")) {
        rest.remove_prefix(2);
        int64_t num = 1, den = 1;
        if (rest.starts_with("*")) {
            rest.remove_prefix(1);
            auto slash = rest.find('/');
            auto p = parse_int(rest.substr(0, slash));
            if (!p) {
                return std::nullopt;
            }
            num = *p;
            rest = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash);
        }
        if (rest.starts_with("/")) {
            auto q = parse_int(rest.substr(1));
            if (!q || *q <= 0) {
                return std::nullopt;
            }
            den = *q;
        } else if (!rest.empty()) {
            return std::nullopt;
        }
        return pi_fraction(negate ? -num : num, den);
    }
    if (text.empty() || text.front() == '+') {
        return std::nullopt;
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

}  // namespace hwproj
