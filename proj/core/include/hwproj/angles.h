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

#ifndef HWPROJ_ANGLES_H
#define HWPROJ_ANGLES_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hwproj {

/// A rational multiple of pi, p/q in lowest terms with q > 0.
struct PiFraction {
    int64_t num;
    int64_t den;

    bool operator==(const PiFraction &) const = default;
};

/// pi * p / q evaluated as `(pi * p') / q'` after reducing p/q.
///
/// Every angle the builders emit goes through this function, and the text
/// parser evaluates `pi*p/q` with it too, so a reduced fraction always maps
/// to the same double.
double pi_fraction(int64_t num, int64_t den);

/// Finds p/q with q <= max_den such that pi_fraction(p, q) reproduces
/// `angle` bit for bit. Returns nullopt if there is none.
std::optional<PiFraction> as_pi_fraction(double angle, int64_t max_den = int64_t{1} << 20);

/// Text form of an angle: `0`, `pi*p/q` (or `pi*p` when q = 1) if
/// as_pi_fraction finds an exact match, else 17 significant digits.
std::string format_angle(double angle);

/// Inverse of format_angle. Also accepts `pi`, `-pi`, `pi/q` and `-pi*p/q`.
/// Returns nullopt for anything else, including non-finite values.
std::optional<double> parse_angle(std::string_view text);

}  // namespace hwproj

#endif
