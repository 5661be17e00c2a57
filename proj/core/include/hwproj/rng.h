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

#ifndef HWPROJ_RNG_H
#define HWPROJ_RNG_H

#include <cstdint>
#include <optional>
#include <random>

namespace hwproj {

/// Seeded random source used for measurement sampling and random states.
///
/// The raw bit stream is std::mt19937_64, whose output sequence is fixed by
/// the C++ standard. Uniform and normal variates are derived here instead of
/// through <random> distributions, whose outputs differ between standard
/// library implementations. Same seed, same numbers, on every platform.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal variate (Box-Muller, both outputs used).
    double normal();

   private:
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

}  // namespace hwproj

#endif
