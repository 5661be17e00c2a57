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

#ifndef HWPROJ_STATES_H
#define HWPROJ_STATES_H

#include <cstdint>
#include <string_view>

#include "hwproj/state_vector.h"

namespace hwproj {

// Basis strings below are written with qubit 0 rightmost.

StateVector zeros_state(uint32_t n);
StateVector ones_state(uint32_t n);
/// (|0...0> + |1...1>)/sqrt(2).
StateVector ghz_state(uint32_t n);
/// Equal superposition of the n weight-one basis states.
StateVector w_state(uint32_t n);
/// (|00> + |11>)/sqrt(2) on qubit pairs (0,1), (2,3), ...; n must be even.
StateVector bell_pair_product(uint32_t n);
/// Ry(theta)|0> on every qubit.
StateVector ry_product(uint32_t n, double theta);
/// (|000> + |001> + |010> + |111>)/2.
StateVector intro3_state();
/// (sqrt(3)|00> + |11>)/2.
StateVector sqrt3_pair_state();

/// Resolves `zeros`, `ones`, `ghz`, `w`, `bellpair-product`, `ry(<angle>)-product`
/// (angle as accepted by parse_angle), `intro3` and `sqrt3-pair` for n qubits.
/// Throws std::invalid_argument for an unknown name or an unsupported n.
StateVector named_state(std::string_view name, uint32_t n);

/// Amplitude file: one complex amplitude per line as `re im` (or just `re`),
/// in basis-index order; blank lines and `#` comments are ignored. The line
/// count must be a power of two. A norm within 1e-6 of one is renormalized;
/// anything further off is rejected. Throws std::invalid_argument naming the
/// offending line.
StateVector parse_amplitudes(std::string_view text);

}  // namespace hwproj

#endif
