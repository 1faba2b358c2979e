// Copyright 2026 The qsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSYM_GROUPS_TWO_GROUPS_HPP_
#define QSYM_GROUPS_TWO_GROUPS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "qsym/fpgroup/presentation.hpp"

namespace qsym {

// The 2-groups G_{2^4}, G_{2^8}, G_{2^12} generated by five involutions
// f0..f4 with f0 = (f1 f2 f3 f4)^-1, and the auxiliary class-4 group used to
// rule out nilpotency class 4.
enum class TwoGroup { kG16, kG256, kG4096, kAuxiliary };

// Presentation text with f0, e0, d0, c0 kept as generators and their defining
// products as relators, all families indexed over Z_5.
std::string two_group_presentation_text(TwoGroup which);
Presentation two_group_presentation(TwoGroup which);

// Generator permutation x_i -> x_{i+1 mod 5} for every letter family.
// Throws std::invalid_argument when a generator name is not of the form
// <letter><digit 0-4>.
std::vector<std::size_t> shift_map(const Presentation& pres);

// The connection set {f1, f2, f3, f4, (f1 f2 f3 f4)^-1} as words.
std::vector<Word> two_group_connection_set(const Presentation& pres);

}  // namespace qsym

#endif  // QSYM_GROUPS_TWO_GROUPS_HPP_
