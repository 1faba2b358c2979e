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

#ifndef QSYM_ANALYSIS_STRUCTURE_HPP_
#define QSYM_ANALYSIS_STRUCTURE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qsym/perm/permutation.hpp"
#include "qsym/perm/stabilizer_chain.hpp"

namespace qsym {

// Groups up to this order are enumerated for fingerprints.
inline constexpr std::uint64_t kRecognizeLimit = 10'000;

struct GroupFingerprint {
  BigInt order;
  bool abelian = false;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // empty above kRecognizeLimit
  BigInt center_order;
  BigInt derived_order;
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const StabilizerChain& chain);

// One of Z5, Z10, Z15, Z20, D10, AGL1(5), Z2xD10, Z2xAGL1(5), S5, Z5xA4, Z5xS4,
// S4xS5, (A4xA5):Z2, or "unknown".
std::string recognize(const StabilizerChain& chain);

BigInt sylow_order(const StabilizerChain& chain, std::uint32_t prime);
inline BigInt sylow5_order(const StabilizerChain& chain) { return sylow_order(chain, 5); }

bool is_abelian(const StabilizerChain& chain);
StabilizerChain center(const StabilizerChain& chain);  // order <= kRecognizeLimit
StabilizerChain derived_subgroup(const StabilizerChain& chain);
bool is_solvable(const StabilizerChain& chain);

// The first element, in breadth-first order of products of the generators,
// whose order is divisible by n, raised to the power making its order n.
// Empty when n does not divide |G| or the search finds nothing.
std::optional<Permutation> find_element_of_order(const StabilizerChain& chain, std::uint64_t n,
                                                 std::size_t search_limit = 100'000);

}  // namespace qsym

#endif  // QSYM_ANALYSIS_STRUCTURE_HPP_
