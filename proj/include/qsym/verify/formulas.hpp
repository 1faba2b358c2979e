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

#ifndef QSYM_VERIFY_FORMULAS_HPP_
#define QSYM_VERIFY_FORMULAS_HPP_

#include <cstdint>
#include <span>

#include "qsym/perm/stabilizer_chain.hpp"

namespace qsym {

bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t q);
// Least d >= 1 with r | q^d - 1. Throws std::invalid_argument when r divides q.
std::uint32_t multiplicative_order_mod(std::uint64_t q, std::uint32_t r);

// Centralizer order of a semisimple order-5 element in the inner-diagonal
// group G and in the simple group T = G / (scalars), |C_T| = |C_G| / (n, .).
struct CentralizerFormula {
  std::uint32_t n = 0;  // dimension e + (block size) * sum(parts)
  BigInt group_order;   // |C_G(x)|
  BigInt simple_order;  // |C_T(x)|
};

// (q-1)^-1 |GL_e(q)| prod_{j=1..t} |GL_{a_j}(q^i)| with i the order of q mod 5
// and t = 4 / i parts. Throws std::invalid_argument unless q is a prime power
// prime to 5, parts has t entries and they are not all zero.
CentralizerFormula psl_centralizer_formula(std::uint32_t q, std::uint32_t e, std::span<const std::uint32_t> parts);

// (q+1)^-1 |GU_e(q)| prod_{j=1..s/2} |GL_{a_j}(q^{2b})| with b = i for odd i
// and i/2 for even i, s = 4 / b and n = e + 2b sum(parts). The product and
// the dimension both run over the s/2 entries of parts.
CentralizerFormula psu_centralizer_formula(std::uint32_t q, std::uint32_t e, std::span<const std::uint32_t> parts);

}  // namespace qsym

#endif  // QSYM_VERIFY_FORMULAS_HPP_
