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

#include "qsym/verify/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsym/groups/classical.hpp"

namespace qsym {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::uint32_t multiplicative_order_mod(std::uint64_t q, std::uint32_t r) {
  if (r < 2 || std::gcd(q, std::uint64_t{r}) != 1) {
    throw std::invalid_argument("multiplicative_order_mod: q not invertible mod " + std::to_string(r));
  }
  std::uint64_t x = q % r;
  std::uint32_t d = 1;
  while (x != 1) {
    x = x * q % r;
    ++d;
  }
  return d;
}

namespace {

void check_parameters(std::uint32_t q, std::span<const std::uint32_t> parts, std::size_t expected_parts,
                      const char* who) {
  if (!is_prime_power(q) || q % 5 == 0) {
    throw std::invalid_argument(std::string(who) + ": q must be a prime power prime to 5");
  }
  if (parts.size() != expected_parts) {
    throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(expected_parts) + " parts");
  }
  if (std::accumulate(parts.begin(), parts.end(), std::uint64_t{0}) == 0) {
    throw std::invalid_argument(std::string(who) + ": parts are all zero");
  }
}

BigInt exact_divide(const BigInt& a, const BigInt& b, const char* who) {
  if (a % b != 0) throw std::logic_error(std::string(who) + ": non-integral value");
  return a / b;
}

}  // namespace

CentralizerFormula psl_centralizer_formula(std::uint32_t q, std::uint32_t e, std::span<const std::uint32_t> parts) {
  const std::uint32_t i = q % 5 == 0 ? 0 : multiplicative_order_mod(q, 5);
  check_parameters(q, parts, 4 / std::max<std::uint32_t>(i, 1), "psl_centralizer_formula");
  CentralizerFormula out;
  const BigInt qi = boost::multiprecision::pow(BigInt(q), i);
  BigInt c = gl_order(e, BigInt(q));
  out.n = e;
  for (auto a : parts) {
    c *= gl_order(a, qi);
    out.n += i * a;
  }
  out.group_order = exact_divide(c, BigInt(q - 1), "psl_centralizer_formula");
  out.simple_order = exact_divide(out.group_order, BigInt(std::gcd(out.n, q - 1)), "psl_centralizer_formula");
  return out;
}

CentralizerFormula psu_centralizer_formula(std::uint32_t q, std::uint32_t e, std::span<const std::uint32_t> parts) {
  const std::uint32_t i = q % 5 == 0 ? 0 : multiplicative_order_mod(q, 5);
  const std::uint32_t b = std::max<std::uint32_t>(i % 2 == 1 ? i : i / 2, 1);
  const std::uint32_t s = 4 / b;
  check_parameters(q, parts, s / 2, "psu_centralizer_formula");
  CentralizerFormula out;
  const BigInt q2b = boost::multiprecision::pow(BigInt(q), 2 * b);
  BigInt c = gu_order(e, BigInt(q));
  out.n = e;
  for (auto a : parts) {
    c *= gl_order(a, q2b);
    out.n += 2 * b * a;
  }
  out.group_order = exact_divide(c, BigInt(q + 1), "psu_centralizer_formula");
  out.simple_order = exact_divide(out.group_order, BigInt(std::gcd(out.n, q + 1)), "psu_centralizer_formula");
  return out;
}

}  // namespace qsym
