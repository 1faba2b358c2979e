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

#include "qsym/groups/finite_field.hpp"

#include <stdexcept>

namespace qsym {

namespace {

// Product of polynomials over GF(p) given as base-p digit strings, reduced
// modulo the monic polynomial `modulus` of degree k (low coefficients only).
std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t k,
                       const std::vector<std::uint32_t>& modulus) {
  std::vector<std::uint32_t> x(k), y(k), r(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    x[i] = a % p;
    a /= p;
    y[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
  }
  for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    // t^k = -sum modulus[i] t^i.
    for (std::uint32_t i = 0; i < k; ++i) r[d - k + i] = (r[d - k + i] + (p - c) * modulus[i]) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = k; i-- > 0;) out = out * p + r[i];
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q < 2 || q >= 4096) throw std::invalid_argument("FiniteField: order out of range");
  p_ = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p_ = d;
      break;
    }
  }
  k_ = 0;
  for (std::uint32_t r = q; r > 1; r /= p_) {
    if (r % p_ != 0) throw std::invalid_argument("FiniteField: order is not a prime power");
    ++k_;
  }
  add_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      std::uint32_t x = a, y = b, out = 0, place = 1;
      for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
      }
      add_[a * q + b] = out;
      if (out == 0) neg_[a] = b;
    }
  }
  // Search monic polynomials of degree k for one whose root t has
  // multiplicative order q-1 (a primitive polynomial).
  std::vector<std::uint32_t> modulus(k_);
  std::uint32_t tries = 1;
  for (std::uint32_t i = 0; i < k_; ++i) tries *= p_;
  const std::uint32_t t = k_ == 1 ? 0 : p_;  // the element "t"
  for (std::uint32_t code = 0; code < tries; ++code) {
    std::uint32_t c = code;
    for (std::uint32_t i = 0; i < k_; ++i) {
      modulus[i] = c % p_;
      c /= p_;
    }
    if (modulus[0] == 0) continue;
    const std::vector<std::uint32_t> mod = modulus;
    // For k == 1 use a primitive residue instead of t.
    std::vector<std::uint32_t> candidates;
    if (k_ == 1) {
      for (std::uint32_t g = 1; g < q; ++g) candidates.push_back(g);
    } else {
      candidates.push_back(t);
    }
    for (std::uint32_t g : candidates) {
      exp_.assign(q - 1, 0);
      log_.assign(q, 0);
      std::uint32_t v = 1;
      bool ok = true;
      for (std::uint32_t e = 0; e < q - 1; ++e) {
        if (e > 0 && v == 1) {
          ok = false;
          break;
        }
        exp_[e] = v;
        log_[v] = e;
        v = poly_mul(v, g, p_, k_, mod);
      }
      if (ok && v == 1) return;
    }
    if (k_ == 1) break;
  }
  throw std::logic_error("FiniteField: no primitive polynomial found");
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Elem FiniteField::frobenius(Elem a, std::uint32_t j) const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < j; ++i) e *= p_;
  return pow(a, e);
}

}  // namespace qsym
