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

#ifndef QSYM_GROUPS_FINITE_FIELD_HPP_
#define QSYM_GROUPS_FINITE_FIELD_HPP_

#include <cstdint>
#include <vector>

namespace qsym {

// GF(q) for a small prime power q, elements encoded as 0..q-1 (base-p digits
// of the polynomial coefficients). Arithmetic is by lookup table.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Throws std::invalid_argument unless q is a prime power below 2^12.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // Generator of the multiplicative group.
  Elem primitive() const { return exp_[1 % (q_ - 1)]; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  // Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  // Frobenius power a^(p^j).
  Elem frobenius(Elem a, std::uint32_t j) const;

 private:
  std::uint32_t q_, p_, k_;
  std::vector<Elem> add_, neg_, exp_, log_;
};

}  // namespace qsym

#endif  // QSYM_GROUPS_FINITE_FIELD_HPP_
