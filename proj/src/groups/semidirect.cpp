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

#include "qsym/groups/semidirect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qsym {

namespace {

std::uint32_t mod(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (std::uint32_t e = p - 2; e > 0; e >>= 1U) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

}  // namespace

VectorElement vector_add(const VectorElement& x, const VectorElement& y, std::uint32_t p) {
  VectorElement out;
  for (int i = 0; i < 4; ++i) out.c[i] = (x.c[i] + y.c[i]) % p;
  return out;
}

VectorElement vector_neg(const VectorElement& x, std::uint32_t p) {
  VectorElement out;
  for (int i = 0; i < 4; ++i) out.c[i] = (p - x.c[i]) % p;
  return out;
}

VectorElement vector_scale(const VectorElement& x, std::int64_t k, std::uint32_t p) {
  VectorElement out;
  for (int i = 0; i < 4; ++i) out.c[i] = mod(k * static_cast<std::int64_t>(x.c[i]), p);
  return out;
}

std::size_t rank_mod_p(LinearAutomorphism::Matrix m, std::uint32_t p) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = mod(m(i, j), p);
  }
  std::size_t rank = 0;
  for (int col = 0; col < 4 && rank < 4; ++col) {
    int pivot = -1;
    for (int r = static_cast<int>(rank); r < 4; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(static_cast<int>(rank)));
    const std::int64_t inv = inverse_mod(m(static_cast<int>(rank), col), p);
    for (int r = 0; r < 4; ++r) {
      if (r == static_cast<int>(rank) || m(r, col) == 0) continue;
      const std::int64_t factor = m(r, col) * inv % p;
      for (int c = 0; c < 4; ++c) m(r, c) = mod(m(r, c) - factor * m(static_cast<int>(rank), c), p);
    }
    ++rank;
  }
  return rank;
}

LinearAutomorphism::LinearAutomorphism(const Matrix& m, std::uint32_t p) : m_(m), p_(p) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m_(i, j) = mod(m_(i, j), p);
  }
  if (rank_mod_p(m_, p) != 4) throw std::invalid_argument("LinearAutomorphism: singular matrix");
}

LinearAutomorphism LinearAutomorphism::Identity(std::uint32_t p) { return {Matrix::Identity(), p, Unchecked{}}; }

VectorElement LinearAutomorphism::apply(const VectorElement& x) const {
  VectorElement out;
  for (int j = 0; j < 4; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < 4; ++i) s += static_cast<std::int64_t>(x.c[i]) * m_(i, j);
    out.c[j] = mod(s, p_);
  }
  return out;
}

LinearAutomorphism LinearAutomorphism::then(const LinearAutomorphism& other) const {
  Matrix prod = m_ * other.m_;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) prod(i, j) = mod(prod(i, j), p_);
  }
  return {prod, p_, Unchecked{}};
}

LinearAutomorphism LinearAutomorphism::inverse() const {
  // Gauss-Jordan on [m | I].
  Eigen::Matrix<std::int64_t, 4, 8> aug;
  aug.leftCols<4>() = m_;
  aug.rightCols<4>() = Matrix::Identity();
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (aug(pivot, col) == 0) ++pivot;
    aug.row(pivot).swap(aug.row(col));
    const std::int64_t inv = inverse_mod(aug(col, col), p_);
    for (int c = 0; c < 8; ++c) aug(col, c) = aug(col, c) * inv % p_;
    for (int r = 0; r < 4; ++r) {
      if (r == col || aug(r, col) == 0) continue;
      const std::int64_t factor = aug(r, col);
      for (int c = 0; c < 8; ++c) aug(r, c) = mod(aug(r, c) - factor * aug(col, c), p_);
    }
  }
  return {aug.rightCols<4>(), p_, Unchecked{}};
}

bool LinearAutomorphism::is_identity() const { return m_ == Matrix::Identity(); }

std::uint64_t LinearAutomorphism::order() const {
  LinearAutomorphism power = *this;
  for (std::uint64_t k = 1; k <= 10'000'000; ++k) {
    if (power.is_identity()) return k;
    power = power.then(*this);
  }
  throw std::overflow_error("LinearAutomorphism::order: too large");
}

LinearAutomorphism letter_cycle_automorphism(std::uint32_t p, bool allow_five) {
  if (!is_odd_prime(p)) throw std::invalid_argument("letter_cycle_automorphism: p must be an odd prime");
  if (p == 5 && !allow_five) throw std::invalid_argument("letter_cycle_automorphism: p = 5 is excluded");
  LinearAutomorphism::Matrix m;
  m << 0, 1, 0, 0,  //
      0, 0, 1, 0,   //
      0, 0, 0, 1,   //
      -1, -1, -1, -1;
  return LinearAutomorphism(m, p);
}

bool is_fixed_point_free(const LinearAutomorphism& autom) {
  return rank_mod_p(autom.matrix() - LinearAutomorphism::Matrix::Identity(), autom.prime()) == 4;
}

VectorElement letter_vector(Point letter, std::uint32_t p) {
  VectorElement v;
  const Point base = letter % 5;
  if (base < 4) {
    v.c[base] = 1;
  } else {
    v.c = {p - 1, p - 1, p - 1, p - 1};
  }
  return letter >= 5 ? vector_neg(v, p) : v;
}

LGroup build_L() {
  LGroup l;
  l.alpha = parse_cycles("(1,2,3,4,5)(6,7,8,9,10)", 10);
  l.a_delta_generators = {l.alpha, parse_cycles("(1,2,3)(6,7,8)", 10)};
  l.beta = parse_cycles("(1,7,4,8)(6,2,9,3)(5,10)", 10);
  l.gamma = parse_cycles("(1,2)(3,4)(6,7)(8,9)", 10);
  auto gens = l.a_delta_generators;
  gens.push_back(l.beta);
  l.chain = build_chain(gens);
  l.a_delta = build_chain(l.a_delta_generators);
  return l;
}

LinearAutomorphism twist_matrix(const Permutation& delta, std::uint32_t p) {
  LinearAutomorphism::Matrix m;
  for (int i = 0; i < 4; ++i) {
    const VectorElement row = letter_vector(delta[i], p);
    for (int j = 0; j < 4; ++j) m(i, j) = row.c[j];
  }
  return LinearAutomorphism(m, p);
}

SemidirectGroup::SemidirectGroup(std::uint32_t p) : p_(p), l_(build_L()) {
  if (!is_odd_prime(p) || p >= (1U << 15)) throw std::invalid_argument("SemidirectGroup: p must be an odd prime");
  twists_ = l_.chain.elements();
  std::sort(twists_.begin(), twists_.end());
  const std::size_t n = twists_.size();
  std::map<Permutation, std::uint8_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(twists_[i], static_cast<std::uint8_t>(i));
  mul_.resize(n * n);
  inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    maps_.push_back(twist_matrix(twists_[i], p));
    inv_[i] = index.at(qsym::inverse(twists_[i]));
    for (std::size_t j = 0; j < n; ++j) mul_[i * n + j] = index.at(twists_[i] * twists_[j]);
  }
  // Right cosets H delta of H = <alpha, beta> in L, numbered in order of
  // their least element.
  const auto h_chain = build_chain(std::vector<Permutation>{l_.alpha, l_.beta});
  const auto h = h_chain.elements();
  h_coset_.assign(n, 0xFF);
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (h_coset_[i] != 0xFF) continue;
    for (const auto& e : h) h_coset_[index.at(e * twists_[i])] = next;
    ++next;
  }
}

BigInt SemidirectGroup::order() const {
  return l_.chain.order() * boost::multiprecision::pow(BigInt(p_), 4);
}

SemidirectElement SemidirectGroup::multiply(const SemidirectElement& g, const SemidirectElement& h) const {
  return {vector_add(g.x, maps_[inv_[g.twist]].apply(h.x), p_),
          mul_[static_cast<std::size_t>(g.twist) * twists_.size() + h.twist]};
}

SemidirectElement SemidirectGroup::inverse(const SemidirectElement& g) const {
  return {vector_neg(maps_[g.twist].apply(g.x), p_), inv_[g.twist]};
}

SemidirectElement SemidirectGroup::power(const SemidirectElement& g, std::int64_t k) const {
  SemidirectElement base = k < 0 ? inverse(g) : g;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  SemidirectElement out = identity();
  while (e > 0) {
    if (e & 1U) out = multiply(out, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  return out;
}

SemidirectElement SemidirectGroup::conjugate(const SemidirectElement& g, const SemidirectElement& h) const {
  return multiply(multiply(inverse(h), g), h);
}

std::uint64_t SemidirectGroup::element_order(const SemidirectElement& g) const {
  SemidirectElement x = g;
  for (std::uint64_t k = 1;; ++k) {
    if (x == identity()) return k;
    x = multiply(x, g);
  }
}

std::uint64_t SemidirectGroup::hash(const SemidirectElement& g) const {
  std::uint64_t h = g.twist;
  for (auto c : g.x.c) h = h * p_ + c;
  return h;
}

SemidirectElement SemidirectGroup::from_twist(const Permutation& delta) const {
  auto it = std::lower_bound(twists_.begin(), twists_.end(), delta);
  if (it == twists_.end() || *it != delta) throw std::invalid_argument("SemidirectGroup: twist not in L");
  return {VectorElement{}, static_cast<std::uint8_t>(it - twists_.begin())};
}

SemidirectElement SemidirectGroup::u() const {
  VectorElement v;
  v.c = {1, p_ - 1, p_ - 1, 1};
  return from_vector(v);
}

std::vector<SemidirectElement> SemidirectGroup::m_generators() const {
  std::vector<SemidirectElement> out;
  for (Point l = kA; l <= kD; ++l) out.push_back(from_vector(letter_vector(l, p_)));
  return out;
}

std::vector<SemidirectElement> SemidirectGroup::generators() const {
  auto out = m_generators();
  out.push_back(alpha());
  out.push_back(beta());
  out.push_back(gamma());
  return out;
}

std::vector<SemidirectElement> SemidirectGroup::h_elements() const {
  std::vector<SemidirectElement> out;
  for (const auto& e : build_chain(std::vector<Permutation>{l_.alpha, l_.beta}).elements()) {
    out.push_back(from_twist(e));
  }
  return out;
}

std::uint64_t SemidirectGroup::coset_key(const SemidirectElement& g) const {
  const VectorElement y = maps_[g.twist].apply(g.x);
  std::uint64_t key = h_coset_[g.twist];
  for (auto c : y.c) key = key * p_ + c;
  return key;
}

}  // namespace qsym
