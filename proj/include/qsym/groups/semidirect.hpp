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

#ifndef QSYM_GROUPS_SEMIDIRECT_HPP_
#define QSYM_GROUPS_SEMIDIRECT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "qsym/perm/permutation.hpp"
#include "qsym/perm/stabilizer_chain.hpp"

namespace qsym {

// Element of M = Z_p^4 in the basis a, b, c, d (additive notation).
struct VectorElement {
  std::array<std::uint32_t, 4> c{};
  friend bool operator==(const VectorElement&, const VectorElement&) = default;
};

VectorElement vector_add(const VectorElement& x, const VectorElement& y, std::uint32_t p);
VectorElement vector_neg(const VectorElement& x, std::uint32_t p);
VectorElement vector_scale(const VectorElement& x, std::int64_t k, std::uint32_t p);

// Automorphism of Z_p^4 acting on row vectors: x -> x * matrix.
class LinearAutomorphism {
 public:
  using Matrix = Eigen::Matrix<std::int64_t, 4, 4>;

  // Entries are reduced mod p. Throws std::invalid_argument when the matrix
  // is singular mod p.
  LinearAutomorphism(const Matrix& m, std::uint32_t p);
  static LinearAutomorphism Identity(std::uint32_t p);

  const Matrix& matrix() const { return m_; }
  std::uint32_t prime() const { return p_; }
  VectorElement apply(const VectorElement& x) const;
  // Apply this, then other.
  LinearAutomorphism then(const LinearAutomorphism& other) const;
  LinearAutomorphism inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;

  friend bool operator==(const LinearAutomorphism& a, const LinearAutomorphism& b) {
    return a.p_ == b.p_ && a.m_ == b.m_;
  }

 private:
  struct Unchecked {};
  LinearAutomorphism(const Matrix& m, std::uint32_t p, Unchecked) : m_(m), p_(p) {}

  Matrix m_;
  std::uint32_t p_;
};

// Rank of an integer matrix over GF(p).
std::size_t rank_mod_p(LinearAutomorphism::Matrix m, std::uint32_t p);

// a -> b -> c -> d -> e = -(a+b+c+d). Throws std::invalid_argument for p == 5
// unless allow_five is set, and for p not an odd prime.
LinearAutomorphism letter_cycle_automorphism(std::uint32_t p, bool allow_five = false);
// True iff x -> x*auto has no nonzero fixed vector.
bool is_fixed_point_free(const LinearAutomorphism& autom);

// Letters of Delta and Delta^-1 as points 0..9: a..e then a^-1..e^-1.
enum Letter10 : Point { kA = 0, kB, kC, kD, kE, kAi, kBi, kCi, kDi, kEi };
VectorElement letter_vector(Point letter, std::uint32_t p);

// L = <A_Delta, beta> on Delta u Delta^-1, with the named elements of the
// construction.
struct LGroup {
  std::vector<Permutation> a_delta_generators;
  Permutation alpha;  // (a,b,c,d,e)
  Permutation beta;   // (a,b^-1,d,c^-1)(a^-1,b,d^-1,c)(e,e^-1)
  Permutation gamma;  // (a,b)(c,d)
  StabilizerChain chain;
  StabilizerChain a_delta;
};
LGroup build_L();
// Linear map of M induced by a letter permutation (images of a, b, c, d).
LinearAutomorphism twist_matrix(const Permutation& delta, std::uint32_t p);

// x delta with x in M, delta in L. Product (x,d)(y,e) = (x + y^{d^-1}, de),
// which encodes x delta = delta x^delta.
struct SemidirectElement {
  VectorElement x;
  std::uint8_t twist = 0;  // index into SemidirectGroup::twists()
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

class SemidirectGroup {
 public:
  // Throws std::invalid_argument unless p is an odd prime below 2^15.
  explicit SemidirectGroup(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  BigInt order() const;
  const LGroup& L() const { return l_; }
  const std::vector<Permutation>& twists() const { return twists_; }
  const LinearAutomorphism& twist_map(std::uint8_t t) const { return maps_[t]; }

  SemidirectElement identity() const { return {}; }
  SemidirectElement multiply(const SemidirectElement& g, const SemidirectElement& h) const;
  SemidirectElement inverse(const SemidirectElement& g) const;
  SemidirectElement power(const SemidirectElement& g, std::int64_t k) const;
  SemidirectElement conjugate(const SemidirectElement& g, const SemidirectElement& h) const;
  std::uint64_t element_order(const SemidirectElement& g) const;
  std::uint64_t hash(const SemidirectElement& g) const;

  SemidirectElement from_vector(const VectorElement& x) const { return {x, 0}; }
  // Throws std::invalid_argument when delta is not in L.
  SemidirectElement from_twist(const Permutation& delta) const;
  SemidirectElement alpha() const { return from_twist(l_.alpha); }
  SemidirectElement beta() const { return from_twist(l_.beta); }
  SemidirectElement gamma() const { return from_twist(l_.gamma); }
  // u = a b^-1 c^-1 d.
  SemidirectElement u() const;
  std::vector<SemidirectElement> m_generators() const;
  // Generators a, b, c, d, alpha, beta, gamma of G.
  std::vector<SemidirectElement> generators() const;
  // H = <alpha, beta> as an explicit element list.
  std::vector<SemidirectElement> h_elements() const;

  // Key of the right coset H g: (index of H delta among the 6 cosets of H in
  // L, x^delta), packed into 64 bits.
  std::uint64_t coset_key(const SemidirectElement& g) const;

 private:
  std::uint32_t p_;
  LGroup l_;
  std::vector<Permutation> twists_;
  std::vector<LinearAutomorphism> maps_;
  std::vector<std::uint8_t> mul_;  // 120 x 120
  std::vector<std::uint8_t> inv_;
  std::vector<std::uint8_t> h_coset_;
};

}  // namespace qsym

#endif  // QSYM_GROUPS_SEMIDIRECT_HPP_
