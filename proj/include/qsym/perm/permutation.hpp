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

#ifndef QSYM_PERM_PERMUTATION_HPP_
#define QSYM_PERM_PERMUTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

using Point = std::uint32_t;

// A bijection of {0, ..., degree-1} stored as its image array.
//
// Products are read left to right: (p * q)[i] == q[p[i]], i.e. p is applied
// first. This is the convention of right actions, and the whole library uses
// it: a group element g sends the point i to i^g == g[i].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation Identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  bool fixes(Point i) const { return images_[i] == i; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);
  friend Permutation from_images_unchecked(std::vector<Point> images);

  std::vector<Point> images_;
};

// Builds a permutation without the bijection check. For hot paths whose
// images are bijective by construction.
Permutation from_images_unchecked(std::vector<Point> images);

// Apply p, then q. Throws std::invalid_argument on a degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::int64_t k);
// g^h = h^-1 g h.
Permutation conjugate(const Permutation& g, const Permutation& h);
// [g, h] = g^-1 h^-1 g h.
Permutation commutator(const Permutation& g, const Permutation& h);

// Least k >= 1 with p^k = 1. Throws std::overflow_error past 64 bits.
std::uint64_t element_order(const Permutation& p);

// Disjoint cycles of length >= 2, each starting at its least point, ordered
// by that point.
std::vector<std::vector<Point>> cycles(const Permutation& p);
// Multiset of all cycle lengths including fixed points, ascending.
std::vector<std::size_t> cycle_type(const Permutation& p);
std::size_t fixed_point_count(const Permutation& p);

// 1-based cycle notation, e.g. "(1,3)(4,5)". Whitespace is ignored; "()" is
// the identity. Throws std::invalid_argument on malformed text, repeated
// points or points beyond `degree`.
Permutation parse_cycles(std::string_view text, std::size_t degree);
// Degree inferred as the largest point mentioned (at least 1).
Permutation parse_cycles(std::string_view text);
std::string to_cycle_string(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace qsym

#endif  // QSYM_PERM_PERMUTATION_HPP_
