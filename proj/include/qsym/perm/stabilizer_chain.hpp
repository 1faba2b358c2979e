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

#ifndef QSYM_PERM_STABILIZER_CHAIN_HPP_
#define QSYM_PERM_STABILIZER_CHAIN_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsym/perm/permutation.hpp"

namespace qsym {

using BigInt = boost::multiprecision::cpp_int;

// Orbit of a base point together with coset representatives u_w mapping the
// base point to w. Representatives are stored explicitly while the table fits
// the memory budget, otherwise as a Schreier vector over the level's
// generators.
class Transversal {
 public:
  Transversal() = default;
  Transversal(Point base, std::span<const Permutation> generators, std::size_t degree,
              std::size_t explicit_budget);

  Point base() const { return base_; }
  const std::vector<Point>& orbit() const { return orbit_; }
  std::size_t size() const { return orbit_.size(); }
  bool contains(Point w) const { return slot_[w] >= 0; }
  bool is_explicit() const { return !reps_.empty(); }

  // u with base^u == w. Precondition: contains(w).
  Permutation representative(Point w) const;

 private:
  Point base_ = 0;
  std::vector<Point> orbit_;
  std::vector<std::int32_t> slot_;
  std::vector<Permutation> reps_;
  // Schreier vector mode.
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> label_;
  std::vector<Permutation> generators_;
};

struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;  // strong generators fixing earlier base points
  Transversal transversal;
};

// Base and strong generating set of a permutation group, built by
// deterministic Schreier-Sims. Immutable once constructed.
class StabilizerChain {
 public:
  // Entries of explicit transversals allowed per level before falling back to
  // Schreier vectors (orbit size times degree).
  static constexpr std::size_t kDefaultExplicitBudget = std::size_t{1} << 25;

  StabilizerChain() = default;
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {},
                  std::size_t explicit_budget = kDefaultExplicitBudget);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  BigInt order() const;
  // Residue after sifting and the level where sifting stopped
  // (levels().size() when every level was passed).
  std::pair<Permutation, std::size_t> sift(const Permutation& g) const;
  bool contains(const Permutation& g) const;

  // Strong generators of the pointwise stabilizer of the first `depth` base
  // points.
  std::vector<Permutation> stabilizer_generators(std::size_t depth) const;

  Permutation random_element(std::mt19937_64& rng) const;
  // Visits every element exactly once in a fixed order.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;
  std::vector<Permutation> elements() const;

  // Re-checks every Schreier generator of every level. True for any chain
  // produced by the constructor; exposed for tests.
  bool verify() const;

 private:
  void rebuild_level(std::size_t i);

  std::size_t degree_ = 0;
  std::size_t explicit_budget_ = kDefaultExplicitBudget;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> levels_;
};

StabilizerChain build_chain(std::size_t degree, std::span<const Permutation> generators);
// Degree taken from the generators. Throws std::invalid_argument on an empty
// list (use the overload above) or mixed degrees.
StabilizerChain build_chain(std::span<const Permutation> generators);
bool contains(const StabilizerChain& chain, const Permutation& p);

// Orbit of `point` under the generated group in breadth-first discovery order.
std::vector<Point> orbit(std::span<const Permutation> generators, Point point);
// All orbits, each in discovery order, ordered by least point.
std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators, std::size_t degree);

}  // namespace qsym

#endif  // QSYM_PERM_STABILIZER_CHAIN_HPP_
