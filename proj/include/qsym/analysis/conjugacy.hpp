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

#ifndef QSYM_ANALYSIS_CONJUGACY_HPP_
#define QSYM_ANALYSIS_CONJUGACY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "qsym/perm/permutation.hpp"
#include "qsym/perm/stabilizer_chain.hpp"

namespace qsym {

// Thrown when a class enumeration would exceed its memory cap.
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultClassMemoryCap = std::size_t{1} << 30;

// The conjugacy class of x in the group of `chain`, enumerated breadth-first
// under conjugation by the chain's generators.
//
// Each class element is stored as its images of the chain's base points,
// which determine it uniquely; full permutations are rebuilt from the chain's
// transversals on demand. A parent pointer per element gives transporters.
class ConjugacyClass {
 public:
  // Throws std::invalid_argument when x is not in the group or the degree
  // exceeds 65535, CapacityExceeded when the estimated footprint passes
  // memory_cap.
  ConjugacyClass(const StabilizerChain& chain, const Permutation& x,
                 std::size_t memory_cap = kDefaultClassMemoryCap);

  ConjugacyClass(const ConjugacyClass&) = delete;
  ConjugacyClass& operator=(const ConjugacyClass&) = delete;

  std::size_t size() const { return parent_.size(); }
  const Permutation& representative() const { return x_; }
  Permutation element(std::size_t i) const;
  // Uses internal scratch space; not safe to call concurrently.
  std::optional<std::size_t> index_of(const Permutation& y) const;
  // t with x^t == element(i).
  Permutation transporter(std::size_t i) const;
  // Bytes held by the enumeration, estimated.
  std::size_t footprint() const;

  // C_G(x), built from Schreier generators of the conjugation action until
  // its order reaches |G| / size().
  StabilizerChain centralizer() const;

 private:
  struct SlotHash {
    const ConjugacyClass* owner;
    std::size_t operator()(std::uint32_t slot) const;
  };
  struct SlotEq {
    const ConjugacyClass* owner;
    bool operator()(std::uint32_t a, std::uint32_t b) const;
  };

  const std::uint16_t* images(std::size_t slot) const { return images_.data() + slot * base_.size(); }
  void encode(const Permutation& y);  // writes into the scratch slot
  Permutation decode(std::size_t slot) const;

  const StabilizerChain* chain_;
  Permutation x_;
  std::vector<Point> base_;
  std::vector<std::uint16_t> images_;  // size()+1 slots; the last is scratch
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> label_;
  std::unordered_set<std::uint32_t, SlotHash, SlotEq> index_;
};

std::uint64_t conjugacy_class_size(const StabilizerChain& chain, const Permutation& x,
                                   std::size_t memory_cap = kDefaultClassMemoryCap);
StabilizerChain centralizer(const StabilizerChain& chain, const Permutation& x,
                            std::size_t memory_cap = kDefaultClassMemoryCap);
// N_G(<g>): C_G(g) together with one transporter g -> g^k for every k prime to
// o(g) with g^k conjugate to g. Throws std::logic_error if the result fails
// its order check.
StabilizerChain normalizer_cyclic(const StabilizerChain& chain, const Permutation& g,
                                  std::size_t memory_cap = kDefaultClassMemoryCap);

}  // namespace qsym

#endif  // QSYM_ANALYSIS_CONJUGACY_HPP_
