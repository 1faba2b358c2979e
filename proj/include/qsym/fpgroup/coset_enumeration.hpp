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

#ifndef QSYM_FPGROUP_COSET_ENUMERATION_HPP_
#define QSYM_FPGROUP_COSET_ENUMERATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsym/fpgroup/presentation.hpp"
#include "qsym/perm/permutation.hpp"

namespace qsym {

// Action of the generators and their inverses on the cosets of a subgroup.
// Coset 0 is the subgroup itself; the remaining cosets are numbered in
// breadth-first order over the columns, so a closed table is canonical.
class CosetTable {
 public:
  static constexpr std::uint32_t kUndefined = 0xFFFFFFFFU;

  CosetTable() = default;
  CosetTable(std::size_t generator_count, std::size_t cosets, std::vector<std::uint32_t> entries);

  std::size_t size() const { return cosets_; }
  std::size_t generator_count() const { return generators_; }
  std::size_t columns() const { return 2 * generators_; }
  std::uint32_t operator()(std::size_t coset, Letter l) const { return entries_[coset * columns() + l]; }
  // Coset reached from `coset` by reading w left to right.
  std::uint32_t trace(std::size_t coset, const Word& w) const;
  // Every entry defined, and each column inverse to its partner.
  bool is_closed() const;

 private:
  std::size_t generators_ = 0;
  std::size_t cosets_ = 0;
  std::vector<std::uint32_t> entries_;
};

enum class EnumerationStatus { kClosed, kOverflow };

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::kOverflow;
  CosetTable table;                  // empty unless closed
  std::size_t cosets_defined = 0;    // total definitions made
  std::size_t max_live_cosets = 0;
  bool closed() const { return status == EnumerationStatus::kClosed; }
};

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// Felsch-style enumeration: the first undefined entry is always filled next
// and every definition or deduction is pushed through all relator conjugates
// that start with the affected letter. A relator-tracing pass over the
// finished table closes any remaining gaps. Deterministic.
EnumerationResult todd_coxeter(const Presentation& pres, std::span<const Word> subgroup_words,
                               std::size_t max_cosets = kDefaultMaxCosets);

// One permutation per generator, acting on the cosets. Throws
// std::invalid_argument unless the table is closed.
std::vector<Permutation> regular_representation(const CosetTable& table);

// Breadth-first words w_i with trace(0, w_i) == i. Throws
// std::invalid_argument unless the table is closed.
std::vector<Word> coset_words(const CosetTable& table);

}  // namespace qsym

#endif  // QSYM_FPGROUP_COSET_ENUMERATION_HPP_
