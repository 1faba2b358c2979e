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

#ifndef QSYM_FPGROUP_PRESENTATION_HPP_
#define QSYM_FPGROUP_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/perm/permutation.hpp"

namespace qsym {

// Generator g is the letter 2g, its inverse the letter 2g+1.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

constexpr Letter generator_letter(std::size_t g) { return static_cast<Letter>(2 * g); }
constexpr Letter inverse_letter(Letter l) { return l ^ 1U; }
constexpr std::size_t letter_generator(Letter l) { return l >> 1U; }
constexpr bool is_inverse_letter(Letter l) { return (l & 1U) != 0; }

Word inverse_word(const Word& w);
Word free_reduce(const Word& w);
// Free and cyclic reduction.
Word cyclically_reduce(const Word& w);
// [x, y] = x^-1 y^-1 x y.
Word commutator_word(const Word& x, const Word& y);
Word power_word(const Word& w, std::int64_t k);

class Presentation {
 public:
  Presentation() = default;
  // Throws std::invalid_argument on duplicate names or relators that mention
  // letters beyond the generator count. Relators are stored freely reduced;
  // empty ones are dropped.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  std::string word_to_string(const Word& w) const;
  // Text form accepted by parse_presentation.
  std::string to_string() const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

// Word syntax: products with '*', powers "x^n" and "x^-n", left-normed
// commutators "[x,y,z]" = [[x,y],z], parentheses with powers, and "lhs = rhs"
// (read as lhs * rhs^-1). Throws std::invalid_argument on undeclared symbols
// or malformed input.
Word parse_word(const Presentation& pres, std::string_view text);
Word parse_word(std::span<const std::string> generators, std::string_view text);

// Text format: a line "generators: a b c", then one relator per line. Blank
// lines and text after '#' are ignored.
Presentation parse_presentation(std::string_view text);

// Image of a word under generator images; letters act left to right.
Permutation evaluate_word(const Word& w, std::span<const Permutation> images);

// True iff every relator evaluates to the identity. Throws
// std::invalid_argument when the arity or degrees disagree.
bool verify_homomorphism(const Presentation& pres, std::span<const Permutation> images);

}  // namespace qsym

#endif  // QSYM_FPGROUP_PRESENTATION_HPP_
