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

#include "qsym/fpgroup/presentation.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsym {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = inverse_letter(l);
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse_letter(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclically_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0;
  std::size_t j = r.size();
  while (j - i >= 2 && r[i] == inverse_letter(r[j - 1])) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j));
}

Word commutator_word(const Word& x, const Word& y) {
  Word out = inverse_word(x);
  const Word yi = inverse_word(y);
  out.insert(out.end(), yi.begin(), yi.end());
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return free_reduce(out);
}

Word power_word(const Word& w, std::int64_t k) {
  const Word base = k < 0 ? inverse_word(w) : w;
  Word out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<std::string> names(generators_.begin(), generators_.end());
  if (names.size() != generators_.size()) throw std::invalid_argument("Presentation: duplicate generator");
  for (auto& r : relators) {
    for (Letter l : r) {
      if (letter_generator(l) >= generators_.size()) {
        throw std::invalid_argument("Presentation: relator uses an undeclared generator");
      }
    }
    Word reduced = free_reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return i;
  }
  return std::nullopt;
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += generators_[letter_generator(w[i])];
    const std::size_t run = j - i;
    if (is_inverse_letter(w[i])) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "generators:";
  for (const auto& g : generators_) out += " " + g;
  out += "\n";
  for (const auto& r : relators_) out += word_to_string(r) + "\n";
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::span<const std::string> generators, std::string_view text)
      : generators_(generators), text_(text) {}

  Word parse_relation() {
    Word lhs = parse_product();
    skip_space();
    if (peek() == '=') {
      ++pos_;
      Word rhs = parse_product();
      Word rhs_inv = inverse_word(rhs);
      lhs.insert(lhs.end(), rhs_inv.begin(), rhs_inv.end());
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return free_reduce(lhs);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_word: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  Word parse_product() {
    Word out = parse_factor();
    skip_space();
    while (peek() == '*') {
      ++pos_;
      Word next = parse_factor();
      out.insert(out.end(), next.begin(), next.end());
      skip_space();
    }
    return out;
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_space();
    if (peek() != '^') return atom;
    ++pos_;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::int64_t k = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      k = k * 10 + (text_[pos_] - '0');
      if (k > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return power_word(atom, negative ? -k : k);
  }

  Word parse_atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_product();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word w = parse_product();
      skip_space();
      if (peek() != ',') fail("commutator needs at least two entries");
      while (peek() == ',') {
        ++pos_;
        w = commutator_word(w, parse_product());
        skip_space();
      }
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return w;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (generators_[g] == name) return Word{generator_letter(g)};
      }
      pos_ = start;
      fail("undeclared generator '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::span<const std::string> generators_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::span<const std::string> generators, std::string_view text) {
  return WordParser(generators, text).parse_relation();
}

Word parse_word(const Presentation& pres, std::string_view text) {
  return parse_word(std::span<const std::string>(pres.generators()), text);
}

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> generators;
  std::vector<std::string> lines;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!have_header) {
      constexpr std::string_view kHeader = "generators:";
      if (line.rfind(kHeader, 0) != 0) throw std::invalid_argument("parse_presentation: missing generators line");
      std::istringstream names(line.substr(kHeader.size()));
      std::string name;
      while (names >> name) {
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
          throw std::invalid_argument("parse_presentation: bad generator name '" + name + "'");
        }
        generators.push_back(name);
      }
      have_header = true;
      continue;
    }
    lines.push_back(line);
  }
  if (!have_header) throw std::invalid_argument("parse_presentation: missing generators line");
  std::vector<Word> relators;
  for (const auto& l : lines) relators.push_back(parse_word(generators, l));
  return Presentation(std::move(generators), std::move(relators));
}

Permutation evaluate_word(const Word& w, std::span<const Permutation> images) {
  if (images.empty()) throw std::invalid_argument("evaluate_word: no images");
  const std::size_t n = images.front().degree();
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::vector<Permutation> inverses;
  for (const auto& p : images) inverses.push_back(inverse(p));
  for (Letter l : w) {
    const std::size_t g = letter_generator(l);
    if (g >= images.size()) throw std::invalid_argument("evaluate_word: letter out of range");
    const Permutation& p = is_inverse_letter(l) ? inverses[g] : images[g];
    for (auto& v : img) v = p[v];
  }
  return from_images_unchecked(std::move(img));
}

bool verify_homomorphism(const Presentation& pres, std::span<const Permutation> images) {
  if (images.size() != pres.generator_count()) throw std::invalid_argument("verify_homomorphism: arity mismatch");
  for (const auto& p : images) {
    if (p.degree() != images.front().degree()) throw std::invalid_argument("verify_homomorphism: degree mismatch");
  }
  if (images.empty()) return true;
  for (const auto& r : pres.relators()) {
    if (!evaluate_word(r, images).is_identity()) return false;
  }
  return true;
}

}  // namespace qsym
