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

#include "qsym/perm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qsym {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation from_images_unchecked(std::vector<Point> images) {
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? inverse(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation result(p.degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
  return inverse(h) * g * h;
}

Permutation commutator(const Permutation& g, const Permutation& h) {
  return inverse(g) * inverse(h) * g * h;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    const std::uint64_t g = std::gcd(order, len);
    const std::uint64_t factor = len / g;
    if (order > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("element_order: exceeds 64 bits");
    }
    order *= factor;
  }
  return order;
}

std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    std::vector<Point> cyc;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<Point>(j));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t fixed_point_count(const Permutation& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) n += p[i] == i ? 1 : 0;
  return n;
}

namespace {

std::vector<std::vector<std::size_t>> parse_cycle_list(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::vector<std::vector<std::size_t>> out;
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("parse_cycles: malformed '" + std::string(text) + "'"); };
  if (s.empty()) fail();
  while (i < s.size()) {
    if (s[i] != '(') fail();
    ++i;
    std::vector<std::size_t> cyc;
    if (i < s.size() && s[i] == ')') {
      ++i;
      out.push_back(std::move(cyc));
      continue;
    }
    while (true) {
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
      std::size_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::size_t>(s[i] - '0');
        ++i;
      }
      if (v == 0) fail();
      cyc.push_back(v);
      if (i >= s.size()) fail();
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (s[i] == ')') {
        ++i;
        break;
      }
      fail();
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  const auto list = parse_cycle_list(text);
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : list) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const std::size_t a = cyc[k];
      const std::size_t b = cyc[(k + 1) % cyc.size()];
      if (a > degree || b > degree) {
        throw std::invalid_argument("parse_cycles: point beyond degree");
      }
      if (used[a - 1]) throw std::invalid_argument("parse_cycles: point repeated");
      used[a - 1] = true;
      images[a - 1] = static_cast<Point>(b - 1);
    }
  }
  return from_images_unchecked(std::move(images));
}

Permutation parse_cycles(std::string_view text) {
  std::size_t degree = 1;
  for (const auto& cyc : parse_cycle_list(text)) {
    for (std::size_t v : cyc) degree = std::max(degree, v);
  }
  return parse_cycles(text, degree);
}

std::string to_cycle_string(const Permutation& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cs) {
    out.push_back('(');
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k > 0) out.push_back(',');
      out += std::to_string(cyc[k] + 1);
    }
    out.push_back(')');
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace qsym
