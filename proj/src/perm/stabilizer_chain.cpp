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

#include "qsym/perm/stabilizer_chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsym {

Transversal::Transversal(Point base, std::span<const Permutation> generators, std::size_t degree,
                         std::size_t explicit_budget)
    : base_(base), slot_(degree, -1) {
  std::vector<std::int32_t> parent{-1};
  std::vector<std::int32_t> label{-1};
  orbit_.push_back(base);
  slot_[base] = 0;
  for (std::size_t head = 0; head < orbit_.size(); ++head) {
    const Point w = orbit_[head];
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const Point img = generators[g][w];
      if (slot_[img] >= 0) continue;
      slot_[img] = static_cast<std::int32_t>(orbit_.size());
      orbit_.push_back(img);
      parent.push_back(static_cast<std::int32_t>(head));
      label.push_back(static_cast<std::int32_t>(g));
    }
  }
  if (orbit_.size() * degree <= explicit_budget) {
    reps_.reserve(orbit_.size());
    reps_.emplace_back(degree);
    for (std::size_t k = 1; k < orbit_.size(); ++k) {
      reps_.push_back(reps_[parent[k]] * generators[label[k]]);
    }
  } else {
    parent_ = std::move(parent);
    label_ = std::move(label);
    generators_.assign(generators.begin(), generators.end());
  }
}

Permutation Transversal::representative(Point w) const {
  const std::int32_t k = slot_[w];
  if (!reps_.empty()) return reps_[k];
  std::vector<std::int32_t> path;
  for (std::int32_t s = k; s > 0; s = parent_[s]) path.push_back(label_[s]);
  std::vector<Point> img(slot_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Point>(i);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Permutation& g = generators_[*it];
    for (auto& v : img) v = g[v];
  }
  return from_images_unchecked(std::move(img));
}

namespace {

// Index of the first point moved by g, or degree when g is the identity.
std::size_t first_moved(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g[i] != i) return i;
  }
  return g.degree();
}

// True iff u * s == v, compared pointwise without forming the product.
bool product_equals(const Permutation& u, const Permutation& s, const Permutation& v) {
  for (std::size_t i = 0; i < u.degree(); ++i) {
    if (s[u[i]] != v[i]) return false;
  }
  return true;
}

// g * v^-1 without materialising v^-1.
Permutation times_inverse(const Permutation& g, const Permutation& v) {
  std::vector<Point> inv(v.degree());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[v[i]] = static_cast<Point>(i);
  std::vector<Point> out(g.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = inv[g[i]];
  return from_images_unchecked(std::move(out));
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix, std::size_t explicit_budget)
    : degree_(degree), explicit_budget_(explicit_budget) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("StabilizerChain: degree mismatch");
    if (!g.is_identity()) generators_.push_back(g);
  }
  for (Point b : base_prefix) {
    if (b >= degree) throw std::invalid_argument("StabilizerChain: base point out of range");
    levels_.push_back(ChainLevel{b, {}, {}});
  }
  // Every generator must move some base point.
  for (const auto& g : generators_) {
    bool moves = false;
    for (const auto& lv : levels_) moves = moves || g[lv.base] != lv.base;
    if (!moves) levels_.push_back(ChainLevel{static_cast<Point>(first_moved(g)), {}, {}});
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j) fixes_prefix = g[levels_[j].base] == levels_[j].base;
      if (fixes_prefix) levels_[i].generators.push_back(g);
    }
    rebuild_level(i);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool level_done = true;
    const ChainLevel& lv = levels_[i];
    // Copies: the loop below may grow levels_ and invalidate references.
    const std::vector<Point> orb = lv.transversal.orbit();
    const std::vector<Permutation> gens = lv.generators;
    for (std::size_t k = 0; k < orb.size() && level_done; ++k) {
      const Permutation u = levels_[i].transversal.representative(orb[k]);
      for (const auto& s : gens) {
        const Point img = s[orb[k]];
        const Permutation v = levels_[i].transversal.representative(img);
        if (product_equals(u, s, v)) continue;
        const Permutation schreier = times_inverse(u * s, v);
        // Sift through the levels below i.
        Permutation h = schreier;
        std::size_t j = static_cast<std::size_t>(i) + 1;
        for (; j < levels_.size(); ++j) {
          const Point beta = h[levels_[j].base];
          if (!levels_[j].transversal.contains(beta)) break;
          h = times_inverse(h, levels_[j].transversal.representative(beta));
        }
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) {
          levels_.push_back(ChainLevel{static_cast<Point>(first_moved(h)), {}, {}});
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].generators.push_back(h);
          rebuild_level(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        level_done = false;
        break;
      }
    }
    if (level_done) --i;
  }
}

void StabilizerChain::rebuild_level(std::size_t i) {
  ChainLevel& lv = levels_[i];
  lv.transversal = Transversal(lv.base, lv.generators, degree_, explicit_budget_);
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& lv : levels_) out.push_back(lv.base);
  return out;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& lv : levels_) {
    for (const auto& g : lv.generators) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& lv : levels_) n *= lv.transversal.size();
  return n;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("sift: degree mismatch");
  Permutation h = g;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    const Point beta = h[levels_[j].base];
    if (!levels_[j].transversal.contains(beta)) return {h, j};
    h = times_inverse(h, levels_[j].transversal.representative(beta));
  }
  return {h, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = sift(g);
  return j == levels_.size() && h.is_identity();
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(std::size_t depth) const {
  if (depth >= levels_.size()) return {};
  return levels_[depth].generators;
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    const auto& orb = it->transversal.orbit();
    std::uniform_int_distribution<std::size_t> pick(0, orb.size() - 1);
    g = g * it->transversal.representative(orb[pick(rng)]);
  }
  return g;
}

void StabilizerChain::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  // Element = u_{k-1} * ... * u_0; recurse from the deepest level upwards.
  std::vector<std::vector<Permutation>> reps(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (Point w : levels_[l].transversal.orbit()) reps[l].push_back(levels_[l].transversal.representative(w));
  }
  std::function<void(std::ptrdiff_t, const Permutation&)> rec = [&](std::ptrdiff_t l, const Permutation& acc) {
    if (l < 0) {
      visit(acc);
      return;
    }
    for (const auto& u : reps[l]) rec(l - 1, acc * u);
  };
  rec(static_cast<std::ptrdiff_t>(levels_.size()) - 1, Permutation(degree_));
}

std::vector<Permutation> StabilizerChain::elements() const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) { out.push_back(g); });
  return out;
}

bool StabilizerChain::verify() const {
  for (const auto& g : generators_) {
    if (!contains(g)) return false;
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& lv = levels_[i];
    for (Point w : lv.transversal.orbit()) {
      const Permutation u = lv.transversal.representative(w);
      if (u[lv.base] != w) return false;
      for (const auto& s : lv.generators) {
        const Permutation g = times_inverse(u * s, lv.transversal.representative(s[w]));
        Permutation h = g;
        std::size_t j = i + 1;
        for (; j < levels_.size(); ++j) {
          const Point beta = h[levels_[j].base];
          if (!levels_[j].transversal.contains(beta)) return false;
          h = times_inverse(h, levels_[j].transversal.representative(beta));
        }
        if (!h.is_identity()) return false;
      }
    }
  }
  return true;
}

StabilizerChain build_chain(std::size_t degree, std::span<const Permutation> generators) {
  return StabilizerChain(degree, generators);
}

StabilizerChain build_chain(std::span<const Permutation> generators) {
  if (generators.empty()) throw std::invalid_argument("build_chain: degree unknown for empty list");
  return StabilizerChain(generators.front().degree(), generators);
}

bool contains(const StabilizerChain& chain, const Permutation& p) { return chain.contains(p); }

std::vector<Point> orbit(std::span<const Permutation> generators, Point point) {
  std::vector<Point> out{point};
  if (generators.empty()) return out;
  std::vector<bool> seen(generators.front().degree(), false);
  seen[point] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators) {
      const Point img = g[out[head]];
      if (!seen[img]) {
        seen[img] = true;
        out.push_back(img);
      }
    }
  }
  return out;
}

std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators, std::size_t degree) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree, false);
  for (Point p = 0; p < degree; ++p) {
    if (seen[p]) continue;
    auto orb = orbit(generators, p);
    for (Point q : orb) seen[q] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

}  // namespace qsym
