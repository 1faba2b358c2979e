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

#include "qsym/analysis/structure.hpp"

#include <deque>
#include <unordered_set>
#include <utility>
#include <vector>

namespace qsym {

namespace {

// Adds g to gens and rebuilds the chain unless g is already a member.
void extend(StabilizerChain& chain, std::vector<Permutation>& gens, const Permutation& g) {
  if (chain.contains(g)) return;
  gens.push_back(g);
  chain = StabilizerChain(chain.degree(), gens);
}

struct Reference {
  std::string label;
  std::size_t degree;
  std::vector<std::string> generators;
};

const std::vector<std::pair<std::string, GroupFingerprint>>& reference_fingerprints() {
  static const auto refs = [] {
    const std::vector<Reference> list{
        {"Z5", 5, {"(1,2,3,4,5)"}},
        {"Z10", 7, {"(1,2,3,4,5)(6,7)"}},
        {"Z15", 8, {"(1,2,3,4,5)(6,7,8)"}},
        {"Z20", 9, {"(1,2,3,4,5)(6,7,8,9)"}},
        {"D10", 5, {"(1,2,3,4,5)", "(2,5)(3,4)"}},
        {"AGL1(5)", 5, {"(1,2,3,4,5)", "(2,3,5,4)"}},
        {"Z2xD10", 7, {"(1,2,3,4,5)", "(2,5)(3,4)", "(6,7)"}},
        {"Z2xAGL1(5)", 7, {"(1,2,3,4,5)", "(2,3,5,4)", "(6,7)"}},
        {"S5", 5, {"(1,2,3,4,5)", "(1,2)"}},
        {"Z5xA4", 9, {"(1,2,3,4,5)", "(6,7,8)", "(6,7)(8,9)"}},
        {"Z5xS4", 9, {"(1,2,3,4,5)", "(6,7,8,9)", "(6,7)"}},
        {"S4xS5", 9, {"(1,2,3,4)", "(1,2)", "(5,6,7,8,9)", "(5,6)"}},
        // Pairs of equal sign in S4 x S5.
        {"(A4xA5):Z2", 9, {"(1,2,3)", "(1,2)(3,4)", "(5,6,7)", "(5,6,7,8,9)", "(1,2)(5,6)"}},
    };
    std::vector<std::pair<std::string, GroupFingerprint>> out;
    for (const auto& r : list) {
      std::vector<Permutation> gens;
      for (const auto& s : r.generators) gens.push_back(parse_cycles(s, r.degree));
      out.emplace_back(r.label, fingerprint(StabilizerChain(r.degree, gens)));
    }
    return out;
  }();
  return refs;
}

}  // namespace

bool is_abelian(const StabilizerChain& chain) {
  const auto& gens = chain.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

StabilizerChain center(const StabilizerChain& chain) {
  if (chain.order() > kRecognizeLimit) throw std::invalid_argument("center: group too large to enumerate");
  std::vector<Permutation> gens;
  StabilizerChain z(chain.degree(), gens);
  chain.for_each_element([&](const Permutation& g) {
    for (const auto& s : chain.generators()) {
      if (g * s != s * g) return;
    }
    extend(z, gens, g);
  });
  return z;
}

StabilizerChain derived_subgroup(const StabilizerChain& chain) {
  const auto& sgens = chain.generators();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < sgens.size(); ++i) {
    for (std::size_t j = i + 1; j < sgens.size(); ++j) {
      const Permutation c = commutator(sgens[i], sgens[j]);
      if (!c.is_identity()) gens.push_back(c);
    }
  }
  StabilizerChain d(chain.degree(), gens);
  // Normal closure under conjugation by the generators of G.
  for (bool changed = true; changed;) {
    changed = false;
    const auto current = d.generators();
    for (const auto& g : current) {
      for (const auto& s : sgens) {
        const Permutation c = conjugate(g, s);
        if (d.contains(c)) continue;
        extend(d, gens, c);
        changed = true;
      }
    }
  }
  return d;
}

bool is_solvable(const StabilizerChain& chain) {
  StabilizerChain g = chain;
  while (g.order() > 1) {
    StabilizerChain d = derived_subgroup(g);
    if (d.order() == g.order()) return false;
    g = std::move(d);
  }
  return true;
}

BigInt sylow_order(const StabilizerChain& chain, std::uint32_t prime) {
  BigInt n = chain.order();
  BigInt out = 1;
  while (n % prime == 0) {
    n /= prime;
    out *= prime;
  }
  return out;
}

GroupFingerprint fingerprint(const StabilizerChain& chain) {
  GroupFingerprint f;
  f.order = chain.order();
  f.abelian = is_abelian(chain);
  f.derived_order = derived_subgroup(chain).order();
  if (f.order <= kRecognizeLimit) {
    chain.for_each_element([&](const Permutation& g) { ++f.element_orders[element_order(g)]; });
    f.center_order = f.abelian ? f.order : center(chain).order();
  }
  return f;
}

std::string recognize(const StabilizerChain& chain) {
  if (chain.order() > kRecognizeLimit) return "unknown";
  const GroupFingerprint f = fingerprint(chain);
  std::string match = "unknown";
  int hits = 0;
  for (const auto& [label, ref] : reference_fingerprints()) {
    if (ref == f) {
      match = label;
      ++hits;
    }
  }
  return hits == 1 ? match : "unknown";
}

std::optional<Permutation> find_element_of_order(const StabilizerChain& chain, std::uint64_t n,
                                                 std::size_t search_limit) {
  if (n == 0 || chain.order() % n != 0) return std::nullopt;
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue{Permutation(chain.degree())};
  seen.insert(queue.front());
  while (!queue.empty() && seen.size() <= search_limit) {
    const Permutation g = queue.front();
    queue.pop_front();
    const std::uint64_t o = element_order(g);
    if (o % n == 0) return power(g, static_cast<std::int64_t>(o / n));
    for (const auto& s : chain.generators()) {
      Permutation h = g * s;
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return std::nullopt;
}

}  // namespace qsym
