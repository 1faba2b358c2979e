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

#include "qsym/graphs/builders.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qsym {

PermutationCosetKey::PermutationCosetKey(const StabilizerChain& t, const StabilizerChain& h)
    : t_base_(t.base()), h_(&h) {}

Permutation PermutationCosetKey::canonical(const Permutation& g) const {
  Permutation c = g;
  for (const auto& level : h_->levels()) {
    const auto& orb = level.transversal.orbit();
    Point best = orb.front();
    for (Point w : orb) {
      if (c[w] < c[best]) best = w;
    }
    if (best != level.base) c = level.transversal.representative(best) * c;
  }
  return c;
}

std::string PermutationCosetKey::operator()(const Permutation& g) const {
  const Permutation c = canonical(g);
  std::string key(t_base_.size() * sizeof(Point), '\0');
  for (std::size_t i = 0; i < t_base_.size(); ++i) {
    const Point v = c[t_base_[i]];
    std::copy_n(reinterpret_cast<const char*>(&v), sizeof(Point), key.data() + i * sizeof(Point));
  }
  return key;
}

Permutation PermutationCosetSpace::action(const Permutation& g) const {
  const PermutationCosetKey key(t, h);
  return coset_action(graph, g, [](const Permutation& a, const Permutation& b) { return a * b; }, key);
}

PermutationCosetSpace coset_graph(std::span<const Permutation> t_generators,
                                  std::span<const Permutation> h_generators, const Permutation& x,
                                  std::size_t vertex_cap) {
  if (t_generators.empty()) throw std::invalid_argument("coset_graph: no generators for T");
  const std::size_t degree = t_generators.front().degree();
  PermutationCosetSpace out{StabilizerChain(degree, t_generators), StabilizerChain(degree, h_generators), {}};
  for (const auto& g : h_generators) {
    if (!out.t.contains(g)) throw std::invalid_argument("coset_graph: H not inside T");
  }
  if (!out.t.contains(x)) throw std::invalid_argument("coset_graph: x not inside T");
  if (out.t.order() / out.h.order() > vertex_cap) {
    throw std::length_error("coset graph: more than " + std::to_string(vertex_cap) + " cosets");
  }
  const auto h_elements = out.h.elements();
  const PermutationCosetKey key(out.t, out.h);
  const Permutation id(degree);
  out.graph = build_coset_graph<Permutation>(
      t_generators, std::span<const Permutation>(h_elements), x, inverse(x), id,
      [](const Permutation& a, const Permutation& b) { return a * b; }, key, vertex_cap);
  if (BigInt(out.graph.representatives.size()) * out.h.order() != out.t.order()) {
    throw std::logic_error("coset_graph: |V| * |H| != |T|");
  }
  return out;
}

SemidirectCosetGraph family_graph(const SemidirectGroup& g, std::size_t vertex_cap) {
  const auto gens = g.generators();
  const auto h = g.h_elements();
  const auto x = g.conjugate(g.gamma(), g.u());
  return build_coset_graph<SemidirectElement>(
      std::span<const SemidirectElement>(gens), std::span<const SemidirectElement>(h), x, g.inverse(x),
      g.identity(), [&g](const SemidirectElement& a, const SemidirectElement& b) { return g.multiply(a, b); },
      [&g](const SemidirectElement& e) { return g.coset_key(e); }, vertex_cap);
}

Permutation family_action(const SemidirectGroup& g, const SemidirectCosetGraph& cg, const SemidirectElement& e) {
  return coset_action(
      cg, e, [&g](const SemidirectElement& a, const SemidirectElement& b) { return g.multiply(a, b); },
      [&g](const SemidirectElement& x) { return g.coset_key(x); });
}

Graph cayley_graph(const CosetTable& regular, std::span<const Word> connection_set) {
  if (!regular.is_closed()) throw std::invalid_argument("cayley_graph: table not closed");
  const std::size_t n = regular.size();
  const std::vector<Word> words = coset_words(regular);
  std::set<std::uint32_t> s_index;
  std::vector<std::uint32_t> s_list;
  for (const Word& s : connection_set) {
    const auto i = regular.trace(0, s);
    if (i == 0) throw std::invalid_argument("cayley_graph: S contains the identity");
    s_index.insert(i);
    s_list.push_back(i);
  }
  for (const Word& s : connection_set) {
    if (!s_index.contains(regular.trace(0, inverse_word(s)))) {
      throw std::invalid_argument("cayley_graph: S not inverse-closed");
    }
  }
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto s : s_list) adj[i].push_back(regular.trace(s, words[i]));
  }
  return Graph(std::move(adj));
}

}  // namespace qsym
