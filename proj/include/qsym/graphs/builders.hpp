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

#ifndef QSYM_GRAPHS_BUILDERS_HPP_
#define QSYM_GRAPHS_BUILDERS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsym/fpgroup/coset_enumeration.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/groups/semidirect.hpp"
#include "qsym/perm/permutation.hpp"
#include "qsym/perm/stabilizer_chain.hpp"

namespace qsym {

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

// Cos(T, H, HxH) with its vertex bookkeeping. Vertex 0 is H; vertex v is the
// coset H * representatives[v]. The neighbors of Hg are H x h g for h in
// `transversal`, a right transversal of H cap H^x in H.
template <class E, class K>
struct CosetGraph {
  Graph graph;
  std::vector<E> representatives;
  std::vector<E> transversal;
  std::unordered_map<K, Vertex> index;  // coset key -> vertex
};

// Generic builder. `key(g)` must be constant exactly on right cosets H g.
// Vertices are found breadth-first from H under right multiplication by the
// generators of T. Throws std::invalid_argument when HxH != Hx^-1H, when x
// lies in H, or when an element leaves the enumerated cosets, and
// std::length_error past `vertex_cap` cosets.
template <class E, class Mul, class Key>
auto build_coset_graph(std::span<const E> t_generators, std::span<const E> h_elements, const E& x,
                       const E& x_inverse, const E& identity, Mul mul, Key key,
                       std::size_t vertex_cap = kDefaultVertexCap) {
  using K = decltype(key(identity));
  CosetGraph<E, K> out;

  std::unordered_map<K, std::size_t> neighbor_keys;
  for (const E& h : h_elements) {
    if (neighbor_keys.emplace(key(mul(x, h)), out.transversal.size()).second) out.transversal.push_back(h);
  }
  if (!neighbor_keys.contains(key(x_inverse))) throw std::invalid_argument("coset graph: HxH != Hx^-1H");
  if (neighbor_keys.contains(key(identity))) throw std::invalid_argument("coset graph: x lies in H");

  out.index.emplace(key(identity), 0);
  out.representatives.push_back(identity);
  for (std::size_t head = 0; head < out.representatives.size(); ++head) {
    for (const E& t : t_generators) {
      E g = mul(out.representatives[head], t);
      if (out.index.emplace(key(g), static_cast<Vertex>(out.representatives.size())).second) {
        out.representatives.push_back(std::move(g));
        if (out.representatives.size() > vertex_cap) {
          throw std::length_error("coset graph: more than " + std::to_string(vertex_cap) + " cosets");
        }
      }
    }
  }

  std::vector<E> xh;
  for (const E& h : out.transversal) xh.push_back(mul(x, h));
  std::vector<std::vector<Vertex>> adj(out.representatives.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (const E& y : xh) {
      const auto it = out.index.find(key(mul(y, out.representatives[v])));
      if (it == out.index.end()) throw std::invalid_argument("coset graph: H, x not inside T");
      adj[v].push_back(it->second);
    }
  }
  out.graph = Graph(std::move(adj));
  return out;
}

// Permutation of the vertices induced by right multiplication by g.
template <class E, class K, class Mul, class Key>
Permutation coset_action(const CosetGraph<E, K>& cg, const E& g, Mul mul, Key key) {
  std::vector<Point> images(cg.representatives.size());
  for (std::size_t v = 0; v < images.size(); ++v) {
    const auto it = cg.index.find(key(mul(cg.representatives[v], g)));
    if (it == cg.index.end()) throw std::invalid_argument("coset_action: element outside T");
    images[v] = it->second;
  }
  return Permutation(std::move(images));
}

// Key of the right coset H g inside T: g is moved to the least element of H g
// with respect to the images of H's base, and that element's images of T's
// base are returned as bytes.
class PermutationCosetKey {
 public:
  PermutationCosetKey(const StabilizerChain& t, const StabilizerChain& h);
  std::string operator()(const Permutation& g) const;
  Permutation canonical(const Permutation& g) const;

 private:
  std::vector<Point> t_base_;
  const StabilizerChain* h_;
};

using PermutationCosetGraph = CosetGraph<Permutation, std::string>;

struct PermutationCosetSpace {
  StabilizerChain t;
  StabilizerChain h;
  PermutationCosetGraph graph;
  Permutation action(const Permutation& g) const;
};

// Cos(T, H, HxH) for T generated by t_generators. Also checks
// |V| * |H| == |T|; throws std::logic_error otherwise.
PermutationCosetSpace coset_graph(std::span<const Permutation> t_generators,
                                  std::span<const Permutation> h_generators, const Permutation& x,
                                  std::size_t vertex_cap = kDefaultVertexCap);

using SemidirectCosetGraph = CosetGraph<SemidirectElement, std::uint64_t>;

// Cos(G, H, H gamma^u H) for G = Z_p^4 : L and H = <alpha, beta>.
SemidirectCosetGraph family_graph(const SemidirectGroup& g, std::size_t vertex_cap = kDefaultVertexCap);
Permutation family_action(const SemidirectGroup& g, const SemidirectCosetGraph& cg, const SemidirectElement& e);

// Cayley graph with edges {g, s g}. `elements` lists the group; `key`
// identifies elements. Throws std::invalid_argument when S contains the
// identity or is not closed under inverses.
template <class E, class Mul, class Inv, class Key>
Graph cayley_graph(std::span<const E> elements, std::span<const E> connection_set, Mul mul, Inv inv, Key key) {
  using K = decltype(key(elements.front()));
  std::unordered_map<K, Vertex> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(key(elements[i]), static_cast<Vertex>(i));
  std::unordered_map<K, int> in_s;
  for (const E& s : connection_set) in_s.emplace(key(s), 0);
  for (const E& s : connection_set) {
    if (!in_s.contains(key(inv(s)))) throw std::invalid_argument("cayley_graph: S not inverse-closed");
    if (key(mul(s, inv(s))) == key(s)) throw std::invalid_argument("cayley_graph: S contains the identity");
  }
  std::vector<std::vector<Vertex>> adj(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const E& s : connection_set) {
      const auto it = index.find(key(mul(s, elements[i])));
      if (it == index.end()) throw std::invalid_argument("cayley_graph: element list not closed");
      adj[i].push_back(it->second);
    }
  }
  return Graph(std::move(adj));
}

// Cayley graph of the group of a closed coset table for the trivial subgroup.
// Vertex i is the element w_i labelling coset i; edges are {w_i, s w_i}.
Graph cayley_graph(const CosetTable& regular, std::span<const Word> connection_set);

}  // namespace qsym

#endif  // QSYM_GRAPHS_BUILDERS_HPP_
