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

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qsym/analysis/structure.hpp"
#include "qsym/fpgroup/coset_enumeration.hpp"
#include "qsym/graphs/builders.hpp"
#include "qsym/groups/catalog.hpp"
#include "qsym/groups/two_groups.hpp"
#include "qsym/symmetry/symmetry.hpp"

using namespace qsym;

namespace {

Graph complete_graph(std::size_t n) {
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) adj[u].push_back(v);
    }
  }
  return Graph(adj);
}

// Oracle: count vertex permutations preserving adjacency.
std::size_t brute_aut_order(const Graph& g) {
  std::vector<Point> p(g.vertex_count());
  std::iota(p.begin(), p.end(), Point{0});
  std::size_t count = 0;
  do {
    count += is_automorphism(g, Permutation(p)) ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

PermutationCosetSpace catalog_space(const char* name) {
  const auto gens = coset_generators(coset_fixture(name));
  return coset_graph(gens.t, gens.h, gens.x);
}

}  // namespace

TEST_CASE("quasi-semiregular and semiregular predicates") {
  CHECK_FALSE(is_quasi_semiregular(Permutation(5)));
  CHECK_FALSE(is_quasi_semiregular(parse_cycles("(1,2,3,4,5)", 7)));
  CHECK(is_quasi_semiregular(parse_cycles("(1,2,3,4,5)", 6)));
  CHECK(is_quasi_semiregular(parse_cycles("(1,2)(3,4)", 5)));
  CHECK_FALSE(is_quasi_semiregular(parse_cycles("(1,2)(3,4,5)", 6)));
  const std::vector<Point> four{0, 1, 2, 3}, five{0, 1, 2, 3, 4};
  CHECK(is_semiregular_on(parse_cycles("(1,2)(3,4)", 5), four));
  CHECK_FALSE(is_semiregular_on(parse_cycles("(1,2)(3,4)", 5), five));
  const std::vector<Point> open{0, 2};
  CHECK_THROWS_AS(is_semiregular_on(parse_cycles("(1,2)(3,4)", 5), open), std::invalid_argument);
  CHECK(is_semiregular(parse_cycles("(1,2,3)(4,5,6)", 6)));
}

TEST_CASE("order 5 elements of H act quasi-semiregularly on G36") {
  const auto space = catalog_space("G36");
  const auto x5 = *find_element_of_order(space.h, 5);
  const auto a = coset_action_of(space, x5);
  CHECK(a.degree() == 36);
  CHECK(is_quasi_semiregular(a));
  CHECK(a[0] == 0);
  CHECK(cycle_type(a) == std::vector<std::size_t>{1, 5, 5, 5, 5, 5, 5, 5});
}

TEST_CASE("coset actions and transitivity") {
  const auto space = catalog_space("G36");
  const Graph& g = space.graph.graph;
  CHECK(coset_action_of(space, Permutation(6)).is_identity());
  const auto gens = coset_generators(coset_fixture("G36"));
  const auto xa = coset_action_of(space, gens.x);
  CHECK(g.adjacent(0, xa[0]));
  CHECK(xa[xa[0]] == 0);
  CHECK_THROWS_AS(coset_action_of(space, parse_cycles("(1,2)", 6)), std::invalid_argument);
  std::vector<Permutation> hat;
  for (const auto& t : gens.t) hat.push_back(coset_action_of(space, t));
  const auto tr = transitivity(GraphAction(g, hat));
  CHECK(tr.vertex_transitive);
  CHECK(tr.arc_transitive);
  const auto k6 = complete_graph(6);
  const auto none = transitivity(GraphAction(k6, {}));
  CHECK_FALSE(none.vertex_transitive);
  CHECK_FALSE(none.arc_transitive);
  CHECK(none.vertex_orbits == 6);
  CHECK(none.arc_orbits == 30);
  CHECK_THROWS_AS(GraphAction(g, {parse_cycles("(1,2)", 36)}), std::invalid_argument);
}

TEST_CASE("automorphism groups of small graphs against brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 4 + trial % 5;
    std::bernoulli_distribution edge(0.4);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (edge(rng)) edges.emplace_back(u, v);
      }
    }
    const auto g = Graph::from_edges(n, edges);
    CAPTURE(to_edge_list(g));
    CHECK(automorphism_group(g).order == brute_aut_order(g));
  }
  // Petersen graph.
  std::vector<std::pair<Vertex, Vertex>> pet;
  for (Vertex i = 0; i < 5; ++i) {
    pet.emplace_back(i, (i + 1) % 5);
    pet.emplace_back(i, i + 5);
    pet.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  CHECK(automorphism_group(Graph::from_edges(10, pet)).order == 120);
  CHECK(automorphism_group(complete_graph(6)).order == 720);
  CHECK(automorphism_group(Graph(std::vector<std::vector<Vertex>>(5))).order == 120);
}

TEST_CASE("automorphism groups of catalog graphs") {
  for (auto [name, order, stab] : {std::tuple{"G36", 1440, 40}, {"G66", 1320, 20}, {"K6", 720, 120}}) {
    CAPTURE(name);
    const auto space = catalog_space(name);
    const auto aut = automorphism_group(space.graph.graph);
    CHECK(aut.order == order);
    CHECK(stabilizer_order(aut.chain, 0) == stab);
    for (const auto& t : space.t.generators()) CHECK(aut.chain.contains(space.action(t)));
    CHECK(sylow5_order(aut.chain) == 5);
    std::size_t fives = 0;
    aut.chain.for_each_element([&](const Permutation& p) {
      if (element_order(p) != 5) return;
      ++fives;
      CHECK(is_quasi_semiregular(p));
    });
    CHECK(fives > 0);
  }
  CHECK_THROWS_AS(automorphism_group(catalog_space("G1456").graph.graph), std::length_error);
}

TEST_CASE("Cayley graph of G16: normalizer of the regular subgroup") {
  const auto pres = two_group_presentation(TwoGroup::kG16);
  const auto table = todd_coxeter(pres, {}).table;
  const auto g = cayley_graph(table, two_group_connection_set(pres));
  const auto aut = automorphism_group(g);
  CHECK(aut.order == 1920);
  // Right multiplications form the regular subgroup R.
  const auto r = regular_representation(table);
  const StabilizerChain rchain(16, r);
  CHECK(rchain.order() == 16);
  for (const auto& p : r) CHECK(aut.chain.contains(p));
  const StabilizerChain stab(16, aut.chain.generators(), std::vector<Point>{0});
  CHECK(stabilizer_order(aut.chain, 0) == 120);
  // Aut normalizes R, so Aut = R : Aut_1.
  for (const auto& a : aut.generators) {
    for (const auto& p : r) CHECK(rchain.contains(conjugate(p, a)));
  }
  // Automorphisms centralizing R are semiregular.
  std::size_t central = 0;
  aut.chain.for_each_element([&](const Permutation& a) {
    for (const auto& p : r) {
      if (a * p != p * a) return;
    }
    ++central;
    CHECK(is_semiregular(a));
  });
  CHECK(central == 16);
  // The 5-part of |Aut| is 5 and order-5 automorphisms are quasi-semiregular.
  CHECK(sylow5_order(aut.chain) == 5);
  const auto five = *find_element_of_order(aut.chain, 5);
  CHECK(is_quasi_semiregular(five));
}
