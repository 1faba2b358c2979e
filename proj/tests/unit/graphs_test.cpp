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

#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qsym/fpgroup/coset_enumeration.hpp"
#include "qsym/graphs/builders.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/groups/catalog.hpp"
#include "qsym/groups/semidirect.hpp"
#include "qsym/groups/two_groups.hpp"

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

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

// |H : H cap H^x| by testing each element of H for membership in H^x.
std::size_t index_in_h(const StabilizerChain& h, const Permutation& x) {
  std::vector<Permutation> conj;
  for (const auto& g : h.generators()) conj.push_back(conjugate(g, x));
  const StabilizerChain hx(h.degree(), conj);
  std::size_t inter = 0;
  for (const auto& e : h.elements()) inter += hx.contains(e) ? 1 : 0;
  return h.elements().size() / inter;
}

}  // namespace

TEST_CASE("graph invariants are enforced") {
  using Adj = std::vector<std::vector<Vertex>>;
  CHECK_THROWS_AS(Graph(Adj{{0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(Adj{{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(Adj{{1, 1}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(Adj{{2}, {0}}), std::invalid_argument);
  const Graph g(Adj{{2, 1}, {0}, {0}});
  CHECK(g.neighbors(0)[0] == 1);
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(VertexPartition(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(VertexPartition(3, {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("basic predicates") {
  const auto k6 = complete_graph(6);
  CHECK(is_connected(k6));
  CHECK(valency(k6) == 5);
  CHECK_FALSE(is_bipartite(k6));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  const Graph two(std::vector<std::vector<Vertex>>{{1}, {0}, {3}, {2}});
  CHECK_FALSE(is_connected(two));
  CHECK(component_count(two) == 2);
  CHECK_FALSE(valency(Graph(std::vector<std::vector<Vertex>>{{1, 2}, {0}, {0}})).has_value());
}

TEST_CASE("quotients") {
  const auto k6 = complete_graph(6);
  const auto same = quotient_graph(k6, VertexPartition::singletons(6));
  CHECK(same.graph == k6);
  CHECK(same.cover);
  const auto halves = quotient_graph(k6, VertexPartition(6, {{0, 1, 2}, {3, 4, 5}}));
  CHECK(halves.graph == complete_graph(2));
  CHECK_FALSE(halves.cover);
  // The 10-cycle folds onto the 5-cycle as a cover.
  const auto folded = quotient_graph(cycle_graph(10), VertexPartition(10, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}));
  CHECK(folded.graph == cycle_graph(5));
  CHECK(folded.cover);
}

TEST_CASE("export and import") {
  const auto g = cycle_graph(7);
  CHECK(from_edge_list(to_edge_list(g)) == g);
  CHECK(from_edge_list("0 1\n1 2\n") == Graph(std::vector<std::vector<Vertex>>{{1}, {0, 2}, {1}}));
  CHECK(from_edge_list("# n=4\n0 1\n").vertex_count() == 4);
  CHECK_THROWS_AS(from_edge_list("0 x\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list("0 1 2\n"), std::invalid_argument);
  const auto dot = to_dot(g, "C7");
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.rfind("graph \"C7\" {", 0) == 0);
  const auto json = to_json(complete_graph(3), "K3", "test");
  CHECK(json == "{\"edges\":[[0,1],[0,2],[1,2]],\"n\":3,\"name\":\"K3\",\"provenance\":\"test\"}\n");
}

TEST_CASE("cayley graphs") {
  // Z2^2 with all three involutions gives K4.
  std::vector<Permutation> v4{Permutation(4), parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4),
                              parse_cycles("(1,4)(2,3)", 4)};
  auto mul = [](const Permutation& a, const Permutation& b) { return a * b; };
  auto inv = [](const Permutation& a) { return inverse(a); };
  auto key = [](const Permutation& a) { return to_cycle_string(a); };
  const std::vector<Permutation> s(v4.begin() + 1, v4.end());
  CHECK(cayley_graph<Permutation>(v4, s, mul, inv, key) == complete_graph(4));
  const std::vector<Permutation> bad{v4[0], v4[1]};
  CHECK_THROWS_AS(cayley_graph<Permutation>(v4, bad, mul, inv, key), std::invalid_argument);
  // Z4 with a single generator is not inverse-closed.
  std::vector<Permutation> z4{Permutation(4), parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)(2,4)", 4),
                              parse_cycles("(1,4,3,2)", 4)};
  const std::vector<Permutation> one{z4[1]};
  CHECK_THROWS_AS(cayley_graph<Permutation>(z4, one, mul, inv, key), std::invalid_argument);

  for (auto [which, n] : {std::pair{TwoGroup::kG16, 16}, {TwoGroup::kG256, 256}, {TwoGroup::kG4096, 4096}}) {
    const auto pres = two_group_presentation(which);
    const auto result = todd_coxeter(pres, {});
    REQUIRE(result.closed());
    const auto s5 = two_group_connection_set(pres);
    const auto g = cayley_graph(result.table, s5);
    CHECK(g.vertex_count() == static_cast<std::size_t>(n));
    CHECK(valency(g) == 5);
    CHECK(g.edge_count() == static_cast<std::size_t>(n) * 5 / 2);
    CHECK(is_connected(g));
    CHECK_FALSE(is_bipartite(g));
  }
}

TEST_CASE("coset graph of A5 on D10 is K6") {
  const auto& f = coset_fixture("K6");
  const auto gens = coset_generators(f);
  const auto space = coset_graph(gens.t, gens.h, gens.x);
  CHECK(space.graph.graph == complete_graph(6));
  CHECK(space.graph.transversal.size() == 5);
  // x inside H is rejected; so is an x with HxH != Hx^-1H.
  CHECK_THROWS_AS(coset_graph(gens.t, gens.h, gens.h.front()), std::invalid_argument);
  const std::vector<Permutation> a4h{parse_cycles("(1,2,3)", 5)};
  const std::vector<Permutation> a5{parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)};
  CHECK_THROWS_AS(coset_graph(a5, a4h, parse_cycles("(1,2,3,4,5)", 5)), std::invalid_argument);
  CHECK_THROWS_AS(coset_graph(gens.t, gens.h, gens.x, 5), std::length_error);
}

TEST_CASE("catalog coset graphs") {
  for (const auto& f : coset_fixtures()) {
    CAPTURE(f.name);
    const auto gens = coset_generators(f);
    const auto space = coset_graph(gens.t, gens.h, gens.x);
    const Graph& g = space.graph.graph;
    CHECK(g.vertex_count() == f.vertices);
    CHECK(g.vertex_count() % 5 == 1);
    CHECK(valency(g) == 5);
    CHECK(index_in_h(space.h, gens.x) == 5);
    CHECK(is_connected(g));
    CHECK_FALSE(is_bipartite(g));
    // Right multiplication by T preserves adjacency.
    for (const auto& t : gens.t) {
      const auto a = space.action(t);
      for (const auto& [u, v] : g.edges()) CHECK(g.adjacent(a[u], a[v]));
    }
  }
}

TEST_CASE("family graph over p = 7") {
  const SemidirectGroup grp(7);
  const auto cg = family_graph(grp);
  CHECK(cg.graph.vertex_count() == 6 * 2401);
  CHECK(valency(cg.graph) == 5);
  CHECK(is_connected(cg.graph));
  for (const auto& e : grp.generators()) {
    const auto a = family_action(grp, cg, e);
    bool preserved = true;
    for (const auto& [u, v] : cg.graph.edges()) preserved = preserved && cg.graph.adjacent(a[u], a[v]);
    CHECK(preserved);
  }
}
