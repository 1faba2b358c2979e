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

#ifndef QSYM_SYMMETRY_SYMMETRY_HPP_
#define QSYM_SYMMETRY_SYMMETRY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "qsym/graphs/builders.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/perm/permutation.hpp"
#include "qsym/perm/stabilizer_chain.hpp"

namespace qsym {

// Non-identity, exactly one fixed point, all other cycles of one length.
bool is_quasi_semiregular(const Permutation& p);
// Every cycle of p through `points` has length element_order(p). Throws
// std::invalid_argument when p does not preserve `points`.
bool is_semiregular_on(const Permutation& p, std::span<const Point> points);
bool is_semiregular(const Permutation& p);

// Vertex permutations checked to preserve adjacency.
class GraphAction {
 public:
  // Throws std::invalid_argument when a generator has the wrong degree or is
  // not an automorphism.
  GraphAction(const Graph& graph, std::vector<Permutation> generators);

  const Graph& graph() const { return *graph_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  const Graph* graph_;
  std::vector<Permutation> generators_;
};

bool is_automorphism(const Graph& g, const Permutation& p);

struct Transitivity {
  bool vertex_transitive = false;
  bool arc_transitive = false;
  std::size_t vertex_orbits = 0;
  std::size_t arc_orbits = 0;
};
Transitivity transitivity(const GraphAction& action);

// Hz -> Hzg on the vertices of a built coset graph. Throws
// std::invalid_argument for elements outside T.
Permutation coset_action_of(const PermutationCosetSpace& space, const Permutation& g);
Permutation coset_action_of(const SemidirectGroup& group, const SemidirectCosetGraph& cg,
                            const SemidirectElement& g);

inline constexpr std::size_t kDefaultAutVertexCap = 512;

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  BigInt order;
  std::vector<Point> base;                // individualized vertices
  std::vector<std::size_t> orbit_sizes;   // |G_i : G_{i+1}| along the base
  StabilizerChain chain;                  // of the generators; order checked
  std::size_t search_nodes = 0;
};

// Full automorphism group by equitable refinement (1-dimensional
// Weisfeiler-Leman) and backtracking with orbit pruning. The target cell is
// the first smallest non-singleton cell; candidates are tried in ascending
// vertex order. Throws std::length_error above vertex_cap vertices and
// std::logic_error when the chain order disagrees with the orbit product.
AutomorphismGroup automorphism_group(const Graph& g, std::size_t vertex_cap = kDefaultAutVertexCap);

// |G_v| for the group of `chain` acting on vertices.
BigInt stabilizer_order(const StabilizerChain& chain, Point v);

}  // namespace qsym

#endif  // QSYM_SYMMETRY_SYMMETRY_HPP_
