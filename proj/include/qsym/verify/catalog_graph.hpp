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

#ifndef QSYM_VERIFY_CATALOG_GRAPH_HPP_
#define QSYM_VERIFY_CATALOG_GRAPH_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/fpgroup/coset_enumeration.hpp"
#include "qsym/fpgroup/presentation.hpp"
#include "qsym/graphs/builders.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/perm/permutation.hpp"
#include "qsym/perm/stabilizer_chain.hpp"

namespace qsym {

// A catalog graph with the group it was built from, acting on its vertices.
struct CatalogGraph {
  std::string name;
  std::string construction;
  Graph graph;
  // Vertex permutations generating the constructed group: T for coset
  // graphs, R(G) together with the shift automorphism for Cayley graphs.
  std::vector<Permutation> group_generators;
  BigInt group_order;
  // An order-5 element of the constructed group fixing vertex 0.
  Permutation order5;
};

// Throws std::invalid_argument for unknown names and std::length_error past
// vertex_cap vertices.
CatalogGraph build_catalog_graph(std::string_view name, std::size_t vertex_cap = kDefaultVertexCap);

// The closed regular coset table of a 2-group presentation with the image of
// every element under the generator shift x_i -> x_{i+1}.
struct ShiftedGroup {
  Presentation presentation;
  CosetTable table;
  std::vector<Word> words;           // words[i] labels element i
  std::vector<std::size_t> shift;    // generator map
  std::vector<Point> shift_images;   // i -> index of shift(words[i])
};
// Throws std::runtime_error when the enumeration does not close.
ShiftedGroup shifted_group(const Presentation& pres);

}  // namespace qsym

#endif  // QSYM_VERIFY_CATALOG_GRAPH_HPP_
