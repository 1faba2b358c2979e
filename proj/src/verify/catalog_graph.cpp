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

#include "qsym/verify/catalog_graph.hpp"

#include <stdexcept>

#include "qsym/analysis/structure.hpp"
#include "qsym/groups/catalog.hpp"
#include "qsym/groups/two_groups.hpp"

namespace qsym {

ShiftedGroup shifted_group(const Presentation& pres) {
  ShiftedGroup out;
  out.presentation = pres;
  auto result = todd_coxeter(pres, {});
  if (!result.closed()) throw std::runtime_error("shifted_group: coset enumeration overflow");
  out.table = std::move(result.table);
  out.words = coset_words(out.table);
  out.shift = shift_map(pres);
  out.shift_images.resize(out.table.size());
  for (std::size_t i = 0; i < out.shift_images.size(); ++i) {
    Word w = out.words[i];
    for (auto& l : w) l = static_cast<Letter>(2 * out.shift[letter_generator(l)] + (l & 1U));
    out.shift_images[i] = out.table.trace(0, w);
  }
  return out;
}

CatalogGraph build_catalog_graph(std::string_view name, std::size_t vertex_cap) {
  CatalogGraph out;
  out.name = std::string(name);
  if (is_cayley_name(name)) {
    const auto& f = cayley_fixture(name);
    if (f.vertices > vertex_cap) throw std::length_error("catalog graph " + f.name + " exceeds the vertex cap");
    auto sg = shifted_group(two_group_presentation(f.group));
    const auto s = two_group_connection_set(sg.presentation);
    out.graph = cayley_graph(sg.table, s);
    out.group_generators = regular_representation(sg.table);
    // Throws when the shift is not a bijection of the elements.
    Permutation shift(sg.shift_images);
    out.group_generators.push_back(shift);
    out.order5 = shift;
    out.group_order = BigInt(sg.table.size()) * 5;
    out.construction = "Cay(G, S) with G of order " + std::to_string(sg.table.size()) + ", group R(G):<shift>";
    return out;
  }
  const auto& f = coset_fixture(name);
  const auto gens = coset_generators(f);
  auto space = coset_graph(gens.t, gens.h, gens.x, vertex_cap);
  out.graph = space.graph.graph;
  for (const auto& t : gens.t) out.group_generators.push_back(space.action(t));
  out.group_order = space.t.order();
  const auto h5 = find_element_of_order(space.h, 5);
  if (!h5) throw std::logic_error("catalog graph " + f.name + ": H has no element of order 5");
  out.order5 = space.action(*h5);
  out.construction = "Cos(T, H, HxH) with T = " + f.group_name;
  return out;
}

}  // namespace qsym
