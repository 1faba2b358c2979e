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

#ifndef QSYM_GROUPS_CATALOG_HPP_
#define QSYM_GROUPS_CATALOG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/groups/two_groups.hpp"
#include "qsym/perm/permutation.hpp"

namespace qsym {

// Generators of Cos(T, H, HxH) in 1-based cycle notation, as printed.
struct CosetFixture {
  std::string name;
  std::string group_name;              // name of T
  std::size_t degree = 0;
  std::uint64_t group_order = 0;       // |T|
  std::uint64_t vertices = 0;          // |T:H|
  std::vector<std::string> h_generators;
  std::string x;                       // connecting element as printed
  // T when it is not <H, x>; empty otherwise.
  std::vector<std::string> t_generators;
  // Connecting element used to build the graph when the printed one does not
  // generate T together with H; empty otherwise.
  std::string graph_x;
  std::string note;
};

struct CayleyFixture {
  std::string name;
  TwoGroup group;
  std::uint64_t vertices = 0;
};

// Graph identifiers: K6, G36, G66, G126, G396, G1456, G2016, G22176 (coset
// graphs) and G16, G256, G4096 (Cayley graphs of the 2-groups).
const std::vector<std::string>& catalog_names();
bool is_catalog_name(std::string_view name);
const std::vector<CosetFixture>& coset_fixtures();
const std::vector<CayleyFixture>& cayley_fixtures();
// Throw std::invalid_argument for unknown names.
const CosetFixture& coset_fixture(std::string_view name);
const CayleyFixture& cayley_fixture(std::string_view name);
bool is_cayley_name(std::string_view name);

// Parsed permutations of a fixture.
struct CosetGenerators {
  std::vector<Permutation> t;  // generators of T
  std::vector<Permutation> h;
  Permutation x;               // element used for the graph
  Permutation printed_x;
};
CosetGenerators coset_generators(const CosetFixture& fixture);

// Cycle-notation listing of a catalog entry, or the presentation text for
// Cayley entries.
std::string dump_fixture(std::string_view name);

}  // namespace qsym

#endif  // QSYM_GROUPS_CATALOG_HPP_
