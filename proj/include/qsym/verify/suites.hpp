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

#ifndef QSYM_VERIFY_SUITES_HPP_
#define QSYM_VERIFY_SUITES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/analysis/conjugacy.hpp"
#include "qsym/graphs/builders.hpp"
#include "qsym/perm/permutation.hpp"
#include "qsym/symmetry/symmetry.hpp"
#include "qsym/verify/report.hpp"

namespace qsym {

struct SuiteOptions {
  unsigned threads = 1;  // rows processed concurrently; report order is fixed
  std::size_t aut_vertex_cap = kDefaultAutVertexCap;
  std::size_t class_memory_cap = kDefaultClassMemoryCap;
  std::size_t vertex_cap = kDefaultVertexCap;
};

// Expected graph-table data.
struct Table1Row {
  std::string name;
  std::uint64_t vertices = 0;
  std::string aut_order;
  std::string stabilizer_order;
  std::string stabilizer_structure;  // empty when not recognizable
};
const std::vector<Table1Row>& table1_rows();

// Expected centralizer-table data.
struct Table2Row {
  std::string name;
  std::string order;
  std::string centralizer_order;
  std::string centralizer_structure;
  bool extended_only = false;
};
const std::vector<Table2Row>& table2_rows();
// Generators of a centralizer-table group. Throws std::invalid_argument for
// names without a construction.
std::vector<Permutation> table2_generators(std::string_view name);

enum class Table2Scope { kDefault, kExtended };

// Per catalog graph: vertex count, valency 5, connectivity,
// non-bipartiteness, |V| = 1 mod 5, arc-transitivity and a quasi-semiregular
// order-5 element of the constructed group; |Aut|, |Aut_v| and the structure
// of Aut_v within the automorphism vertex cap, skipped beyond it.
VerificationReport table1_report(const SuiteOptions& options = {});

// Per group: order, 5-part of the order, and order and structure of the
// centralizer of the first order-5 element in breadth-first order over words
// in the generators.
VerificationReport table2_report(Table2Scope scope = Table2Scope::kDefault, const SuiteOptions& options = {});

// psl/psu centralizer formulas against direct centralizer computations, and
// class size times formula value against the group order.
VerificationReport formula_report(const SuiteOptions& options = {});

// The 6p^4-vertex family for a prime p >= 3. Throws std::invalid_argument for
// other p. Graph-level claims are skipped when 6p^4 passes the vertex cap.
VerificationReport family_report(std::uint32_t p, const SuiteOptions& options = {});

// The three mod-5 facts for a prime power q prime to 5, with s = 1..max_s.
// Throws std::invalid_argument otherwise.
VerificationReport observation_check(std::uint64_t q, std::uint32_t max_s = 8);

// Coset enumeration of the four 2-group presentations; the generator shift on
// the three graph groups is a fixed-point-free automorphism of order 5 with
// g g^s g^{s^2} g^{s^3} g^{s^4} = 1 for every g.
VerificationReport presentation_report();

}  // namespace qsym

#endif  // QSYM_VERIFY_SUITES_HPP_
