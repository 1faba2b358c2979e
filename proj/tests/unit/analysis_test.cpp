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
#include "qsym/analysis/conjugacy.hpp"
#include "qsym/analysis/structure.hpp"
#include "qsym/groups/catalog.hpp"
#include "qsym/groups/classical.hpp"
#include "qsym/perm/stabilizer_chain.hpp"

using namespace qsym;

namespace {

StabilizerChain chain_of(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(parse_cycles(c, degree));
  return StabilizerChain(degree, gens);
}

StabilizerChain alternating(std::uint32_t n) {
  const auto gens = alternating_generators(n);
  return StabilizerChain(n, gens);
}

// Oracles by full enumeration.
std::size_t brute_class_size(const StabilizerChain& g, const Permutation& x) {
  std::set<Permutation> cls;
  g.for_each_element([&](const Permutation& h) { cls.insert(conjugate(x, h)); });
  return cls.size();
}

std::size_t brute_centralizer_order(const StabilizerChain& g, const Permutation& x) {
  std::size_t n = 0;
  g.for_each_element([&](const Permutation& h) { n += h * x == x * h ? 1 : 0; });
  return n;
}

std::size_t brute_normalizer_order(const StabilizerChain& g, const Permutation& x) {
  std::set<Permutation> powers;
  for (std::uint64_t k = 0; k < element_order(x); ++k) powers.insert(power(x, static_cast<std::int64_t>(k)));
  std::size_t n = 0;
  g.for_each_element([&](const Permutation& h) { n += powers.count(conjugate(x, h)); });
  return n;
}

}  // namespace

TEST_CASE("class sizes against enumeration") {
  const auto a5 = alternating(5);
  const auto five = parse_cycles("(1,2,3,4,5)", 5);
  CHECK(conjugacy_class_size(a5, five) == 12);
  CHECK(conjugacy_class_size(a5, five) == brute_class_size(a5, five));
  CHECK(conjugacy_class_size(a5, Permutation(5)) == 1);
  const auto a7 = alternating(7);
  for (const char* c : {"(1,2,3)", "(1,2)(3,4)", "(1,2,3,4,5)", "(1,2,3)(4,5,6)", "(1,2,3,4,5,6,7)"}) {
    Permutation x(7);
    try {
      x = parse_cycles(c, 7);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!a7.contains(x)) continue;
    CAPTURE(c);
    ConjugacyClass cls(a7, x);
    CHECK(cls.size() == brute_class_size(a7, x));
    CHECK(cls.centralizer().order() == brute_centralizer_order(a7, x));
    CHECK(normalizer_cyclic(a7, x).order() == brute_normalizer_order(a7, x));
  }
}

TEST_CASE("class elements, lookup and transporters") {
  const auto m11 = build_chain(coset_generators(coset_fixture("G396")).t);
  REQUIRE(m11.order() == 7920);
  const auto x = *find_element_of_order(m11, 5);
  ConjugacyClass cls(m11, x);
  CHECK(cls.size() == 1584);
  std::set<Permutation> seen;
  for (std::size_t i = 0; i < cls.size(); i += 37) {
    const auto y = cls.element(i);
    CHECK(seen.insert(y).second);
    CHECK(cls.index_of(y) == i);
    CHECK(conjugate(x, cls.transporter(i)) == y);
  }
  CHECK_FALSE(cls.index_of(Permutation(m11.degree())).has_value());
  CHECK_THROWS_AS(ConjugacyClass(m11, x, 1000), CapacityExceeded);
  CHECK_THROWS_AS(ConjugacyClass(alternating(5), parse_cycles("(1,2)", 5)), std::invalid_argument);
}

TEST_CASE("centralizers of order 5 elements in alternating groups") {
  const auto five = [](std::uint32_t n) { return parse_cycles("(1,2,3,4,5)", n); };
  const auto c5 = centralizer(alternating(5), five(5));
  CHECK(c5.order() == 5);
  CHECK(recognize(c5) == "Z5");
  const auto c8 = centralizer(alternating(8), five(8));
  CHECK(c8.order() == 15);
  CHECK(recognize(c8) == "Z15");
  const auto c9 = centralizer(alternating(9), five(9));
  CHECK(c9.order() == 60);
  CHECK(recognize(c9) == "Z5xA4");
  for (const auto& g : c9.generators()) CHECK(g * five(9) == five(9) * g);
  CHECK(c9.contains(five(9)));
}

TEST_CASE("normalizers of cyclic subgroups") {
  const auto a6 = alternating(6);
  const auto g = parse_cycles("(1,5)(3,4)", 6);
  const auto n = normalizer_cyclic(a6, g);
  CHECK(n.order() == 8);
  CHECK(n.contains(parse_cycles("(1,3)(4,5)", 6)));
  CHECK(n.contains(parse_cycles("(2,6)(3,4)", 6)));
  CHECK(normalizer_cyclic(alternating(5), parse_cycles("(1,2,3,4,5)", 5)).order() == 10);
  CHECK(normalizer_cyclic(a6, Permutation(6)).order() == 360);
}

TEST_CASE("recognition of the reference structures") {
  CHECK(recognize(chain_of(8, {"(1,2,3)(4,5,6,7,8)"})) == "Z15");
  CHECK(recognize(chain_of(5, {"(1,2,3,4,5)", "(2,5)(3,4)"})) == "D10");
  CHECK(recognize(chain_of(5, {"(1,2,3,4,5)", "(2,3,5,4)"})) == "AGL1(5)");
  CHECK(recognize(chain_of(9, {"(1,2,3,4,5)(6,7,8,9)"})) == "Z20");
  CHECK(recognize(chain_of(10, {"(1,2,3,4,5)(6,7)"})) == "Z10");
  CHECK(recognize(chain_of(6, {"(1,2,3,4,5,6)"})) == "unknown");
  // D10 written on other points and with other generators.
  CHECK(recognize(chain_of(10, {"(1,3,5,7,9)(2,4,6,8,10)", "(1,2)(3,10)(4,9)(5,8)(6,7)"})) == "D10");
  const auto g126 = coset_generators(coset_fixture("G126"));
  CHECK(recognize(build_chain(g126.h)) == "(A4xA5):Z2");
  const auto g16 = chain_of(10, {"(1,2,3,4)", "(1,2)", "(6,7,8,9,10)", "(6,7)"});
  CHECK(recognize(g16) == "S4xS5");
  CHECK(recognize(alternating(8)) == "unknown");
}

TEST_CASE("derived series, center and Sylow orders") {
  CHECK(derived_subgroup(alternating(5)).order() == 60);
  CHECK(derived_subgroup(chain_of(4, {"(1,2,3,4)", "(1,2)"})).order() == 12);
  CHECK(is_solvable(chain_of(4, {"(1,2,3,4)", "(1,2)"})));
  CHECK_FALSE(is_solvable(alternating(5)));
  CHECK(is_solvable(chain_of(9, {"(1,2,3,4,5)", "(6,7,8)", "(6,7)(8,9)"})));
  CHECK(center(chain_of(7, {"(1,2,3,4,5)", "(2,5)(3,4)", "(6,7)"})).order() == 2);
  CHECK(sylow5_order(alternating(5)) == 5);
  CHECK(sylow5_order(alternating(10)) == 25);
  CHECK(sylow5_order(build_chain(coset_generators(coset_fixture("G22176")).t)) == 5);
  const auto f = fingerprint(alternating(5));
  std::uint64_t total = 0;
  for (const auto& [o, m] : f.element_orders) total += m;
  CHECK(total == 60);
  CHECK(f.element_orders.at(5) == 24);
}

TEST_CASE("order five element search") {
  const auto a6 = alternating(6);
  const auto x = find_element_of_order(a6, 5);
  REQUIRE(x.has_value());
  CHECK(element_order(*x) == 5);
  CHECK(a6.contains(*x));
  CHECK_FALSE(find_element_of_order(chain_of(4, {"(1,2,3,4)", "(1,2)"}), 5).has_value());
}
