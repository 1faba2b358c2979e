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

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qsym/perm/permutation.hpp"
#include "qsym/perm/stabilizer_chain.hpp"

using namespace qsym;

namespace {

// Closure of the generators by repeated right multiplication.
std::set<Permutation> brute_force_group(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(gens.front().degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        auto h = g * s;
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("composition is left to right") {
  auto p = parse_cycles("(1,2)", 3);
  auto q = parse_cycles("(2,3)", 3);
  // 1 -> 2 under p, then 2 -> 3 under q.
  CHECK((p * q)[0] == 2);
  CHECK(to_cycle_string(p * q) == "(1,3,2)");
  CHECK(to_cycle_string(q * p) == "(1,2,3)");
}

TEST_CASE("cycle notation round trip") {
  auto p = parse_cycles(" (1, 3)(4,5) ", 6);
  CHECK(to_cycle_string(p) == "(1,3)(4,5)");
  CHECK(to_cycle_string(Permutation(4)) == "()");
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK(parse_cycles("(2,7)").degree() == 7);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0,1)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), std::invalid_argument);
}

TEST_CASE("orders, powers and cycle types") {
  auto x = parse_cycles("(1,5,2,7,10,6,11,9)(3,8)", 11);
  CHECK(element_order(x) == 8);
  CHECK(power(x, 8).is_identity());
  CHECK(power(x, -1) == inverse(x));
  CHECK(power(x, 3) * power(x, 5) == Permutation(11));
  CHECK(cycle_type(x) == std::vector<std::size_t>{1, 2, 8});
  CHECK(fixed_point_count(x) == 1);
  auto g = parse_cycles("(1,2,3)", 4);
  auto h = parse_cycles("(3,4)", 4);
  CHECK(conjugate(g, h) == inverse(h) * g * h);
  CHECK(commutator(g, h) == inverse(g) * inverse(h) * g * h);
  CHECK(to_cycle_string(conjugate(g, h)) == "(1,2,4)");
}

TEST_CASE("symmetric and alternating group orders") {
  auto s5 = build_chain(std::vector{parse_cycles("(1,2,3,4,5)"), parse_cycles("(1,2)", 5)});
  CHECK(s5.order() == 120);
  CHECK(s5.verify());
  auto a9 = build_chain(std::vector{parse_cycles("(1,2,3,4,5,6,7,8,9)"), parse_cycles("(1,2,3)", 9)});
  CHECK(a9.order() == 181440);
  CHECK(build_chain(4, {}).order() == 1);
}

TEST_CASE("fixture group orders") {
  std::vector<Permutation> psl211{
      parse_cycles("(1,12)(2,5)(3,11)(4,7)(6,10)(8,9)", 12),
      parse_cycles("(1,7,6,3,5)(2,11,10,4,12)", 12),
      parse_cycles("(1,5)(2,12)(3,9)(4,6)(7,10)(8,11)", 12),
  };
  CHECK(build_chain(psl211).order() == 660);
  std::vector<Permutation> m22{
      parse_cycles("(1,10)(2,4,12,7)(5,17,15,21)(8,13)(9,18,19,11)(14,16,22,20)", 22),
      parse_cycles("(2,12,4,3,7)(5,14,13,22,15)(6,11,9,19,18)(8,17,20,16,21)", 22),
      parse_cycles("(1,8)(2,21,12,17)(4,15,7,5)(9,22,19,14)(10,13)(11,20,18,16)", 22),
  };
  auto chain = build_chain(m22);
  CHECK(chain.order() == 443520);
  CHECK(chain.verify());
}

TEST_CASE("membership agrees with brute force") {
  std::vector<Permutation> d10{parse_cycles("(1,5)(3,4)", 6), parse_cycles("(1,5,4,6,3)", 6)};
  auto chain = build_chain(d10);
  auto all = brute_force_group(d10);
  REQUIRE(all.size() == 10);
  CHECK(chain.order() == 10);
  CHECK_FALSE(chain.contains(parse_cycles("(1,3)(4,5)", 6)));
  CHECK(chain.contains(parse_cycles("(1,5)(3,4)", 6)));
  // Every permutation of S6 is tested against the oracle.
  std::vector<Point> img{0, 1, 2, 3, 4, 5};
  do {
    Permutation p(img);
    CHECK(chain.contains(p) == (all.count(p) == 1));
  } while (std::next_permutation(img.begin(), img.end()));
}

TEST_CASE("element enumeration matches brute force") {
  std::vector<Permutation> gens{parse_cycles("(1,2,3,4,5)", 7), parse_cycles("(2,3,5,4)", 7),
                                parse_cycles("(6,7)", 7)};
  auto chain = build_chain(gens);
  auto elems = chain.elements();
  CHECK(elems.size() == 40);
  CHECK(std::set<Permutation>(elems.begin(), elems.end()) == brute_force_group(gens));
}

TEST_CASE("random words are members; perturbed words are not") {
  std::vector<Permutation> m11{parse_cycles("(1,11,10,2)(5,9,6,7)", 11),
                               parse_cycles("(1,11,2,10,3)(4,6,7,9,5)", 11),
                               parse_cycles("(1,5,2,7,10,6,11,9)(3,8)", 11)};
  auto chain = build_chain(m11);
  REQUIRE(chain.order() == 7920);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, m11.size() - 1);
  auto odd = parse_cycles("(1,2)", 11);
  for (int t = 0; t < 200; ++t) {
    Permutation w(11);
    for (int k = 0; k < 20; ++k) w = w * m11[pick(rng)];
    CHECK(chain.contains(w));
    // M11 is simple, so it has no odd permutations.
    CHECK_FALSE(chain.contains(w * odd));
    CHECK(chain.contains(chain.random_element(rng)));
  }
}

TEST_CASE("base prefix yields point stabilizers") {
  std::vector<Permutation> s6{parse_cycles("(1,2,3,4,5,6)"), parse_cycles("(1,2)", 6)};
  std::vector<Point> prefix{5};
  StabilizerChain chain(6, s6, prefix);
  CHECK(chain.base().front() == 5);
  CHECK(chain.order() == 720);
  auto stab = build_chain(6, chain.stabilizer_generators(1));
  CHECK(stab.order() == 120);
}

TEST_CASE("Schreier vector transversals agree with explicit ones") {
  std::vector<Permutation> m22{
      parse_cycles("(1,10)(2,4,12,7)(5,17,15,21)(8,13)(9,18,19,11)(14,16,22,20)", 22),
      parse_cycles("(2,12,4,3,7)(5,14,13,22,15)(6,11,9,19,18)(8,17,20,16,21)", 22),
      parse_cycles("(1,8)(2,21,12,17)(4,15,7,5)(9,22,19,14)(10,13)(11,20,18,16)", 22),
  };
  StabilizerChain compact(22, m22, {}, 0);
  CHECK_FALSE(compact.levels().front().transversal.is_explicit());
  CHECK(compact.order() == 443520);
  CHECK(compact.verify());
}

TEST_CASE("orbits") {
  std::vector<Permutation> gens{parse_cycles("(1,2)(3,4)", 6), parse_cycles("(2,3)", 6)};
  auto orbs = orbits(gens, 6);
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0].size() == 4);
  CHECK(orbit(gens, 4) == std::vector<Point>{4});
}
