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
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qsym/analysis/conjugacy.hpp"
#include "qsym/graphs/builders.hpp"
#include "qsym/groups/semidirect.hpp"
#include "qsym/symmetry/symmetry.hpp"
#include "qsym/verify/catalog_graph.hpp"
#include "qsym/verify/formulas.hpp"
#include "qsym/verify/report.hpp"
#include "qsym/verify/suites.hpp"

using namespace qsym;

namespace {

const Claim& claim(const VerificationReport& r, const std::string& id) {
  const Claim* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, id);
  return *c;
}

// 5-adic valuation, by repeated division.
int valuation5(BigInt n) {
  int v = 0;
  while (n != 0 && n % 5 == 0) {
    n /= 5;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("report records outcomes") {
  VerificationReport r("demo");
  CHECK(r.check("a", "here", "1", [] { return std::string("1"); }).status == ClaimStatus::kPass);
  CHECK(r.check("b", "here", "1", [] { return std::string("2"); }).status == ClaimStatus::kFail);
  const auto& thrown = r.check("c", "here", "1", []() -> std::string { throw std::runtime_error("boom"); });
  CHECK(thrown.status == ClaimStatus::kFail);
  CHECK(thrown.computed == "error: boom");
  const auto& capped = r.check("d", "here", "1", []() -> std::string { throw CapacityExceeded("too big"); });
  CHECK(capped.status == ClaimStatus::kSkipped);
  CHECK(capped.reason == "too big");
  CHECK(r.skip("e", "here", "1", "later").status == ClaimStatus::kSkipped);
  CHECK(r.count(ClaimStatus::kPass) == 1);
  CHECK(r.count(ClaimStatus::kFail) == 2);
  CHECK(r.count(ClaimStatus::kSkipped) == 2);
  CHECK_FALSE(r.passed());
  CHECK_THROWS_AS(r.skip("a", "here", "", ""), std::invalid_argument);
  CHECK_THROWS_AS(r.skip("f", "", "", ""), std::invalid_argument);
}

TEST_CASE("report JSON schema and determinism") {
  const auto a = observation_check(7);
  const auto b = observation_check(7);
  CHECK(a.to_json(false) == b.to_json(false));
  const auto j = nlohmann::json::parse(a.to_json());
  CHECK(j["suite"] == "observation");
  CHECK(j.contains("timestamp"));
  REQUIRE(j["claims"].size() == a.claims().size());
  for (const auto& c : j["claims"]) {
    for (const char* key : {"id", "anchor", "expected", "computed", "status", "ms"}) CHECK(c.contains(key));
    CHECK_FALSE(c["anchor"].get<std::string>().empty());
  }
  CHECK_FALSE(nlohmann::json::parse(a.to_json(false)).contains("timestamp"));
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(41));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  for (std::uint64_t q : {2, 3, 4, 8, 9, 16, 25, 27, 49, 121, 128}) CHECK(is_prime_power(q));
  for (std::uint64_t q : {0, 1, 6, 10, 12, 36, 100}) CHECK_FALSE(is_prime_power(q));
  CHECK(multiplicative_order_mod(2, 5) == 4);
  CHECK(multiplicative_order_mod(4, 5) == 2);
  CHECK(multiplicative_order_mod(11, 5) == 1);
  CHECK_THROWS_AS(multiplicative_order_mod(10, 5), std::invalid_argument);
}

TEST_CASE("centralizer formula examples") {
  const std::vector<std::uint32_t> one{1}, one_zero{1, 0};
  auto psl34 = psl_centralizer_formula(4, 1, one_zero);
  CHECK(psl34.n == 3);
  CHECK(psl34.group_order == 15);
  CHECK(psl34.simple_order == 5);
  CHECK(psl_centralizer_formula(2, 1, one).simple_order == 15);
  auto psl43 = psl_centralizer_formula(3, 0, one);
  CHECK(psl43.group_order == 40);
  CHECK(psl43.simple_order == 20);
  CHECK(psu_centralizer_formula(3, 0, one).group_order == 20);
  CHECK(psu_centralizer_formula(3, 0, one).simple_order == 5);
  CHECK(psu_centralizer_formula(2, 0, one).simple_order == 5);
  CHECK(psu_centralizer_formula(2, 1, one).simple_order == 15);
  // The unitary n = 3 case with q = 1 mod 5 gives q^2 - 1.
  const std::vector<std::uint32_t> zero_one{0, 1};
  CHECK(psu_centralizer_formula(11, 1, zero_one).group_order == 120);

  CHECK_THROWS_AS(psl_centralizer_formula(5, 1, one), std::invalid_argument);
  CHECK_THROWS_AS(psl_centralizer_formula(6, 1, one), std::invalid_argument);
  CHECK_THROWS_AS(psl_centralizer_formula(4, 1, one), std::invalid_argument);
  const std::vector<std::uint32_t> zero{0};
  CHECK_THROWS_AS(psl_centralizer_formula(2, 1, zero), std::invalid_argument);
}

TEST_CASE("PSL2 formula values agree with direct centralizers") {
  // q = 1 mod 5 uses four parts, q = 4 mod 5 two parts.
  const std::vector<std::uint32_t> split{1, 0, 0, 0}, torus{1, 0};
  struct Case {
    const char* group;
    std::uint32_t q, e;
    const std::vector<std::uint32_t>* parts;
  };
  for (const Case& c : {Case{"PSL2(11)", 11, 1, &split}, Case{"PSL2(16)", 16, 1, &split},
                        Case{"PSL2(19)", 19, 0, &torus}, Case{"PSL2(29)", 29, 0, &torus},
                        Case{"PSL2(31)", 31, 1, &split}, Case{"PSL2(41)", 41, 1, &split}}) {
    CAPTURE(c.group);
    const auto f = psl_centralizer_formula(c.q, c.e, *c.parts);
    CHECK(f.n == 2);
    auto chain = build_chain(table2_generators(c.group));
    // Any element of order 5: PSL2(q) has one class of cyclic subgroups.
    Permutation x = chain.generators().front();
    for (const auto& g : chain.elements()) {
      if (element_order(g) == 5) {
        x = g;
        break;
      }
    }
    CHECK(centralizer(chain, x).order() == f.simple_order);
  }
}

TEST_CASE("observation against exact arithmetic") {
  CHECK_THROWS_AS(observation_check(5), std::invalid_argument);
  CHECK_THROWS_AS(observation_check(25), std::invalid_argument);
  CHECK_THROWS_AS(observation_check(6), std::invalid_argument);
  CHECK_THROWS_AS(observation_check(7, 0), std::invalid_argument);
  CHECK(claim(observation_check(2), "observation.q=2.q_2_or_3_mod_5").computed == "true");
  CHECK(claim(observation_check(4), "observation.q=4.q_2_or_3_mod_5").computed == "vacuous");
  for (std::uint64_t q = 2; q < 300; ++q) {
    if (!is_prime_power(q) || q % 5 == 0) continue;
    CAPTURE(q);
    const auto r = observation_check(q, 3);
    CHECK(r.passed());
    const BigInt Q(q);
    const int v2 = valuation5((pow(Q, 2) - 1) * (pow(Q, 6) - 1));
    CHECK(v2 != 1);
    if (q % 5 == 2 || q % 5 == 3) {
      CHECK(valuation5((pow(Q, 3) + 1) * (Q - 1)) == 0);
      CHECK(valuation5((pow(Q, 6) + 1) * (pow(Q, 4) - 1)) >= 2);
    }
  }
}

TEST_CASE("catalog graphs carry their groups") {
  for (const char* name : {"K6", "G16", "G36", "G256"}) {
    CAPTURE(name);
    auto cg = build_catalog_graph(name);
    GraphAction action(cg.graph, cg.group_generators);
    CHECK(transitivity(action).arc_transitive);
    CHECK(cg.order5[0] == 0);
    CHECK(is_quasi_semiregular(cg.order5));
    CHECK(build_chain(cg.group_generators).order() == cg.group_order);
  }
  CHECK_THROWS_AS(build_catalog_graph("G7"), std::invalid_argument);
  CHECK_THROWS_AS(build_catalog_graph("G4096", 1000), std::length_error);
}

TEST_CASE("table rows and generators") {
  CHECK(table1_rows().size() == 11);
  std::size_t default_rows = 0;
  for (const auto& r : table2_rows()) default_rows += r.extended_only ? 0 : 1;
  CHECK(default_rows == 23);
  CHECK(build_chain(table2_generators("PSU4(2)")).order() == 25920);
  CHECK(build_chain(table2_generators("A7")).order() == 2520);
  CHECK_THROWS_AS(table2_generators("POmega7(3)"), std::invalid_argument);
  CHECK_THROWS_AS(table2_generators("PSL(2)"), std::invalid_argument);
}

TEST_CASE("graph table suite") {
  SuiteOptions options;
  options.threads = 2;
  const auto r = table1_report(options);
  CHECK(r.passed());
  CHECK(claim(r, "table1.G126.stabilizer_order").computed == "2880");
  CHECK(claim(r, "table1.G22176.aut_order").status == ClaimStatus::kSkipped);
  CHECK(r.to_json(false) == table1_report().to_json(false));
}

TEST_CASE("presentation suite") {
  const auto r = presentation_report();
  CHECK(r.passed());
  CHECK(r.count(ClaimStatus::kSkipped) == 0);
  CHECK(claim(r, "presentation.auxiliary.index").computed == "4096");
}

TEST_CASE("family suite") {
  CHECK_THROWS_AS(family_report(2), std::invalid_argument);
  CHECK_THROWS_AS(family_report(9), std::invalid_argument);
  const auto r7 = family_report(7);
  CHECK(r7.passed());
  CHECK(r7.count(ClaimStatus::kSkipped) == 0);
  CHECK(claim(r7, "family.p=7.vertices").computed == "14406");
  CHECK(claim(r7, "family.p=7.ghat_order").computed == "288120");

  const auto r5 = family_report(5);
  CHECK(claim(r5, "family.p=5.alpha_qsr").computed == "false");
  CHECK(claim(r5, "family.p=5.qsr_order5_candidates").computed == "0");

  SuiteOptions small;
  small.vertex_cap = 1000;
  const auto capped = family_report(7, small);
  CHECK(claim(capped, "family.p=7.vertices").status == ClaimStatus::kSkipped);
  CHECK(claim(capped, "family.p=7.gamma_u_alpha2_order_divides_5").status == ClaimStatus::kPass);
}

TEST_CASE("family qsr count for p = 3 matches exhaustive search") {
  // Exhaustive oracle over all 9720 elements of G.
  const SemidirectGroup g(3);
  const auto cg = family_graph(g);
  std::uint64_t qsr = 0;
  for (std::uint8_t t = 0; t < 120; ++t) {
    for (std::uint32_t k = 0; k < 81; ++k) {
      const SemidirectElement e{{{k % 3, k / 3 % 3, k / 9 % 3, k / 27}}, t};
      if (g.element_order(e) == 5) qsr += is_quasi_semiregular(family_action(g, cg, e)) ? 1 : 0;
    }
  }
  // The report counts the representatives x alpha; L has 24 elements of order 5.
  const auto r = family_report(3);
  CHECK(std::to_string(qsr / 24) == claim(r, "family.p=3.qsr_order5_candidates").computed);
  CHECK(qsr % 24 == 0);
}
