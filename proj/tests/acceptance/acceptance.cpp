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

// One line per acceptance criterion, then a nonzero exit if any failed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsym/graphs/builders.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/groups/catalog.hpp"
#include "qsym/groups/semidirect.hpp"
#include "qsym/perm/stabilizer_chain.hpp"
#include "qsym/verify/catalog_graph.hpp"
#include "qsym/verify/suites.hpp"

using namespace qsym;

namespace {

// Budgets and tolerances. Orders, counts and indices are compared exactly.
constexpr double kGraphBudgetSeconds = 60;
constexpr double kAutBudgetSeconds = 600;
constexpr double kTable2BudgetSeconds = 900;
constexpr std::uint64_t kTable2MemoryBytes = std::uint64_t{1} << 30;
constexpr std::size_t kAutCap = 512;
constexpr int kFuzzWords = 1000;
constexpr int kFuzzMaxLength = 24;
constexpr std::uint64_t kFuzzSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Peak resident set size of this process, from /proc.
std::uint64_t peak_rss_bytes() {
  std::ifstream f("/proc/self/status");
  std::string line;
  while (std::getline(f, line)) {
    if (line.rfind("VmHWM:", 0) == 0) return std::stoull(line.substr(6)) * 1024;
  }
  return 0;
}

void expect_claims(Outcome& out, const VerificationReport& r, const std::string& prefix,
                   const std::vector<std::string>& fields) {
  for (const auto& f : fields) {
    const Claim* c = r.find(prefix + f);
    if (c == nullptr) {
      out.fail(prefix + f + " missing");
    } else if (c->status != ClaimStatus::kPass) {
      out.fail(prefix + f + " " + to_string(c->status) + ": expected " + c->expected + ", computed " + c->computed);
    }
  }
}

void expect_all_pass(Outcome& out, const VerificationReport& r) {
  for (const auto& c : r.claims()) {
    if (c.status == ClaimStatus::kFail) {
      out.fail(c.id + " fail: expected " + c.expected + ", computed " + c.computed);
    }
  }
}

const std::vector<std::string> kGraphNames{"G16",  "G256", "G4096", "G36",   "G66",
                                           "G126", "G396", "G1456", "G2016", "G22176"};
const std::vector<std::string> kAutNames{"K6", "G16", "G36", "G66", "G126", "G396", "G256"};

Outcome criterion1(const VerificationReport& table1, double elapsed) {
  Outcome out;
  for (const auto& name : kGraphNames) {
    expect_claims(out, table1, "table1." + name + ".",
                  {"vertices", "valency", "connected", "bipartite", "vertices_mod_5", "quasi_semiregular_order_5"});
  }
  out.expect(elapsed < kGraphBudgetSeconds, "over the time budget");
  return out;
}

Outcome criterion2(const VerificationReport& table1, double elapsed) {
  Outcome out;
  for (const auto& name : kAutNames) expect_claims(out, table1, "table1." + name + ".", {"aut_order", "stabilizer_order"});
  out.expect(elapsed < kAutBudgetSeconds, "over the time budget");
  return out;
}

Outcome criterion3(const VerificationReport& table2, double elapsed, std::uint64_t peak) {
  Outcome out;
  std::size_t rows = 0;
  for (const auto& row : table2_rows()) {
    const std::string prefix = "table2." + row.name + ".";
    if (row.extended_only) {
      const Claim* c = table2.find(prefix + "centralizer_order");
      out.expect(c != nullptr && c->status == ClaimStatus::kSkipped, row.name + " not skipped");
      continue;
    }
    ++rows;
    expect_claims(out, table2, prefix, {"order", "centralizer_order", "centralizer_structure"});
  }
  out.expect(rows == 23, "expected 23 rows, found " + std::to_string(rows));
  out.expect(elapsed < kTable2BudgetSeconds, "over the time budget");
  out.expect(peak < kTable2MemoryBytes, "peak memory " + std::to_string(peak >> 20) + " MiB");
  return out;
}

Outcome criterion4(const VerificationReport& formula) {
  Outcome out;
  for (const char* g : {"PSL3(4)", "PSL4(3)", "PSL5(2)", "PSU4(3)", "PSU5(2)"}) {
    expect_claims(out, formula, std::string("formula.") + g + ".",
                  {"direct_centralizer_order", "class_size_times_formula"});
  }
  return out;
}

Outcome criterion5(const std::vector<std::pair<std::uint32_t, VerificationReport>>& family) {
  Outcome out;
  for (const auto& [prime, r] : family) {
    const std::string p = std::to_string(prime);
    const std::string prefix = "family.p=" + p + ".";
    expect_claims(out, r, prefix, {"group_order", "arc_transitive", "ghat_order", "ghat_order_is_vertices_times_20"});
    if (p == "3" || p == "5") {
      expect_claims(out, r, prefix, {"alpha_qsr", "qsr_order5_candidates"});
    } else {
      expect_all_pass(out, r);
    }
  }
  return out;
}

Outcome criterion6(const VerificationReport& pres) {
  Outcome out;
  const std::vector<std::pair<std::string, std::string>> indices{
      {"G16", "16"}, {"G256", "256"}, {"G4096", "4096"}, {"auxiliary", "4096"}};
  for (const auto& [name, index] : indices) {
    const Claim* c = pres.find("presentation." + name + ".index");
    out.expect(c != nullptr && c->status == ClaimStatus::kPass && c->computed == index, name + " index");
  }
  for (const char* name : {"G16", "G256", "G4096"}) {
    expect_claims(out, pres, std::string("presentation.") + name + ".",
                  {"shift_is_endomorphism", "shift_order", "shift_fixed_elements", "product_identity_failures"});
  }
  return out;
}

// Random words in the generators and their inverses must sift to the
// identity; a transposition never lies in a simple group of degree > 2.
void bsgs_fuzz(Outcome& out, const std::string& label, const std::vector<Permutation>& gens, bool simple,
               std::mt19937_64& rng) {
  const auto chain = build_chain(gens);
  const BigInt order = chain.order();
  std::vector<Permutation> letters = gens;
  for (const auto& g : gens) letters.push_back(inverse(g));
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> length(1, kFuzzMaxLength);
  int bad = 0;
  for (int i = 0; i < kFuzzWords; ++i) {
    Permutation w = Permutation::Identity(chain.degree());
    for (int k = length(rng); k > 0; --k) w = w * letters[pick(rng)];
    const auto [residue, level] = chain.sift(w);
    if (!residue.is_identity() || level != chain.levels().size() || order % element_order(w) != 0) ++bad;
  }
  out.expect(bad == 0, label + ": " + std::to_string(bad) + " fuzz words not sifted");
  if (simple) {
    std::vector<Point> t(chain.degree());
    for (Point i = 0; i < t.size(); ++i) t[i] = i;
    std::swap(t[0], t[1]);
    out.expect(!chain.contains(Permutation(t)), label + ": transposition accepted");
  }
}

// |H : H cap H^x| from the elements of H.
std::size_t intersection_index(const std::vector<Permutation>& h_gens, const Permutation& x) {
  const auto h = build_chain(h_gens);
  const Permutation xi = inverse(x);
  std::size_t size = 0, common = 0;
  h.for_each_element([&](const Permutation& g) {
    ++size;
    if (h.contains(x * g * xi)) ++common;
  });
  return size / common;
}

Outcome criterion7() {
  Outcome out;
  std::mt19937_64 rng(kFuzzSeed);
  for (const auto& f : coset_fixtures()) {
    const auto gens = coset_generators(f);
    bsgs_fuzz(out, f.name, gens.t, true, rng);
    const auto space = coset_graph(gens.t, gens.h, gens.x);
    const auto k = valency(space.graph.graph);
    const auto index = intersection_index(gens.h, gens.x);
    out.expect(k && *k == index, f.name + ": valency differs from |H : H cap H^x| = " + std::to_string(index));
  }
  for (const auto& f : cayley_fixtures()) {
    bsgs_fuzz(out, f.name, build_catalog_graph(f.name).group_generators, false, rng);
  }

  // A normal quotient of a family graph is K6 and the graph covers it: each
  // vertex has its 5 neighbours in 5 distinct blocks other than its own.
  for (std::uint32_t p : {7u, 11u}) {
    const SemidirectGroup g(p);
    const auto cg = family_graph(g);
    std::vector<Permutation> m;
    for (const auto& e : g.m_generators()) m.push_back(family_action(g, cg, e));
    const auto& graph = cg.graph;
    VertexPartition part(graph.vertex_count(), orbits(m, graph.vertex_count()));
    const auto q = quotient_graph(graph, part);
    const auto qk = valency(q.graph);
    out.expect(q.graph.vertex_count() == 6 && qk && *qk == 5, "p=" + std::to_string(p) + ": quotient is not K6");
    bool cover = true;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      std::vector<std::size_t> seen{part.block_of(v)};
      for (Vertex w : graph.neighbors(v)) seen.push_back(part.block_of(w));
      std::sort(seen.begin(), seen.end());
      cover = cover && std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    }
    out.expect(cover == q.cover && cover, "p=" + std::to_string(p) + ": cover check disagrees");
    const auto trivial = quotient_graph(graph, VertexPartition::singletons(graph.vertex_count()));
    out.expect(trivial.cover && trivial.graph == graph, "singleton quotient differs from the graph");
  }

  for (std::uint64_t q : {2, 3, 4, 7, 8, 9, 11, 16}) expect_all_pass(out, observation_check(q));
  return out;
}

}  // namespace

int main() {
  SuiteOptions options;
  options.aut_vertex_cap = kAutCap;

  // The centralizer table runs first so the process peak reflects it alone.
  auto t0 = std::chrono::steady_clock::now();
  const auto table2 = table2_report(Table2Scope::kDefault, options);
  const double table2_s = seconds_since(t0);
  const std::uint64_t table2_peak = peak_rss_bytes();

  t0 = std::chrono::steady_clock::now();
  const auto table1 = table1_report(options);
  const double table1_s = seconds_since(t0);

  const auto formula = formula_report(options);
  std::vector<std::pair<std::uint32_t, VerificationReport>> family;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) family.emplace_back(p, family_report(p, options));
  const auto pres = presentation_report();

  const std::vector<std::pair<std::string, Outcome>> results{
      {"1 graph table, graph side", criterion1(table1, table1_s)},
      {"2 graph table, automorphism side", criterion2(table1, table1_s)},
      {"3 centralizer table", criterion3(table2, table2_s, table2_peak)},
      {"4 centralizer formulas", criterion4(formula)},
      {"5 family", criterion5(family)},
      {"6 presentations", criterion6(pres)},
      {"7 property suites", criterion7()},
  };
  bool all = true;
  for (const auto& [label, o] : results) {
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << label;
    if (label[0] == '1' || label[0] == '2') line << " (" << table1_s << " s)";
    if (label[0] == '3') line << " (" << table2_s << " s, peak " << (table2_peak >> 20) << " MiB)";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "      " << n << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
