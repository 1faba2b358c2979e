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

#include "qsym/verify/suites.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "qsym/analysis/structure.hpp"
#include "qsym/fpgroup/presentation.hpp"
#include "qsym/groups/catalog.hpp"
#include "qsym/groups/classical.hpp"
#include "qsym/groups/semidirect.hpp"
#include "qsym/groups/two_groups.hpp"
#include "qsym/verify/catalog_graph.hpp"
#include "qsym/verify/formulas.hpp"

namespace qsym {

namespace {

std::string str(const BigInt& n) { return n.str(); }
std::string str(std::uint64_t n) { return std::to_string(n); }
std::string str(bool b) { return b ? "true" : "false"; }

// Runs f(0..n-1) on up to `threads` workers. f must not throw.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F f) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
  };
  if (workers == 1) {
    run();
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
}

template <class T>
const T& require(const std::optional<T>& x, const char* what) {
  if (!x) throw std::runtime_error(std::string(what) + " unavailable");
  return *x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph table

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows{
      {"K6", 6, "720", "120", "S5"},
      {"G16", 16, "1920", "120", "S5"},
      {"G256", 256, "5120", "20", "AGL1(5)"},
      {"G4096", 4096, "81920", "20", "AGL1(5)"},
      {"G36", 36, "1440", "40", "Z2xAGL1(5)"},
      {"G66", 66, "1320", "20", "Z2xD10"},
      {"G126", 126, "362880", "2880", "S4xS5"},
      {"G396", 396, "7920", "20", "AGL1(5)"},
      {"G1456", 1456, "29120", "20", "AGL1(5)"},
      {"G2016", 2016, "80640", "40", "Z2xAGL1(5)"},
      {"G22176", 22176, "887040", "40", "Z2xAGL1(5)"},
  };
  return rows;
}

namespace {

VerificationReport table1_row(const Table1Row& row, const SuiteOptions& options) {
  VerificationReport r("table1");
  const std::string id = "table1." + row.name + ".";
  const std::string anchor = "table1:" + row.name;
  std::optional<CatalogGraph> cg;
  r.check(id + "vertices", anchor, str(row.vertices), [&] {
    cg = build_catalog_graph(row.name, options.vertex_cap);
    return str(std::uint64_t{cg->graph.vertex_count()});
  });
  r.check(id + "valency", anchor, "5", [&] {
    const auto k = valency(require(cg, "graph").graph);
    return k ? str(std::uint64_t{*k}) : std::string("irregular");
  });
  r.check(id + "connected", anchor, "true", [&] { return str(is_connected(require(cg, "graph").graph)); });
  r.check(id + "bipartite", anchor, "false", [&] { return str(is_bipartite(require(cg, "graph").graph)); });
  r.check(id + "vertices_mod_5", anchor, "1",
          [&] { return str(std::uint64_t{require(cg, "graph").graph.vertex_count() % 5}); });
  r.check(id + "group_arc_transitive", anchor, "true", [&] {
    const auto& c = require(cg, "graph");
    return str(transitivity(GraphAction(c.graph, c.group_generators)).arc_transitive);
  });
  r.check(id + "quasi_semiregular_order_5", anchor, "true", [&] {
    const auto& c = require(cg, "graph");
    return str(element_order(c.order5) == 5 && is_quasi_semiregular(c.order5) && is_automorphism(c.graph, c.order5));
  });

  std::optional<AutomorphismGroup> aut;
  const auto& aut_claim = r.check(id + "aut_order", anchor, row.aut_order, [&] {
    aut = automorphism_group(require(cg, "graph").graph, options.aut_vertex_cap);
    return str(aut->order);
  });
  if (!aut) {
    const std::string reason =
        aut_claim.status == ClaimStatus::kSkipped ? aut_claim.reason : "automorphism group not computed";
    r.skip(id + "stabilizer_order", anchor, row.stabilizer_order, reason);
    if (!row.stabilizer_structure.empty()) r.skip(id + "stabilizer_structure", anchor, row.stabilizer_structure, reason);
    return r;
  }
  r.check(id + "stabilizer_order", anchor, row.stabilizer_order, [&] { return str(stabilizer_order(aut->chain, 0)); });
  if (!row.stabilizer_structure.empty()) {
    r.check(id + "stabilizer_structure", anchor, row.stabilizer_structure, [&] {
      const std::size_t n = cg->graph.vertex_count();
      const std::vector<Point> prefix{0};
      StabilizerChain with_base(n, aut->generators, prefix);
      return recognize(build_chain(n, with_base.stabilizer_generators(1)));
    });
  }
  return r;
}

}  // namespace

VerificationReport table1_report(const SuiteOptions& options) {
  const auto& rows = table1_rows();
  std::vector<VerificationReport> parts(rows.size(), VerificationReport("table1"));
  parallel_for(rows.size(), options.threads, [&](std::size_t i) { parts[i] = table1_row(rows[i], options); });
  VerificationReport out("table1");
  for (const auto& p : parts) out.append(p);
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer table

const std::vector<Table2Row>& table2_rows() {
  static const std::vector<Table2Row> rows{
      {"A5", "60", "5", "Z5"},
      {"A6", "360", "5", "Z5"},
      {"A7", "2520", "5", "Z5"},
      {"A8", "20160", "15", "Z15"},
      {"A9", "181440", "60", "Z5xA4"},
      {"M11", "7920", "5", "Z5"},
      {"M12", "95040", "10", "Z10"},
      {"M22", "443520", "5", "Z5"},
      {"M23", "10200960", "15", "Z15"},
      {"M24", "244823040", "60", "Z5xA4"},
      {"Sz(8)", "29120", "5", "Z5"},
      {"PSL2(19)", "3420", "10", "Z10"},
      {"PSL3(4)", "20160", "5", "Z5"},
      {"PSL2(29)", "12180", "15", "Z15"},
      {"PSL2(11)", "660", "5", "Z5"},
      {"PSL2(16)", "4080", "15", "Z15"},
      {"PSL2(31)", "14880", "15", "Z15"},
      {"PSL2(41)", "34440", "20", "Z20"},
      {"PSL4(3)", "6065280", "20", "Z20"},
      {"PSL5(2)", "9999360", "15", "Z15"},
      {"PSU4(3)", "3265920", "5", "Z5"},
      {"PSU4(2)", "25920", "5", "Z5"},
      {"PSU5(2)", "13685760", "15", "Z15"},
      {"POmega7(3)", "4585351680", "120", "Z5xS4", true},
  };
  return rows;
}

std::vector<Permutation> table2_generators(std::string_view name) {
  const std::string n(name);
  if (n.size() == 2 && n[0] == 'A' && n[1] >= '5' && n[1] <= '9') {
    return alternating_generators(static_cast<std::uint32_t>(n[1] - '0'));
  }
  if (n == "M11") return coset_generators(coset_fixture("G396")).t;
  if (n == "M22") return coset_generators(coset_fixture("G22176")).t;
  if (n == "Sz(8)") return coset_generators(coset_fixture("G1456")).t;
  if (n == "M12") return m12_generators();
  if (n == "M23") return m23_generators();
  if (n == "M24") return m24_generators();
  // PSL<n>(<q>) and PSU<n>(<q>).
  if (n.size() > 6 && (n.starts_with("PSL") || n.starts_with("PSU")) && n.back() == ')') {
    const auto open = n.find('(');
    if (open != std::string::npos) {
      const auto dim = static_cast<std::uint32_t>(std::stoul(n.substr(3, open - 3)));
      const auto q = static_cast<std::uint32_t>(std::stoul(n.substr(open + 1, n.size() - open - 2)));
      return n.starts_with("PSL") ? psl_generators(dim, q) : psu_generators(dim, q);
    }
  }
  throw std::invalid_argument("no construction for group '" + n + "'");
}

namespace {

// Group chain with at most a few generators, and the test element of order 5.
struct Table2Group {
  StabilizerChain chain;
  Permutation x;
};

Table2Group table2_group(const std::string& name) {
  auto gens = table2_generators(name);
  StabilizerChain chain = build_chain(gens);
  // Conjugation work scales with the generator count.
  if (gens.size() > 4) chain = build_chain(two_generator_reduction(chain, 0x7ab1e2));
  auto x = find_element_of_order(chain, 5);
  if (!x) throw std::logic_error(name + ": no element of order 5 found");
  return {std::move(chain), std::move(*x)};
}

VerificationReport table2_row(const Table2Row& row, Table2Scope scope, const SuiteOptions& options) {
  VerificationReport r("table2");
  const std::string id = "table2." + row.name + ".";
  const std::string anchor = "table2:" + row.name;
  if (row.extended_only) {
    const std::string reason = scope == Table2Scope::kDefault
                                   ? "outside the default scope"
                                   : "no permutation representation is constructed for this group";
    r.skip(id + "centralizer_order", anchor, row.centralizer_order, reason);
    r.skip(id + "centralizer_structure", anchor, row.centralizer_structure, reason);
    return r;
  }
  std::optional<Table2Group> g;
  r.check(id + "order", anchor, row.order, [&] {
    g = table2_group(row.name);
    return str(g->chain.order());
  });
  r.check(id + "sylow5_order", anchor, "5", [&] { return str(sylow5_order(require(g, "group").chain)); });
  std::optional<StabilizerChain> c;
  r.check(id + "centralizer_order", anchor, row.centralizer_order, [&] {
    const auto& grp = require(g, "group");
    c = centralizer(grp.chain, grp.x, options.class_memory_cap);
    return str(c->order());
  });
  r.check(id + "centralizer_structure", anchor, row.centralizer_structure,
          [&] { return recognize(require(c, "centralizer")); });
  return r;
}

}  // namespace

VerificationReport table2_report(Table2Scope scope, const SuiteOptions& options) {
  const auto& rows = table2_rows();
  std::vector<VerificationReport> parts(rows.size(), VerificationReport("table2"));
  parallel_for(rows.size(), options.threads, [&](std::size_t i) { parts[i] = table2_row(rows[i], scope, options); });
  VerificationReport out("table2");
  for (const auto& p : parts) out.append(p);
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer formulas

namespace {

struct FormulaCase {
  std::string group;
  bool unitary;
  std::uint32_t q;
  std::uint32_t e;
  std::vector<std::uint32_t> parts;
  std::uint32_t dimension;
};

const std::vector<FormulaCase>& formula_cases() {
  static const std::vector<FormulaCase> cases{
      {"PSL3(4)", false, 4, 1, {1, 0}, 3}, {"PSL4(3)", false, 3, 0, {1}, 4}, {"PSL5(2)", false, 2, 1, {1}, 5},
      {"PSU4(2)", true, 2, 0, {1}, 4},     {"PSU4(3)", true, 3, 0, {1}, 4},  {"PSU5(2)", true, 2, 1, {1}, 5},
  };
  return cases;
}

VerificationReport formula_case(const FormulaCase& fc, const SuiteOptions& options) {
  VerificationReport r("formula");
  const std::string id = "formula." + fc.group + ".";
  const std::string anchor = std::string("centralizer formula:") + (fc.unitary ? "psu" : "psl");
  std::optional<CentralizerFormula> f;
  r.check(id + "dimension", anchor, str(std::uint64_t{fc.dimension}), [&] {
    f = fc.unitary ? psu_centralizer_formula(fc.q, fc.e, fc.parts) : psl_centralizer_formula(fc.q, fc.e, fc.parts);
    return str(std::uint64_t{f->n});
  });
  if (!f) return r;
  std::optional<Table2Group> g;
  std::optional<std::uint64_t> class_size;
  r.check(id + "direct_centralizer_order", anchor, str(f->simple_order), [&] {
    g = table2_group(fc.group);
    ConjugacyClass cls(g->chain, g->x, options.class_memory_cap);
    class_size = cls.size();
    return str(cls.centralizer().order());
  });
  const BigInt order = fc.unitary ? psu_order(fc.dimension, fc.q) : psl_order(fc.dimension, fc.q);
  r.check(id + "class_size_times_formula", anchor, str(order),
          [&] { return str(BigInt(require(class_size, "class size")) * f->simple_order); });
  return r;
}

}  // namespace

VerificationReport formula_report(const SuiteOptions& options) {
  const auto& cases = formula_cases();
  std::vector<VerificationReport> parts(cases.size(), VerificationReport("formula"));
  parallel_for(cases.size(), options.threads, [&](std::size_t i) { parts[i] = formula_case(cases[i], options); });
  VerificationReport out("formula");
  for (const auto& p : parts) out.append(p);
  return out;
}

// ---------------------------------------------------------------------------
// The 6p^4 family

namespace {

// Incremental row echelon basis over GF(p).
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::uint32_t p) : p_(p) {}
  std::size_t dimension() const { return rows_.size(); }
  // Adds v when it is outside the span; true if added.
  bool add(VectorElement v) {
    for (const auto& [pivot, row] : rows_) {
      if (v.c[pivot] != 0) v = vector_add(v, vector_scale(row, p_ - v.c[pivot], p_), p_);
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (v.c[k] == 0) continue;
      const auto inv = modular_inverse(v.c[k]);
      rows_.emplace_back(k, vector_scale(v, inv, p_));
      // Keep rows reduced at the new pivot.
      for (std::size_t j = 0; j + 1 < rows_.size(); ++j) {
        auto& row = rows_[j].second;
        if (row.c[k] != 0) row = vector_add(row, vector_scale(rows_.back().second, p_ - row.c[k], p_), p_);
      }
      return true;
    }
    return false;
  }

 private:
  std::int64_t modular_inverse(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p_ - 2;
    for (; e != 0; e >>= 1, b = b * b % p_) {
      if (e & 1U) r = r * b % p_;
    }
    return static_cast<std::int64_t>(r);
  }
  std::uint32_t p_;
  std::vector<std::pair<std::size_t, VectorElement>> rows_;
};

// Dimension of the smallest subspace containing v and invariant under maps.
std::size_t spin_dimension(const VectorElement& v, const std::vector<LinearAutomorphism>& maps, std::uint32_t p) {
  SubspaceBasis basis(p);
  std::vector<VectorElement> queue{v};
  basis.add(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& m : maps) {
      auto w = m.apply(queue[head]);
      if (basis.add(w)) queue.push_back(w);
    }
  }
  return basis.dimension();
}

// Number of 1-spaces <v> of GF(p)^4 whose A_Delta-span is proper.
std::uint64_t reducible_lines(const SemidirectGroup& g) {
  const std::uint32_t p = g.prime();
  std::vector<LinearAutomorphism> maps;
  for (const auto& d : g.L().a_delta_generators) maps.push_back(twist_matrix(d, p));
  std::uint64_t bad = 0;
  VectorElement v;
  // Normalized representatives: first nonzero coordinate equal to 1.
  for (std::size_t lead = 0; lead < 4; ++lead) {
    std::uint64_t tail = 1;
    for (std::size_t k = lead + 1; k < 4; ++k) tail *= p;
    for (std::uint64_t t = 0; t < tail; ++t) {
      v.c = {0, 0, 0, 0};
      v.c[lead] = 1;
      std::uint64_t rest = t;
      for (std::size_t k = 3; k > lead; --k) {
        v.c[k] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (spin_dimension(v, maps, p) < 4) ++bad;
    }
  }
  return bad;
}

}  // namespace

VerificationReport family_report(std::uint32_t p, const SuiteOptions& options) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("family_report: p must be an odd prime");
  VerificationReport r("family");
  const std::string id = "family.p=" + std::to_string(p) + ".";
  const std::string anchor = "family:";
  const SemidirectGroup g(p);
  const BigInt p4 = boost::multiprecision::pow(BigInt(p), 4);

  // Group-level claims.
  const auto x = g.conjugate(g.gamma(), g.u());
  const auto h = g.h_elements();
  r.check(id + "group_order", anchor + "group", str(p4 * 120), [&] { return str(g.order()); });
  r.check(id + "h_cap_h_x", anchor + "stabilizer intersection", "<beta>, order 4", [&] {
    std::unordered_set<std::uint64_t> in_h;
    for (const auto& e : h) in_h.insert(g.hash(e));
    std::unordered_set<std::uint64_t> meet;
    const auto x_inv = g.inverse(x);
    for (const auto& e : h) {
      if (in_h.contains(g.hash(g.multiply(g.multiply(x, e), x_inv)))) meet.insert(g.hash(e));
    }
    std::unordered_set<std::uint64_t> beta_powers;
    for (int k = 0; k < 4; ++k) beta_powers.insert(g.hash(g.power(g.beta(), k)));
    return std::string(meet == beta_powers ? "<beta>" : "other") + ", order " + str(std::uint64_t{meet.size()});
  });
  r.check(id + "gamma_u_alpha2_order_divides_5", anchor + "connecting element", "identity", [&] {
    const auto y = g.power(g.multiply(x, g.power(g.alpha(), 2)), 5);
    return std::string(y == g.identity() ? "identity" : "non-identity");
  });
  if (p >= 7) {
    r.check(id + "m_minimal_normal", anchor + "minimal normal subgroup", "0 invariant lines",
            [&] { return str(reducible_lines(g)) + " invariant lines"; });
  }

  std::optional<SemidirectCosetGraph> cg;
  const auto& built = r.check(id + "vertices", anchor + "vertices", str(p4 * 6), [&] {
    cg = family_graph(g, options.vertex_cap);
    return str(std::uint64_t{cg->graph.vertex_count()});
  });
  if (!cg) {
    const std::string reason = built.status == ClaimStatus::kSkipped ? built.reason : "graph not built";
    for (const char* c : {"valency", "connected", "arc_transitive", "h_index", "ghat_order", "alpha_qsr",
                          "quotient_k6", "quotient_cover", "m_semiregular"}) {
      r.skip(id + c, anchor + c, "", reason);
    }
    return r;
  }
  const Graph& graph = cg->graph;
  auto act = [&](const SemidirectElement& e) { return family_action(g, *cg, e); };

  r.check(id + "valency", anchor + "valency", "5", [&] {
    const auto k = valency(graph);
    return k ? str(std::uint64_t{*k}) : std::string("irregular");
  });
  if (p >= 7) {
    r.check(id + "connected", anchor + "connected", "true", [&] { return str(is_connected(graph)); });
  } else {
    r.add(Claim{id + "connected", anchor + "connected", "", str(std::uint64_t{component_count(graph)}) + " components",
                ClaimStatus::kSkipped, "connectivity is asserted only for p >= 7", 0});
  }
  r.check(id + "h_index", anchor + "stabilizer intersection", "5",
          [&] { return str(std::uint64_t{cg->transversal.size()}); });
  r.check(id + "arc_transitive", anchor + "arc-transitive", "true", [&] {
    std::vector<Permutation> gens;
    for (const auto& e : g.generators()) gens.push_back(act(e));
    return str(transitivity(GraphAction(graph, std::move(gens))).arc_transitive);
  });
  // The kernel of the action lies in H, the stabilizer of vertex 0.
  r.check(id + "ghat_order", anchor + "constructed group order", str(p4 * 120), [&] {
    std::uint64_t kernel = 0;
    for (const auto& e : h) kernel += act(e).is_identity() ? 1 : 0;
    return str(g.order() / kernel);
  });
  r.check(id + "ghat_order_is_vertices_times_20", anchor + "constructed group order", str(p4 * 120),
          [&] { return str(BigInt(graph.vertex_count()) * 20); });
  r.check(id + "alpha_qsr", anchor + "quasi-semiregular", str(p >= 7), [&] {
    return str(is_quasi_semiregular(act(g.alpha())));
  });

  std::vector<Permutation> m_hat;
  for (const auto& e : g.m_generators()) m_hat.push_back(act(e));
  const auto m_orbits = orbits(m_hat, graph.vertex_count());
  r.check(id + "m_semiregular", anchor + "normal quotient", "6 orbits of size " + str(p4), [&] {
    bool uniform = true;
    for (const auto& o : m_orbits) uniform = uniform && BigInt(o.size()) == p4;
    return str(std::uint64_t{m_orbits.size()}) + " orbits of size " + (uniform ? str(p4) : "mixed");
  });
  std::optional<Quotient> quotient;
  r.check(id + "quotient_k6", anchor + "normal quotient", "K6", [&] {
    std::vector<std::vector<Vertex>> blocks;
    for (const auto& o : m_orbits) blocks.emplace_back(o.begin(), o.end());
    quotient = quotient_graph(graph, VertexPartition(graph.vertex_count(), std::move(blocks)));
    const auto& q = quotient->graph;
    const bool complete = q.vertex_count() == 6 && q.edge_count() == 15;
    return complete ? std::string("K6") : "n=" + str(std::uint64_t{q.vertex_count()}) + " e=" + str(std::uint64_t{q.edge_count()});
  });
  r.check(id + "quotient_cover", anchor + "normal quotient", "true",
          [&] { return str(require(quotient, "quotient").cover); });

  if (p == 3 || p == 5) {
    // Every order-5 element of L is conjugate to alpha in L, so each order-5
    // element of G is conjugate to some x alpha or, for p = 5, to some x in M.
    r.check(id + "qsr_order5_candidates", anchor + "no quasi-semiregular element", "0", [&] {
      std::uint64_t qsr = 0;
      const auto alpha = g.alpha();
      std::uint64_t count = 1;
      for (int k = 0; k < 4; ++k) count *= p;
      for (std::uint64_t t = 0; t < count; ++t) {
        VectorElement v;
        std::uint64_t rest = t;
        for (auto& c : v.c) {
          c = static_cast<std::uint32_t>(rest % p);
          rest /= p;
        }
        for (const auto& e : {g.multiply(g.from_vector(v), alpha), g.from_vector(v)}) {
          if (g.element_order(e) != 5) continue;
          qsr += is_quasi_semiregular(act(e)) ? 1 : 0;
        }
      }
      return str(qsr);
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Observation

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (b %= m; e != 0; e >>= 1, b = b * b % m) {
    if (e & 1U) r = r * b % m;
  }
  return r;
}

// (q^a + s)(q^b + t) mod 25 with s, t in {-1, +1}.
std::uint64_t product_mod_25(std::uint64_t q, std::uint64_t a, int s, std::uint64_t b, int t) {
  const auto f = (pow_mod(q, a, 25) + 25 + s) % 25;
  const auto g = (pow_mod(q, b, 25) + 25 + t) % 25;
  return f * g % 25;
}

}  // namespace

VerificationReport observation_check(std::uint64_t q, std::uint32_t max_s) {
  if (!is_prime_power(q) || q % 5 == 0) throw std::invalid_argument("observation_check: q must be a prime power prime to 5");
  if (max_s == 0) throw std::invalid_argument("observation_check: max_s must be positive");
  VerificationReport r("observation");
  const std::string id = "observation.q=" + std::to_string(q) + ".";
  r.check(id + "square_is_pm1", "observation:(1)", "true", [&] {
    const auto sq = pow_mod(q, 2, 5);
    return sq == 1 || sq == 4 ? std::string("true") : "false: q^2 = " + str(sq) + " mod 5";
  });
  r.check(id + "power_4s_is_1", "observation:(1)", "true", [&] {
    for (std::uint32_t s = 1; s <= max_s; ++s) {
      if (pow_mod(q, 4ULL * s, 5) != 1) return "false at s=" + std::to_string(s);
    }
    return std::string("true");
  });
  r.check(id + "valuation_not_1", "observation:(2)", "true", [&] {
    const auto v = product_mod_25(q, 2, -1, 6, -1);
    return v % 5 != 0 || v == 0 ? std::string("true") : "false: (q^2-1)(q^6-1) = " + str(v) + " mod 25";
  });
  const bool hypothesis = q % 5 == 2 || q % 5 == 3;
  r.check(id + "q_2_or_3_mod_5", "observation:(3)", hypothesis ? "true" : "vacuous", [&] {
    if (!hypothesis) return std::string("vacuous");
    const auto a = product_mod_25(q, 3, +1, 1, -1);
    const auto b = product_mod_25(q, 6, +1, 4, -1);
    if (a % 5 == 0) return std::string("false: 5 divides (q^3+1)(q-1)");
    if (b != 0) return std::string("false: 25 does not divide (q^6+1)(q^4-1)");
    return std::string("true");
  });
  return r;
}

// ---------------------------------------------------------------------------
// 2-group presentations

VerificationReport presentation_report() {
  VerificationReport r("presentations");
  struct Case {
    std::string name;
    TwoGroup group;
    std::uint64_t index;
  };
  const std::vector<Case> cases{{"G16", TwoGroup::kG16, 16},
                                {"G256", TwoGroup::kG256, 256},
                                {"G4096", TwoGroup::kG4096, 4096},
                                {"auxiliary", TwoGroup::kAuxiliary, 4096}};
  for (const auto& c : cases) {
    const std::string id = "presentation." + c.name + ".";
    const std::string anchor = "two-group presentations:" + c.name;
    const auto pres = two_group_presentation(c.group);
    if (c.group == TwoGroup::kAuxiliary) {
      r.check(id + "index", anchor, str(c.index), [&] {
        const auto result = todd_coxeter(pres, {});
        return result.closed() ? str(std::uint64_t{result.table.size()}) : std::string("overflow");
      });
      continue;
    }
    std::optional<ShiftedGroup> sg;
    r.check(id + "index", anchor, str(c.index), [&] {
      sg = shifted_group(pres);
      return str(std::uint64_t{sg->table.size()});
    });
    r.check(id + "shift_is_endomorphism", anchor, "true", [&] {
      const auto& s = require(sg, "group");
      const auto reg = regular_representation(s.table);
      std::vector<Permutation> images;
      for (std::size_t k = 0; k < reg.size(); ++k) images.push_back(reg[s.shift[k]]);
      return str(verify_homomorphism(s.presentation, images));
    });
    std::optional<Permutation> shift;
    r.check(id + "shift_order", anchor, "5", [&] {
      const auto& s = require(sg, "group");
      std::vector<bool> hit(s.shift_images.size(), false);
      for (auto i : s.shift_images) hit[i] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return std::string("not bijective");
      shift = Permutation(s.shift_images);
      return str(element_order(*shift));
    });
    r.check(id + "shift_fixed_elements", anchor, "1",
            [&] { return str(std::uint64_t{fixed_point_count(require(shift, "shift"))}); });
    r.check(id + "shift_preserves_connection_set", anchor, "true", [&] {
      const auto& s = require(sg, "group");
      std::vector<std::uint32_t> set;
      for (const auto& w : two_group_connection_set(s.presentation)) set.push_back(s.table.trace(0, w));
      std::vector<std::uint32_t> image;
      for (auto i : set) image.push_back(require(shift, "shift")[i]);
      std::sort(set.begin(), set.end());
      std::sort(image.begin(), image.end());
      return str(set == image);
    });
    r.check(id + "product_identity_failures", anchor, "0", [&] {
      const auto& s = require(sg, "group");
      const auto& sh = require(shift, "shift");
      std::uint64_t failures = 0;
      for (std::size_t i = 0; i < s.words.size(); ++i) {
        std::uint32_t coset = 0;
        Point e = static_cast<Point>(i);
        for (int k = 0; k < 5; ++k, e = sh[e]) coset = s.table.trace(coset, s.words[e]);
        failures += coset == 0 ? 0 : 1;
      }
      return str(failures);
    });
  }
  return r;
}

}  // namespace qsym
