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

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/groups/catalog.hpp"
#include "qsym/symmetry/symmetry.hpp"
#include "qsym/verify/catalog_graph.hpp"
#include "qsym/verify/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string target_list() {
  std::string out;
  for (const auto& n : qsym::catalog_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

void require_target(const std::string& name) {
  if (!qsym::is_catalog_name(name)) {
    throw UsageError("unknown target '" + name + "'; known targets: " + target_list());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

int cmd_build(const std::string& name) {
  require_target(name);
  const auto cg = qsym::build_catalog_graph(name);
  const auto k = qsym::valency(cg.graph);
  std::cout << "name: " << cg.name << "\n"
            << "construction: " << cg.construction << "\n"
            << "n: " << cg.graph.vertex_count() << "\n"
            << "valency: " << (k ? std::to_string(*k) : std::string("irregular")) << "\n"
            << "connected: " << (qsym::is_connected(cg.graph) ? "true" : "false") << "\n"
            << "bipartite: " << (qsym::is_bipartite(cg.graph) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_aut(const std::string& name, std::size_t cap) {
  require_target(name);
  const auto cg = qsym::build_catalog_graph(name);
  qsym::AutomorphismGroup aut;
  try {
    aut = qsym::automorphism_group(cg.graph, cap);
  } catch (const std::length_error& e) {
    std::cerr << name << ": " << e.what() << " (raise --cap)\n";
    return kFailed;
  }
  std::cout << "name: " << name << "\n"
            << "order: " << aut.order << "\n"
            << "vertex stabilizer order: " << qsym::stabilizer_order(aut.chain, 0) << "\n"
            << "generators: " << aut.generators.size() << "\n"
            << "search nodes: " << aut.search_nodes << "\n";
  return kOk;
}

int cmd_dump(const std::string& name) {
  require_target(name);
  std::cout << qsym::dump_fixture(name);
  return kOk;
}

int cmd_export(const std::string& name, const std::string& format, const std::string& out) {
  require_target(name);
  const auto cg = qsym::build_catalog_graph(name);
  if (format == "edges") {
    write_output(out, qsym::to_edge_list(cg.graph));
  } else if (format == "dot") {
    write_output(out, qsym::to_dot(cg.graph, name));
  } else {
    write_output(out, qsym::to_json(cg.graph, name, cg.construction));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsym: arc-transitive pentavalent graphs and quasi-semiregular automorphisms"};
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "Upper bound on worker threads")
      ->check(CLI::Range(1u, std::max(1u, std::thread::hardware_concurrency()) * 4));

  std::string name;
  auto* build = app.add_subcommand("build", "Construct a catalog graph and print a summary");
  build->add_option("name", name, "Catalog graph")->required();

  std::size_t cap = qsym::kDefaultAutVertexCap;
  auto* aut = app.add_subcommand("aut", "Automorphism group of a catalog graph");
  aut->add_option("name", name, "Catalog graph")->required();
  aut->add_option("--cap", cap, "Largest vertex count searched")->capture_default_str();

  auto* dump = app.add_subcommand("dump", "Print the fixture in cycle notation");
  dump->add_option("name", name, "Catalog graph")->required();

  std::string format = "edges";
  std::string out = "-";
  auto* exp = app.add_subcommand("export", "Write a catalog graph");
  exp->add_option("name", name, "Catalog graph")->required();
  exp->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"edges", "dot", "json"}))
      ->capture_default_str();
  exp->add_option("--out", out, "Output path, - for standard output")->capture_default_str();

  std::string suite;
  std::uint32_t prime = 0;
  std::uint64_t q = 0;
  std::string scope = "default";
  std::string report_out = "-";
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write its JSON report");
  verify->add_option("suite", suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "family", "observation", "formula", "presentations"}));
  verify->add_option("--prime", prime, "Prime for the family suite");
  verify->add_option("--q", q, "Prime power for the observation suite");
  verify->add_option("--scope", scope, "Centralizer table scope")
      ->check(CLI::IsMember({"default", "extended"}))
      ->capture_default_str();
  verify->add_option("--cap", cap, "Largest vertex count for automorphism searches")->capture_default_str();
  verify->add_option("--out", report_out, "Report path, - for standard output")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0) std::cerr << app.help();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(name);
    if (*aut) return cmd_aut(name, cap);
    if (*dump) return cmd_dump(name);
    if (*exp) return cmd_export(name, format, out);

    qsym::SuiteOptions options;
    options.threads = threads;
    options.aut_vertex_cap = cap;
    qsym::VerificationReport report("");
    if (suite == "table1") {
      report = qsym::table1_report(options);
    } else if (suite == "table2") {
      report = qsym::table2_report(scope == "extended" ? qsym::Table2Scope::kExtended : qsym::Table2Scope::kDefault,
                                   options);
    } else if (suite == "family") {
      if (prime == 0) throw UsageError("verify family requires --prime");
      try {
        report = qsym::family_report(prime, options);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (suite == "observation") {
      if (q == 0) throw UsageError("verify observation requires --q");
      try {
        report = qsym::observation_check(q);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (suite == "formula") {
      report = qsym::formula_report(options);
    } else {
      report = qsym::presentation_report();
    }
    write_output(report_out, report.to_json());
    std::cerr << report.to_text();
    return report.passed() ? kOk : kFailed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
