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

#include "qsym/groups/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsym {

const std::vector<CosetFixture>& coset_fixtures() {
  static const std::vector<CosetFixture> fixtures = [] {
    std::vector<CosetFixture> f;
    f.push_back({"K6", "A5", 5, 60, 6, {"(1,2,3,4,5)", "(2,5)(3,4)"}, "(2,3)(4,5)", {}, "", ""});
    f.push_back({"G36",
                 "A6",
                 6,
                 360,
                 36,
                 {"(1,5)(3,4)", "(1,5,4,6,3)"},
                 "(1,3)(4,5)",
                 {"(1,2,3)", "(2,3,4,5,6)"},
                 "(1,3,5,4)(2,6)",
                 "printed x generates only an A5 with H (all three fix 2); graph uses the transversal "
                 "element (1,3,5,4)(2,6) of T_vw in N_T(T_vw)"});
    f.push_back({"G66",
                 "PSL2(11)",
                 12,
                 660,
                 66,
                 {"(1,12)(2,5)(3,11)(4,7)(6,10)(8,9)", "(1,7,6,3,5)(2,11,10,4,12)"},
                 "(1,5)(2,12)(3,9)(4,6)(7,10)(8,11)",
                 {},
                 "",
                 ""});
    f.push_back({"G126",
                 "A9",
                 9,
                 181440,
                 126,
                 {"(1,2)(3,4)", "(1,2,3)", "(5,6,7)", "(7,8,9)", "(1,2)(5,6)"},
                 "(1,5)(2,6)(3,7)(4,8)",
                 {},
                 "",
                 ""});
    f.push_back({"G396",
                 "M11",
                 11,
                 7920,
                 396,
                 {"(1,11,10,2)(5,9,6,7)", "(1,11,2,10,3)(4,6,7,9,5)"},
                 "(1,5,2,7,10,6,11,9)(3,8)",
                 {},
                 "",
                 "x has order 8; x^2 lies in H"});
    f.push_back({"G1456",
                 "Sz(8)",
                 65,
                 29120,
                 1456,
                 {"(1,41,15,8)(2,43,40,12)(3,16,4,38)(5,13,21,46)(6,58,25,11)(7,42,18,36)(9,62,39,45)"
                  "(10,14,29,31)(17,65,50,35)(19,30,22,56)(20,28,27,26)(23,49,52,60)(24,34,61,57)"
                  "(33,55,51,63)(37,53,44,48)(47,54,64,59)",
                  "(1,53,34,36,10)(2,13,49,65,64)(3,32,4,38,16)(5,17,12,23,54)(6,27,51,39,22)"
                  "(7,44,14,61,41)(8,24,31,37,18)(9,33,20,25,19)(11,55,30,28,62)(15,29,42,57,48)"
                  "(21,59,52,43,50)(26,56,63,58,45)(35,60,46,40,47)"},
                 "(1,22)(2,23)(3,62)(4,45)(5,31)(6,55)(7,37)(8,30)(9,38)(10,13)(11,33)(12,60)(14,21)"
                 "(15,19)(16,39)(17,61)(18,44)(20,54)(24,50)(25,63)(26,47)(27,59)(28,64)(29,46)(34,35)"
                 "(36,48)(40,52)(41,56)(42,53)(43,49)(51,58)(57,65)",
                 {},
                 "",
                 ""});
    f.push_back({"G2016",
                 "PSL3(4)",
                 21,
                 20160,
                 2016,
                 {"(1,18)(3,15)(5,16)(6,17)(7,12)(8,14)(11,19)(20,21)",
                  "(1,18,5,9,16)(2,15,7,12,3)(4,19,20,21,11)(6,17,14,13,8)"},
                 "(1,20,18,21)(2,9)(3,19,15,11)(4,10)(5,17,16,6)(7,8,12,14)",
                 {},
                 "",
                 "x has order 4; x^2 lies in H"});
    f.push_back({"G22176",
                 "M22",
                 22,
                 443520,
                 22176,
                 {"(1,10)(2,4,12,7)(5,17,15,21)(8,13)(9,18,19,11)(14,16,22,20)",
                  "(2,12,4,3,7)(5,14,13,22,15)(6,11,9,19,18)(8,17,20,16,21)"},
                 "(1,8)(2,21,12,17)(4,15,7,5)(9,22,19,14)(10,13)(11,20,18,16)",
                 {},
                 "",
                 "x has order 4; x^2 lies in H"});
    return f;
  }();
  return fixtures;
}

const std::vector<CayleyFixture>& cayley_fixtures() {
  static const std::vector<CayleyFixture> fixtures{
      {"G16", TwoGroup::kG16, 16}, {"G256", TwoGroup::kG256, 256}, {"G4096", TwoGroup::kG4096, 4096}};
  return fixtures;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"K6",   "G16",  "G256",  "G4096", "G36",   "G66",
                                              "G126", "G396", "G1456", "G2016", "G22176"};
  return names;
}

bool is_catalog_name(std::string_view name) {
  const auto& names = catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_cayley_name(std::string_view name) {
  for (const auto& f : cayley_fixtures()) {
    if (f.name == name) return true;
  }
  return false;
}

const CosetFixture& coset_fixture(std::string_view name) {
  for (const auto& f : coset_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown coset graph '" + std::string(name) + "'");
}

const CayleyFixture& cayley_fixture(std::string_view name) {
  for (const auto& f : cayley_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown Cayley graph '" + std::string(name) + "'");
}

CosetGenerators coset_generators(const CosetFixture& fixture) {
  CosetGenerators out;
  for (const auto& s : fixture.h_generators) out.h.push_back(parse_cycles(s, fixture.degree));
  out.printed_x = parse_cycles(fixture.x, fixture.degree);
  out.x = fixture.graph_x.empty() ? out.printed_x : parse_cycles(fixture.graph_x, fixture.degree);
  if (fixture.t_generators.empty()) {
    out.t = out.h;
    out.t.push_back(out.x);
  } else {
    for (const auto& s : fixture.t_generators) out.t.push_back(parse_cycles(s, fixture.degree));
  }
  return out;
}

std::string dump_fixture(std::string_view name) {
  if (is_cayley_name(name)) {
    const auto& f = cayley_fixture(name);
    return f.name + " = Cay(G, {f1, f2, f3, f4, (f1*f2*f3*f4)^-1})\n" + two_group_presentation_text(f.group);
  }
  const auto& f = coset_fixture(name);
  std::string out = f.name + " = Cos(T, H, HxH), T = " + f.group_name + " on " + std::to_string(f.degree) +
                    " points\n";
  for (const auto& h : f.h_generators) out += "H: " + to_cycle_string(parse_cycles(h, f.degree)) + "\n";
  out += "x: " + to_cycle_string(parse_cycles(f.x, f.degree)) + "\n";
  for (const auto& t : f.t_generators) out += "T: " + to_cycle_string(parse_cycles(t, f.degree)) + "\n";
  if (!f.graph_x.empty()) out += "graph x: " + to_cycle_string(parse_cycles(f.graph_x, f.degree)) + "\n";
  if (!f.note.empty()) out += "note: " + f.note + "\n";
  return out;
}

}  // namespace qsym
