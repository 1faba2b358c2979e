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

#include "qsym/groups/two_groups.hpp"

#include <stdexcept>

namespace qsym {

namespace {

std::string name(char family, int i) { return std::string(1, family) + std::to_string(((i % 5) + 5) % 5); }

}  // namespace

std::string two_group_presentation_text(TwoGroup which) {
  std::string families = "f";
  if (which != TwoGroup::kG16) families = "fe";
  if (which == TwoGroup::kG4096) families = "fed";
  if (which == TwoGroup::kAuxiliary) families = "fedc";

  std::string out = "generators:";
  for (char fam : families) {
    for (int i = 0; i < 5; ++i) out += " " + name(fam, i);
  }
  out += "\n";
  auto line = [&](const std::string& s) { out += s + "\n"; };
  auto comm = [&](const std::string& x, const std::string& y) { return "[" + x + "," + y + "]"; };

  for (char fam : families) {
    line(name(fam, 0) + " = (" + name(fam, 1) + "*" + name(fam, 2) + "*" + name(fam, 3) + "*" + name(fam, 4) + ")^-1");
  }
  for (int i = 0; i < 5; ++i) line(name('f', i) + "^2");
  if (which == TwoGroup::kG16) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) line(comm(name('f', i), name('f', j)));
    }
    return out;
  }
  for (int i = 0; i < 5; ++i) line(name('e', i) + " = " + comm(name('f', i), name('f', i + 1)));
  if (which == TwoGroup::kG256) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        line(comm(name('e', i), name('e', j)));
        line(comm(name('e', i), name('f', j)));
      }
    }
    return out;
  }
  for (int i = 0; i < 5; ++i) line(name('d', i) + " = " + comm(name('e', i), name('f', i + 2)));
  if (which == TwoGroup::kG4096) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        line(comm(name('d', i), name('d', j)));
        line(comm(name('d', i), name('e', j)));
        line(comm(name('d', i), name('f', j)));
      }
    }
    return out;
  }
  for (int i = 0; i < 5; ++i) line(name('c', i) + " = " + comm(name('d', i), name('f', i + 3)));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (char fam : std::string("cdef")) line(comm(name('c', i), name(fam, j)));
    }
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) line("[" + name('d', i) + "," + name('f', j) + "," + name('f', k) + "]");
    }
  }
  return out;
}

Presentation two_group_presentation(TwoGroup which) { return parse_presentation(two_group_presentation_text(which)); }

std::vector<std::size_t> shift_map(const Presentation& pres) {
  std::vector<std::size_t> out;
  for (const auto& g : pres.generators()) {
    if (g.size() != 2 || g[1] < '0' || g[1] > '4') throw std::invalid_argument("shift_map: unexpected generator " + g);
    const std::string target = name(g[0], g[1] - '0' + 1);
    auto idx = pres.generator_index(target);
    if (!idx) throw std::invalid_argument("shift_map: missing generator " + target);
    out.push_back(*idx);
  }
  return out;
}

std::vector<Word> two_group_connection_set(const Presentation& pres) {
  return {parse_word(pres, "f1"), parse_word(pres, "f2"), parse_word(pres, "f3"), parse_word(pres, "f4"),
          parse_word(pres, "(f1*f2*f3*f4)^-1")};
}

}  // namespace qsym
