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

#include "qsym/symmetry/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace qsym {

bool is_quasi_semiregular(const Permutation& p) {
  if (p.is_identity() || fixed_point_count(p) != 1) return false;
  const auto cs = cycles(p);
  return std::all_of(cs.begin(), cs.end(), [&](const auto& c) { return c.size() == cs.front().size(); });
}

bool is_semiregular_on(const Permutation& p, std::span<const Point> points) {
  std::vector<bool> in(p.degree(), false);
  for (Point v : points) {
    if (v >= p.degree()) throw std::invalid_argument("is_semiregular_on: point out of range");
    in[v] = true;
  }
  for (Point v : points) {
    if (!in[p[v]]) throw std::invalid_argument("is_semiregular_on: point set not invariant");
  }
  const std::uint64_t o = element_order(p);
  std::vector<bool> seen(p.degree(), false);
  for (Point v : points) {
    if (seen[v]) continue;
    std::uint64_t len = 0;
    for (Point w = v; !seen[w]; w = p[w]) {
      seen[w] = true;
      ++len;
    }
    if (len != o) return false;
  }
  return true;
}

bool is_semiregular(const Permutation& p) {
  std::vector<Point> all(p.degree());
  std::iota(all.begin(), all.end(), Point{0});
  return is_semiregular_on(p, all);
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p[u], p[v])) return false;
  }
  return true;
}

GraphAction::GraphAction(const Graph& graph, std::vector<Permutation> generators)
    : graph_(&graph), generators_(std::move(generators)) {
  for (const auto& p : generators_) {
    if (!is_automorphism(graph, p)) throw std::invalid_argument("GraphAction: generator is not an automorphism");
  }
}

Transitivity transitivity(const GraphAction& action) {
  const Graph& g = action.graph();
  const std::size_t n = g.vertex_count();
  Transitivity out;
  out.vertex_orbits = orbits(action.generators(), n).size();
  if (action.generators().empty()) out.vertex_orbits = n;

  // Arcs are numbered by their position in the adjacency arrays.
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  auto arc_index = [&](Vertex u, Vertex v) {
    const auto nb = g.neighbors(u);
    return offset[u] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  };
  const std::size_t arcs = offset[n];
  std::vector<bool> seen(arcs, false);
  std::deque<std::pair<Vertex, Vertex>> queue;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (seen[arc_index(u, v)]) continue;
      ++out.arc_orbits;
      seen[arc_index(u, v)] = true;
      queue.emplace_back(u, v);
      while (!queue.empty()) {
        const auto [a, b] = queue.front();
        queue.pop_front();
        for (const auto& p : action.generators()) {
          const std::size_t k = arc_index(p[a], p[b]);
          if (!seen[k]) {
            seen[k] = true;
            queue.emplace_back(p[a], p[b]);
          }
        }
      }
    }
  }
  out.vertex_transitive = out.vertex_orbits == 1;
  out.arc_transitive = out.arc_orbits == 1;
  return out;
}

Permutation coset_action_of(const PermutationCosetSpace& space, const Permutation& g) {
  if (!space.t.contains(g)) throw std::invalid_argument("coset_action_of: element outside T");
  return space.action(g);
}

Permutation coset_action_of(const SemidirectGroup& group, const SemidirectCosetGraph& cg,
                            const SemidirectElement& g) {
  return family_action(group, cg, g);
}

namespace {

// Ordered partition as a colour per vertex, colours 0..cells-1, together
// with a hash of the refinement trace. Two partitions reached by the same
// individualizations in isomorphic positions have equal traces.
struct Colouring {
  std::vector<std::uint32_t> colour;
  std::uint32_t cells = 0;
  std::uint64_t trace = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Iterated degree-in-class refinement until the number of cells is stable.
void refine(const Graph& g, Colouring& c) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<Vertex> order(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      sig[v].clear();
      sig[v].push_back(c.colour[v]);
      for (Vertex w : g.neighbors(v)) sig[v].push_back(c.colour[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    std::uint32_t cells = 0;
    std::vector<std::uint32_t> next(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++cells;
      next[order[k]] = cells;
      if (k == 0 || sig[order[k]] != sig[order[k - 1]]) {
        for (auto s : sig[order[k]]) c.trace = mix(c.trace, s);
      }
      c.trace = mix(c.trace, 0xFFFFFFFFULL);
    }
    ++cells;
    c.colour = std::move(next);
    const bool stable = cells == c.cells;
    c.cells = cells;
    if (stable) return;
  }
}

Colouring individualize(const Graph& g, const Colouring& c, Vertex v) {
  Colouring out = c;
  out.colour[v] = c.cells;
  out.cells = c.cells + 1;
  out.trace = mix(out.trace, 0xABCDULL);
  refine(g, out);
  return out;
}

// First smallest non-singleton cell.
std::uint32_t target_cell(const Colouring& c) {
  std::vector<std::size_t> size(c.cells, 0);
  for (auto col : c.colour) ++size[col];
  std::uint32_t best = c.cells;
  for (std::uint32_t k = 0; k < c.cells; ++k) {
    if (size[k] > 1 && (best == c.cells || size[k] < size[best])) best = k;
  }
  return best;
}

std::vector<Vertex> cell_members(const Colouring& c, std::uint32_t cell) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < c.colour.size(); ++v) {
    if (c.colour[v] == cell) out.push_back(v);
  }
  return out;
}

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g) {}

  // An automorphism carrying the left partition onto the right one.
  std::optional<Permutation> search(const Colouring& left, const Colouring& right) {
    ++nodes;
    if (left.trace != right.trace || left.cells != right.cells) return std::nullopt;
    const std::size_t n = g_.vertex_count();
    if (left.cells == n) {
      std::vector<Point> at(n);
      for (Vertex v = 0; v < n; ++v) at[right.colour[v]] = v;
      std::vector<Point> images(n);
      for (Vertex v = 0; v < n; ++v) images[v] = at[left.colour[v]];
      Permutation p(std::move(images));
      if (is_automorphism(g_, p)) return p;
      return std::nullopt;
    }
    const std::uint32_t cell = target_cell(left);
    const Vertex x = cell_members(left, cell).front();
    const Colouring lx = individualize(g_, left, x);
    for (Vertex y : cell_members(right, cell)) {
      auto found = search(lx, individualize(g_, right, y));
      if (found) return found;
    }
    return std::nullopt;
  }

  std::size_t nodes = 0;

 private:
  const Graph& g_;
};

}  // namespace

AutomorphismGroup automorphism_group(const Graph& g, std::size_t vertex_cap) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_cap) {
    throw std::length_error("automorphism_group: " + std::to_string(n) + " vertices exceed the cap of " +
                            std::to_string(vertex_cap));
  }
  AutomorphismGroup out;
  out.order = 1;
  if (n == 0) return out;

  // First path of the search tree.
  std::vector<Colouring> path;
  Colouring c;
  c.colour.assign(n, 0);
  c.cells = 1;
  refine(g, c);
  path.push_back(c);
  while (path.back().cells < n) {
    const auto cell = target_cell(path.back());
    const Vertex v = cell_members(path.back(), cell).front();
    out.base.push_back(v);
    path.push_back(individualize(g, path.back(), v));
  }

  Searcher searcher(g);
  out.orbit_sizes.assign(out.base.size(), 1);
  for (std::size_t i = out.base.size(); i-- > 0;) {
    const Colouring& level = path[i];
    const Vertex v = out.base[i];
    const auto candidates = cell_members(level, level.colour[v]);
    std::vector<bool> done(n, false);  // in the orbit of v, or known to fail
    auto mark_orbit = [&](Vertex w) {
      for (Point u : orbit(out.generators, w)) done[u] = true;
    };
    mark_orbit(v);
    for (Vertex w : candidates) {
      if (done[w]) continue;
      auto found = searcher.search(path[i + 1], individualize(g, level, w));
      if (found) {
        out.generators.push_back(std::move(*found));
        mark_orbit(v);
      } else {
        mark_orbit(w);
      }
    }
    out.orbit_sizes[i] = orbit(out.generators, v).size();
    out.order *= out.orbit_sizes[i];
  }
  out.search_nodes = searcher.nodes;
  out.chain = StabilizerChain(n, out.generators);
  if (out.chain.order() != out.order) throw std::logic_error("automorphism_group: chain order disagrees");
  return out;
}

BigInt stabilizer_order(const StabilizerChain& chain, Point v) {
  return chain.order() / orbit(chain.generators(), v).size();
}

}  // namespace qsym
