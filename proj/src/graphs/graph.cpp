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

#include "qsym/graphs/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qsym {

Graph::Graph(std::vector<std::vector<Vertex>> adjacency) {
  const std::size_t n = adjacency.size();
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adjacency[v];
    std::sort(nb.begin(), nb.end());
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] >= n) throw std::invalid_argument("Graph: neighbor out of range");
      if (nb[k] == v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(v));
      if (k > 0 && nb[k] == nb[k - 1]) throw std::invalid_argument("Graph: repeated neighbor");
    }
    neighbors_.insert(neighbors_.end(), nb.begin(), nb.end());
    offsets_.push_back(neighbors_.size());
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : neighbors(v)) {
      if (!adjacent(w, v)) throw std::invalid_argument("Graph: adjacency is not symmetric");
    }
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return Graph(std::move(adj));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count()) throw std::invalid_argument("Graph: label count");
  labels_ = std::move(labels);
}

VertexPartition::VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks)
    : blocks_(std::move(blocks)), block_of_(n, blocks_.size()) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw std::invalid_argument("VertexPartition: empty block");
    for (Vertex v : blocks_[b]) {
      if (v >= n || block_of_[v] != blocks_.size()) throw std::invalid_argument("VertexPartition: not a partition");
      block_of_[v] = b;
    }
  }
  for (auto b : block_of_) {
    if (b == blocks_.size()) throw std::invalid_argument("VertexPartition: vertex not covered");
  }
}

VertexPartition VertexPartition::singletons(std::size_t n) {
  std::vector<std::vector<Vertex>> blocks(n);
  for (Vertex v = 0; v < n; ++v) blocks[v] = {v};
  return VertexPartition(n, std::move(blocks));
}

namespace {

// Component index per vertex; returns the count.
std::size_t label_components(const Graph& g, std::vector<std::size_t>& comp) {
  const std::size_t n = g.vertex_count();
  comp.assign(n, n);
  std::size_t count = 0;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    comp[s] = count;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == n) {
          comp[w] = count;
          queue.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

std::size_t component_count(const Graph& g) {
  std::vector<std::size_t> comp;
  return label_components(g, comp);
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::optional<std::size_t> valency(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Quotient quotient_graph(const Graph& g, const VertexPartition& part) {
  if (part.blocks().empty() && g.vertex_count() > 0) throw std::invalid_argument("quotient_graph: bad partition");
  std::vector<std::set<Vertex>> adj(part.size());
  for (const auto& [u, v] : g.edges()) {
    const auto bu = part.block_of(u), bv = part.block_of(v);
    if (bu == bv) continue;
    adj[bu].insert(static_cast<Vertex>(bv));
    adj[bv].insert(static_cast<Vertex>(bu));
  }
  std::vector<std::vector<Vertex>> lists;
  for (const auto& s : adj) lists.emplace_back(s.begin(), s.end());
  Quotient q{Graph(std::move(lists)), false};
  const auto k = valency(g);
  const auto kq = valency(q.graph);
  q.cover = k.has_value() && kq.has_value() && *k == *kq;
  return q;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("n=");
      if (pos != std::string::npos) n = std::stoull(line.substr(pos + 2));
      continue;
    }
    std::istringstream ls(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0) {
      throw std::invalid_argument("from_edge_list: malformed line " + std::to_string(lineno));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) {
    n = 0;
    for (const auto& [u, v] : edges) n = std::max<std::size_t>(*n, std::max(u, v) + std::size_t{1});
  }
  return Graph::from_edges(*n, edges);
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const Graph& g, const std::string& name, const std::string& provenance) {
  nlohmann::json j;
  j["name"] = name;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  j["provenance"] = provenance;
  return j.dump() + "\n";
}

}  // namespace qsym
