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

#ifndef QSYM_GRAPHS_GRAPH_HPP_
#define QSYM_GRAPHS_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qsym {

using Vertex = std::uint32_t;

// Simple undirected graph in compressed adjacency form, neighbors sorted.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on loops, repeated neighbors, asymmetric
  // adjacency or out-of-range vertices.
  explicit Graph(std::vector<std::vector<Vertex>> adjacency);
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  bool adjacent(Vertex u, Vertex v) const;
  // Edges with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Optional per-vertex labels (coset representatives, group elements).
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<std::string> labels_;
};

// Disjoint blocks covering {0, ..., n-1}.
class VertexPartition {
 public:
  // Throws std::invalid_argument unless the blocks partition {0..n-1}.
  VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks);
  static VertexPartition singletons(std::size_t n);

  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  std::size_t block_of(Vertex v) const { return block_of_[v]; }

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

bool is_connected(const Graph& g);
// Common degree, or empty when the graph is not regular.
std::optional<std::size_t> valency(const Graph& g);
bool is_bipartite(const Graph& g);
std::size_t component_count(const Graph& g);

struct Quotient {
  Graph graph;
  // Quotient and original graph have the same valency.
  bool cover = false;
};
// Blocks become vertices; distinct blocks are adjacent when some edge joins
// them.
Quotient quotient_graph(const Graph& g, const VertexPartition& part);

// "u v" per line, 0-based, u < v, preceded by a "# n=<count>" line.
std::string to_edge_list(const Graph& g);
// Accepts the output of to_edge_list; without an "n=" comment the vertex
// count is one more than the largest vertex. Throws std::invalid_argument on
// malformed input.
Graph from_edge_list(const std::string& text);
std::string to_dot(const Graph& g, const std::string& name);
// {"name", "n", "edges": [[u, v], ...], "provenance"}.
std::string to_json(const Graph& g, const std::string& name, const std::string& provenance);

}  // namespace qsym

#endif  // QSYM_GRAPHS_GRAPH_HPP_
