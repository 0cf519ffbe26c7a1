// Copyright 2026 The kpath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPATH_GRAPH_HPP
#define KPATH_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kpath {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Undirected, connected, locally finite graph on dense vertex ids 0..n-1.
///
/// Adjacency is stored in compressed-row form with each neighbour list sorted.
/// Instances are immutable after construction, so every query is safe to call
/// from several threads at once.
class Graph {
 public:
  /// Builds a graph from an undirected edge list. Duplicate edges (in either
  /// orientation) are merged. Throws ValidationError on an empty vertex set,
  /// out-of-range endpoints, self-loops, or a disconnected result.
  static Graph from_edges(std::size_t num_vertices, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }
  bool contains(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < num_vertices();
  }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

 private:
  Graph() = default;

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
};

/// Vertices at exact shortest-path distance k from a centre vertex.
struct KNeighborhood {
  VertexId center = 0;
  int k = 1;
  std::vector<VertexId> members;  // sorted, never contains center

  /// The k-path degree of the centre.
  std::size_t degree() const noexcept { return members.size(); }
};

/// Shortest-path distances from v to every vertex within kmax hops.
std::map<VertexId, int> bfs_distances(const Graph& g, VertexId v, int kmax);

/// Dense distance row from v: entry w holds d(v, w), or -1 when d(v, w) > kmax.
/// kmax < 0 means unbounded.
std::vector<int> distance_row(const Graph& g, VertexId v, int kmax = -1);

KNeighborhood k_neighborhood(const Graph& g, VertexId v, int k);

/// max_v delta_k(v) over a finite graph.
std::size_t max_k_path_degree(const Graph& g, int k);

int eccentricity(const Graph& g, VertexId v);
int diameter(const Graph& g);

// Fixture builders. Sizes must be positive; cycles need at least 3 vertices.

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Two parallel paths of length n joined by rungs (2n vertices).
Graph ladder_graph(std::size_t n);
Graph square_lattice(std::size_t width, std::size_t height);
/// Square grid plus one diagonal per cell; interior vertices have degree 6.
Graph triangular_lattice(std::size_t width, std::size_t height);
/// Honeycomb window in brick-wall form; interior vertices have degree 3.
Graph hexagonal_lattice(std::size_t width, std::size_t height);
/// Rooted tree in which every vertex of generation n has n + 1 children,
/// grown to the given depth (generation 0 is the root, vertex 0).
Graph generation_tree(std::size_t depth);

/// Graph read from "u v" lines with '#' comments. Vertex labels are arbitrary
/// tokens mapped to dense ids in order of first appearance.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // labels[id] is the original token
};

LabeledGraph read_edge_list(std::istream& in);

}  // namespace kpath

#endif  // KPATH_GRAPH_HPP
