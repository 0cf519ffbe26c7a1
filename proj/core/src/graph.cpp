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

#include "kpath/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "kpath/error.hpp"

namespace kpath {

namespace {

void require_vertex(const Graph& g, VertexId v) {
  if (!g.contains(v)) {
    throw ValidationError("unknown vertex id " + std::to_string(v));
  }
}

void require_size(std::size_t n, const char* what) {
  if (n == 0) {
    throw ValidationError(std::string(what) + ": size must be at least 1");
  }
}

VertexId as_vertex(std::size_t i) { return static_cast<VertexId>(i); }

}  // namespace

Graph Graph::from_edges(std::size_t num_vertices, std::span<const Edge> edges) {
  if (num_vertices == 0) {
    throw ValidationError("graph must have at least one vertex");
  }
  std::vector<Edge> directed;
  directed.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= num_vertices ||
        static_cast<std::size_t>(v) >= num_vertices) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") references a vertex outside 0.." +
                            std::to_string(num_vertices - 1));
    }
    if (u == v) {
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(num_vertices + 1, 0);
  for (const auto& e : directed) ++g.offsets_[static_cast<std::size_t>(e.first) + 1];
  for (std::size_t i = 0; i < num_vertices; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.reserve(directed.size());
  for (const auto& e : directed) g.adjacency_.push_back(e.second);

  const auto reach = distance_row(g, 0);
  if (std::any_of(reach.begin(), reach.end(), [](int d) { return d < 0; })) {
    throw ValidationError("graph is not connected");
  }
  return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  require_vertex(*this, v);
  const auto i = static_cast<std::size_t>(v);
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t u = 0; u < num_vertices(); ++u) {
    for (VertexId w : neighbors(as_vertex(u))) {
      if (as_vertex(u) < w) out.emplace_back(as_vertex(u), w);
    }
  }
  return out;
}

std::vector<int> distance_row(const Graph& g, VertexId v, int kmax) {
  require_vertex(g, v);
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<VertexId> frontier{v};
  std::vector<VertexId> next;
  dist[static_cast<std::size_t>(v)] = 0;
  for (int level = 1; !frontier.empty() && (kmax < 0 || level <= kmax); ++level) {
    next.clear();
    for (VertexId u : frontier) {
      for (VertexId w : g.neighbors(u)) {
        auto& d = dist[static_cast<std::size_t>(w)];
        if (d < 0) {
          d = level;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::map<VertexId, int> bfs_distances(const Graph& g, VertexId v, int kmax) {
  if (kmax < 0) throw ValidationError("kmax must be non-negative");
  const auto row = distance_row(g, v, kmax);
  std::map<VertexId, int> out;
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (row[w] >= 0) out.emplace(as_vertex(w), row[w]);
  }
  return out;
}

KNeighborhood k_neighborhood(const Graph& g, VertexId v, int k) {
  if (k < 1) throw ValidationError("k must be a positive integer");
  const auto row = distance_row(g, v, k);
  KNeighborhood nb{v, k, {}};
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (row[w] == k) nb.members.push_back(as_vertex(w));
  }
  return nb;
}

std::size_t max_k_path_degree(const Graph& g, int k) {
  if (k < 1) throw ValidationError("k must be a positive integer");
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto row = distance_row(g, as_vertex(v), k);
    const auto count = static_cast<std::size_t>(std::count(row.begin(), row.end(), k));
    best = std::max(best, count);
  }
  return best;
}

int eccentricity(const Graph& g, VertexId v) {
  const auto row = distance_row(g, v);
  return *std::max_element(row.begin(), row.end());
}

int diameter(const Graph& g) {
  int best = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    best = std::max(best, eccentricity(g, as_vertex(v)));
  }
  return best;
}

Graph path_graph(std::size_t n) {
  require_size(n, "path_graph");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(as_vertex(i), as_vertex(i + 1));
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require_size(n, "cycle_graph");
  if (n < 3) throw ValidationError("cycle_graph: need at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(as_vertex(i), as_vertex((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph ladder_graph(std::size_t n) {
  require_size(n, "ladder_graph");
  // Vertex i on the first rail, n + i on the second.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(as_vertex(i), as_vertex(n + i));
    if (i + 1 < n) {
      edges.emplace_back(as_vertex(i), as_vertex(i + 1));
      edges.emplace_back(as_vertex(n + i), as_vertex(n + i + 1));
    }
  }
  return Graph::from_edges(2 * n, edges);
}

namespace {

// Grid vertex (x, y) -> y * width + x.
template <class Connect>
Graph grid_graph(std::size_t width, std::size_t height, const char* name, Connect connect) {
  require_size(width, name);
  require_size(height, name);
  std::vector<Edge> edges;
  auto id = [width](std::size_t x, std::size_t y) { return as_vertex(y * width + x); };
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      connect(x, y, [&](std::size_t x2, std::size_t y2) {
        if (x2 < width && y2 < height) edges.emplace_back(id(x, y), id(x2, y2));
      });
    }
  }
  return Graph::from_edges(width * height, edges);
}

}  // namespace

Graph square_lattice(std::size_t width, std::size_t height) {
  return grid_graph(width, height, "square_lattice", [](std::size_t x, std::size_t y, auto link) {
    link(x + 1, y);
    link(x, y + 1);
  });
}

Graph triangular_lattice(std::size_t width, std::size_t height) {
  return grid_graph(width, height, "triangular_lattice",
                    [](std::size_t x, std::size_t y, auto link) {
                      link(x + 1, y);
                      link(x, y + 1);
                      link(x + 1, y + 1);
                    });
}

Graph hexagonal_lattice(std::size_t width, std::size_t height) {
  // Brick wall: all horizontal bonds, vertical bonds on alternating columns.
  return grid_graph(width, height, "hexagonal_lattice",
                    [](std::size_t x, std::size_t y, auto link) {
                      link(x + 1, y);
                      if ((x + y) % 2 == 0) link(x, y + 1);
                    });
}

Graph generation_tree(std::size_t depth) {
  require_size(depth, "generation_tree");
  std::vector<Edge> edges;
  std::vector<VertexId> generation{0};
  std::size_t next_id = 1;
  for (std::size_t n = 0; n < depth; ++n) {
    std::vector<VertexId> children;
    for (VertexId parent : generation) {
      for (std::size_t c = 0; c < n + 1; ++c) {
        const auto child = as_vertex(next_id++);
        edges.emplace_back(parent, child);
        children.push_back(child);
      }
    }
    generation.swap(children);
  }
  return Graph::from_edges(next_id, edges);
}

LabeledGraph read_edge_list(std::istream& in) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, as_vertex(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw ValidationError("edge list line " + std::to_string(line_no) +
                            ": expected exactly two vertex labels");
    }
    const VertexId u = intern(a);
    const VertexId v = intern(b);
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw IoError("failed while reading edge list");
  if (labels.empty()) throw ValidationError("edge list contains no edges");
  return LabeledGraph{Graph::from_edges(labels.size(), edges), std::move(labels)};
}

}  // namespace kpath
