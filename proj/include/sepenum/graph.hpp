#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sepenum/vertex_set.hpp"

namespace sepenum {

using Edge = std::pair<Vertex, Vertex>;
using Path = std::vector<Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Builds the graph; duplicate edges collapse. Throws std::invalid_argument
  /// on self-loops or out-of-range endpoints.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = adj_[v];
    s.insert(v);
    return s;
  }
  int degree(Vertex v) const { return adj_[v].size(); }
  int max_degree() const;

  /// N(A): vertices outside A with a neighbor in A.
  VertexSet neighborhood(const VertexSet& a) const;

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all() const { return VertexSet::full(n_); }

  /// Edge list with u < v, sorted.
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Partition of V(g) minus `removed` into connected components, each sorted
/// by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed);

/// Components of g restricted to `alive`.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive);

/// The component of g[alive] containing `start` (start must be alive).
VertexSet component_of(const Graph& g, const VertexSet& alive, Vertex start);

bool is_connected(const Graph& g);

/// Components D of g - c in which every vertex of c has a neighbor.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& c);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// Shortest from-to path avoiding `forbidden`. Neighbors are explored in
/// ascending order and every vertex keeps its lowest-id predecessor on a
/// shortest path, so the answer is deterministic.
std::optional<Path> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const VertexSet& forbidden);

/// BFS distances inside g[alive] from `from`; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex from, const VertexSet& alive);

/// g[keep] relabelled to 0..|keep|-1 in ascending order; second is the map
/// from new to old vertex ids.
std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace sepenum
