#include "sepenum/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sepenum {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                  std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (!adj_[u].contains(v)) {
      adj_[u].insert(v);
      adj_[v].insert(u);
      ++m_;
    }
  }
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

VertexSet Graph::neighborhood(const VertexSet& a) const {
  VertexSet out(n_);
  a.for_each([&](Vertex v) { out |= adj_[v]; });
  out -= a;
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    adj_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

VertexSet component_of(const Graph& g, const VertexSet& alive, Vertex start) {
  VertexSet comp(g.order());
  comp.insert(start);
  VertexSet frontier = comp;
  while (frontier.any()) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next &= alive;
    next -= comp;
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive) {
  std::vector<VertexSet> out;
  VertexSet left = alive;
  for (Vertex s = left.first(); s >= 0; s = left.first()) {
    VertexSet comp = component_of(g, alive, s);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  return components_within(g, removed.complement());
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, g.all(), 0).size() == g.order();
}

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& c) {
  std::vector<VertexSet> out;
  for (auto& d : connected_components(g, c))
    if (c.is_subset_of(g.neighborhood(d))) out.push_back(std::move(d));
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok) return;
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

std::vector<int> bfs_distances(const Graph& g, Vertex from, const VertexSet& alive) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[from] = 0;
  std::vector<Vertex> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    g.neighbors(u).for_each([&](Vertex w) {
      if (dist[w] < 0 && alive.contains(w)) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

std::optional<Path> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const VertexSet& forbidden) {
  VertexSet alive = forbidden.complement();
  alive.insert(from);
  alive.insert(to);
  std::vector<int> dist = bfs_distances(g, from, alive);
  if (dist[to] < 0) return std::nullopt;
  Path path{to};
  for (Vertex v = to; v != from;) {
    Vertex parent = -1;
    g.neighbors(v).for_each([&](Vertex w) {
      if (parent < 0 && dist[w] == dist[v] - 1) parent = w;
    });
    path.push_back(parent);
    v = parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> old_ids = keep.to_vector();
  std::vector<int> new_id(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (new_id[u] >= 0 && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
  return {Graph(static_cast<int>(old_ids.size()), edges), std::move(old_ids)};
}

}  // namespace sepenum
