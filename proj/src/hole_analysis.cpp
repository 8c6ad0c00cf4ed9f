#include "sepenum/hole_analysis.hpp"

#include <stdexcept>

namespace sepenum {

const char* to_string(HoleRelation r) {
  switch (r) {
    case HoleRelation::no_neighbor: return "no-neighbor";
    case HoleRelation::pending: return "pending";
    case HoleRelation::cap: return "cap";
    case HoleRelation::clone: return "clone";
    case HoleRelation::major: return "major";
    case HoleRelation::irregular: return "irregular";
  }
  return "?";
}

VertexSet hole_neighbors(const Graph& g, const Hole& h, Vertex u) {
  VertexSet out(g.order());
  for (Vertex v : h.cycle)
    if (g.adjacent(u, v)) out.insert(v);
  return out;
}

bool inside_three_path(const Hole& h, const VertexSet& s) {
  const int k = h.length();
  for (int i = 0; i < k; ++i) {
    VertexSet p(s.universe(), {h.at(i - 1), h.at(i), h.at(i + 1)});
    if (s.is_subset_of(p)) return true;
  }
  return false;
}

HoleRelativeClass classify(const Graph& g, const Hole& h, Vertex u) {
  if (h.index_of(u) >= 0) throw std::invalid_argument("classify: vertex lies on the hole");
  HoleRelativeClass out{HoleRelation::irregular, -1, hole_neighbors(g, h, u)};
  const int c = out.neighbors.size();
  if (!inside_three_path(h, out.neighbors)) {
    out.tag = HoleRelation::major;
  } else if (c == 0) {
    out.tag = HoleRelation::no_neighbor;
  } else if (c == 1) {
    out.tag = HoleRelation::pending;
  } else if (c == 2) {
    Vertex a = out.neighbors.first(), b = out.neighbors.next(a);
    if (g.adjacent(a, b)) out.tag = HoleRelation::cap;
  } else if (c == 3) {
    for (Vertex y : h.cycle) {
      VertexSet nb = g.neighbors(y) & out.neighbors;
      if (out.neighbors.contains(y) && nb.size() == 2) {
        out.tag = HoleRelation::clone;
        out.center = y;
        break;
      }
    }
  }
  return out;
}

bool is_major(const Graph& g, const Hole& h, Vertex u) {
  return !inside_three_path(h, hole_neighbors(g, h, u));
}

std::vector<Path> sectors(const Graph& g, const Hole& h, Vertex u) {
  VertexSet nh = hole_neighbors(g, h, u);
  if (nh.size() < 2) throw std::invalid_argument("sectors: fewer than two neighbours on the hole");
  const int k = h.length();
  int start = 0;
  while (!nh.contains(h.at(start))) ++start;
  std::vector<Path> out;
  Path cur{h.at(start)};
  for (int t = 1; t <= k; ++t) {
    Vertex v = h.at(start + t);
    cur.push_back(v);
    if (nh.contains(v)) {
      out.push_back(cur);
      cur = {v};
    }
  }
  return out;
}

bool are_nested(const Graph& g, const Hole& h, Vertex u, Vertex v) {
  VertexSet nu = hole_neighbors(g, h, u), nv = hole_neighbors(g, h, v);
  const int k = h.length();
  const int n = g.order();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      VertexSet first(n), second(n);
      for (int t = i; t <= j; ++t) first.insert(h.at(t));
      for (int t = j; t <= i + k; ++t) second.insert(h.at(t));
      if ((nu.is_subset_of(first) && nv.is_subset_of(second)) ||
          (nu.is_subset_of(second) && nv.is_subset_of(first)))
        return true;
    }
  return false;
}

VertexSet clones_of(const Graph& g, const Hole& h, Vertex y) {
  VertexSet out(g.order());
  out.insert(y);
  VertexSet on = h.vertex_set(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    if (on.contains(u)) continue;
    auto c = classify(g, h, u);
    if (c.tag == HoleRelation::clone && c.center == y) out.insert(u);
  }
  return out;
}

DecompositionCheck check_decomposition(const Graph& g, const Hole& h, Vertex w) {
  if (h.index_of(w) >= 0 || !is_major(g, h, w))
    throw std::invalid_argument("check_decomposition: vertex is not major w.r.t. the hole");
  VertexSet off_hole = g.neighbors(w) - h.vertex_set(g.order());
  auto secs = sectors(g, h, w);
  for (const VertexSet& d : connected_components(g, g.closed_neighbors(w))) {
    VertexSet nd = g.neighborhood(d);
    bool fits = false;
    for (const Path& p : secs) {
      VertexSet allowed = off_hole;
      allowed.insert(p.front());
      allowed.insert(p.back());
      if (nd.is_subset_of(allowed)) {
        fits = true;
        break;
      }
    }
    if (!fits) return {false, d};
  }
  return {true, VertexSet(g.order())};
}

}  // namespace sepenum
