#include "sepenum/config_detect.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sepenum {

std::string to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::square: return "square";
    case ConfigKind::theta: return "theta";
    case ConfigKind::pyramid: return "pyramid";
    case ConfigKind::prism: return "prism";
    case ConfigKind::wheel: return "wheel";
    case ConfigKind::even_wheel: return "even-wheel";
    case ConfigKind::turtle: return "turtle";
    case ConfigKind::even_hole: return "even-hole";
  }
  return "?";
}

std::optional<ConfigKind> config_kind_from_string(const std::string& s) {
  for (auto k : {ConfigKind::square, ConfigKind::theta, ConfigKind::pyramid, ConfigKind::prism,
                 ConfigKind::wheel, ConfigKind::even_wheel, ConfigKind::turtle,
                 ConfigKind::even_hole})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

const std::vector<Vertex>& ConfigurationWitness::part(const std::string& name) const {
  for (const auto& [n, vs] : parts)
    if (n == name) return vs;
  throw std::out_of_range("witness has no part " + name);
}

namespace {

// Forward arc of h from index i to index j, both included.
std::vector<Vertex> arc(const Hole& h, int i, int j) {
  std::vector<Vertex> out;
  const int k = h.length();
  for (int t = i;; t = (t + 1) % k) {
    out.push_back(h.cycle[static_cast<std::size_t>(t)]);
    if (t == j % k) break;
  }
  return out;
}

std::vector<Vertex> reversed(std::vector<Vertex> p) {
  std::reverse(p.begin(), p.end());
  return p;
}

// Per-hole view: hole vertex set and N_H(v) for every vertex.
struct HoleView {
  const Graph& g;
  const Hole& h;
  VertexSet on;
  std::vector<VertexSet> nh;

  HoleView(const Graph& graph, const Hole& hole)
      : g(graph), h(hole), on(hole.vertex_set(graph.order())) {
    nh.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) nh.push_back(g.neighbors(v) & on);
  }
  bool outside(Vertex v) const { return !on.contains(v); }

  // Outside vertices whose hole neighbourhood is inside `within`.
  VertexSet restricted(const VertexSet& within) const {
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      if (outside(v) && nh[v].is_subset_of(within)) out.insert(v);
    return out;
  }
};

// Shortest path from s to t whose interior lies in `interior`.
std::optional<Path> path_through(const Graph& g, Vertex s, Vertex t, const VertexSet& interior) {
  VertexSet forbidden = interior.complement();
  forbidden.erase(s);
  forbidden.erase(t);
  return shortest_path(g, s, t, forbidden);
}

std::optional<ConfigurationWitness> theta_in(const HoleView& hv) {
  const Hole& h = hv.h;
  const int k = h.length();
  const int n = hv.g.order();
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      Vertex a = h.cycle[i], b = h.cycle[j];
      if (hv.g.adjacent(a, b)) continue;
      auto p = path_through(hv.g, a, b, hv.restricted(VertexSet(n, {a, b})));
      if (!p) continue;
      return ConfigurationWitness{
          ConfigKind::theta,
          {{"P1", arc(h, i, j)}, {"P2", reversed(arc(h, j, i))}, {"P3", *p}}};
    }
  return std::nullopt;
}

std::optional<ConfigurationWitness> pyramid_in(const HoleView& hv) {
  const Hole& h = hv.h;
  const Graph& g = hv.g;
  const int k = h.length();
  const int n = g.order();
  for (int t = 0; t < k; ++t) {
    // triangle edge b1 b2 = h[t] h[t+1]; apex a anywhere else on h
    const int t2 = (t + 1) % k;
    Vertex b1 = h.cycle[t], b2 = h.cycle[t2];
    for (int s = (t2 + 1) % k; s != t; s = (s + 1) % k) {
      Vertex a = h.cycle[s];
      std::vector<Vertex> p1 = arc(h, s, t);              // a .. b1, avoiding b2
      std::vector<Vertex> p2 = reversed(arc(h, t2, s));   // a .. b2, avoiding b1
      VertexSet tri(n, {b1, b2});
      VertexSet tri_apex(n, {a, b1, b2});
      VertexSet only_a = hv.restricted(VertexSet(n, {a}));
      for (Vertex b3 = 0; b3 < n; ++b3) {
        if (!hv.outside(b3)) continue;
        const VertexSet& nb = hv.nh[b3];
        if (nb == tri_apex && !g.adjacent(a, b1) && !g.adjacent(a, b2)) {
          return ConfigurationWitness{ConfigKind::pyramid,
                                      {{"P1", p1}, {"P2", p2}, {"P3", {a, b3}}}};
        }
        if (nb == tri) {
          VertexSet interior = only_a;
          interior.erase(b3);
          auto p3 = path_through(g, a, b3, interior);
          if (p3)
            return ConfigurationWitness{ConfigKind::pyramid, {{"P1", p1}, {"P2", p2}, {"P3", *p3}}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> prism_in(const HoleView& hv) {
  const Hole& h = hv.h;
  const Graph& g = hv.g;
  const int k = h.length();
  const int n = g.order();
  VertexSet free_of_h = hv.restricted(VertexSet(n));
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if ((j + 1) % k == i) continue;
      Vertex a1 = h.cycle[i], a2 = h.cycle[i + 1];
      Vertex b2 = h.cycle[j], b1 = h.cycle[(j + 1) % k];
      VertexSet ea(n, {a1, a2}), eb(n, {b1, b2});
      for (Vertex a3 = 0; a3 < n; ++a3) {
        if (!hv.outside(a3) || !(hv.nh[a3] == ea)) continue;
        for (Vertex b3 = 0; b3 < n; ++b3) {
          if (!hv.outside(b3) || b3 == a3 || !(hv.nh[b3] == eb)) continue;
          auto p3 = path_through(g, a3, b3, free_of_h);
          if (!p3) continue;
          return ConfigurationWitness{ConfigKind::prism,
                                      {{"P1", reversed(arc(h, (j + 1) % k, i))},
                                       {"P2", arc(h, i + 1, j)},
                                       {"P3", *p3}}};
        }
      }
    }
  return std::nullopt;
}

std::optional<ConfigurationWitness> wheel_in(const HoleView& hv, bool even_only) {
  for (Vertex v = 0; v < hv.g.order(); ++v) {
    if (!hv.outside(v)) continue;
    int c = hv.nh[v].size();
    if (c >= 3 && (!even_only || c % 2 == 0))
      return ConfigurationWitness{even_only ? ConfigKind::even_wheel : ConfigKind::wheel,
                                  {{"rim", hv.h.cycle}, {"center", {v}}}};
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> turtle_in(const HoleView& hv) {
  const Graph& g = hv.g;
  const Hole& h = hv.h;
  const int k = h.length();
  for (Vertex x = 0; x < g.order(); ++x) {
    if (!hv.outside(x) || hv.nh[x].size() < 3) continue;
    bool found = false;
    std::optional<ConfigurationWitness> out;
    g.neighbors(x).for_each([&](Vertex y) {
      if (found || y < x || !hv.outside(y) || hv.nh[y].size() < 3) return;
      if (hv.nh[x].intersects(hv.nh[y])) return;
      // label hole positions 1 (x), 2 (y), 0 (neither)
      std::vector<int> label(static_cast<std::size_t>(k), 0);
      for (int i = 0; i < k; ++i) {
        if (hv.nh[x].contains(h.cycle[i])) label[i] = 1;
        if (hv.nh[y].contains(h.cycle[i])) label[i] = 2;
      }
      std::vector<int> marked;
      for (int i = 0; i < k; ++i)
        if (label[i] != 0) marked.push_back(i);
      int changes = 0;
      int end_x = -1, end_y = -1;
      bool gaps_ok = true;
      for (std::size_t t = 0; t < marked.size(); ++t) {
        int p = marked[t], q = marked[(t + 1) % marked.size()];
        if (label[p] == label[q]) continue;
        ++changes;
        int gap = (q - p + k) % k;
        if (gap < 2) gaps_ok = false;
        (label[p] == 1 ? end_x : end_y) = p;
      }
      if (changes != 2 || !gaps_ok) return;
      int u = (end_x + 1) % k, v = (end_y + 1) % k;
      found = true;
      out = ConfigurationWitness{ConfigKind::turtle,
                                 {{"P1", reversed(arc(h, v, u))},
                                  {"P2", arc(h, u, v)},
                                  {"x", {x}},
                                  {"y", {y}}}};
    });
    if (found) return out;
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> in_hole(const Graph& g, const Hole& h, ConfigKind kind) {
  switch (kind) {
    case ConfigKind::square:
      if (h.length() == 4) return ConfigurationWitness{kind, {{"hole", h.cycle}}};
      return std::nullopt;
    case ConfigKind::even_hole:
      if (h.length() % 2 == 0) return ConfigurationWitness{kind, {{"hole", h.cycle}}};
      return std::nullopt;
    default: break;
  }
  HoleView hv(g, h);
  switch (kind) {
    case ConfigKind::theta: return theta_in(hv);
    case ConfigKind::pyramid: return pyramid_in(hv);
    case ConfigKind::prism: return prism_in(hv);
    case ConfigKind::wheel: return wheel_in(hv, false);
    case ConfigKind::even_wheel: return wheel_in(hv, true);
    case ConfigKind::turtle: return turtle_in(hv);
    default: return std::nullopt;
  }
}

// --- literal checks -------------------------------------------------------

bool is_path_in(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  return !p.empty();
}

// The induced subgraph on the vertices of `edges_expected` (plus `extra`)
// has exactly the listed edges, and the vertex lists are duplicate free.
bool induced_matches(const Graph& g, const std::vector<Vertex>& vertices,
                     const std::set<Edge>& expected) {
  std::vector<Vertex> vs = vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  for (Vertex v : vs)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j]) != (expected.count({vs[i], vs[j]}) > 0)) return false;
  return true;
}

void add_edge(std::set<Edge>& s, Vertex a, Vertex b) { s.insert({std::min(a, b), std::max(a, b)}); }

void add_path(std::set<Edge>& s, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) add_edge(s, p[i], p[i + 1]);
}

bool verify_three_paths(const Graph& g, const ConfigurationWitness& w) {
  const auto& p1 = w.part("P1");
  const auto& p2 = w.part("P2");
  const auto& p3 = w.part("P3");
  for (const auto* p : {&p1, &p2, &p3})
    if (!is_path_in(g, *p) || p->size() < 2) return false;
  std::set<Edge> expected;
  std::vector<Vertex> all;
  for (const auto* p : {&p1, &p2, &p3}) add_path(expected, *p);
  switch (w.kind) {
    case ConfigKind::theta: {
      Vertex a = p1.front(), b = p1.back();
      for (const auto* p : {&p2, &p3})
        if (p->front() != a || p->back() != b) return false;
      for (const auto* p : {&p1, &p2, &p3}) {
        if (p->size() < 3) return false;
        all.insert(all.end(), p->begin() + 1, p->end() - 1);
      }
      all.push_back(a);
      all.push_back(b);
      return induced_matches(g, all, expected);
    }
    case ConfigKind::pyramid: {
      Vertex a = p1.front();
      if (p2.front() != a || p3.front() != a) return false;
      int short_paths = 0;
      for (const auto* p : {&p1, &p2, &p3}) {
        if (p->size() == 2) ++short_paths;
        all.insert(all.end(), p->begin() + 1, p->end());
      }
      if (short_paths > 1) return false;
      all.push_back(a);
      add_edge(expected, p1.back(), p2.back());
      add_edge(expected, p2.back(), p3.back());
      add_edge(expected, p1.back(), p3.back());
      return induced_matches(g, all, expected);
    }
    case ConfigKind::prism: {
      for (const auto* p : {&p1, &p2, &p3}) all.insert(all.end(), p->begin(), p->end());
      add_edge(expected, p1.front(), p2.front());
      add_edge(expected, p2.front(), p3.front());
      add_edge(expected, p1.front(), p3.front());
      add_edge(expected, p1.back(), p2.back());
      add_edge(expected, p2.back(), p3.back());
      add_edge(expected, p1.back(), p3.back());
      return induced_matches(g, all, expected);
    }
    default: return false;
  }
}

}  // namespace

std::optional<ConfigurationWitness> find_config_in(const Graph& g, ConfigKind kind,
                                                   const std::vector<Hole>& holes) {
  for (const Hole& h : holes)
    if (auto w = in_hole(g, h, kind)) return w;
  return std::nullopt;
}

DetectResult find_config(const Graph& g, ConfigKind kind, std::size_t budget) {
  int max_len = kind == ConfigKind::square ? 4 : 0;
  HoleEnumeration holes = enumerate_holes(g, max_len, budget);
  DetectResult out;
  out.witness = find_config_in(g, kind, holes.holes);
  out.complete = holes.complete || out.witness.has_value();
  return out;
}

bool verify_witness(const Graph& g, const ConfigurationWitness& w) {
  try {
    switch (w.kind) {
      case ConfigKind::square: return is_hole(g, w.part("hole")) && w.part("hole").size() == 4;
      case ConfigKind::even_hole:
        return is_hole(g, w.part("hole")) && w.part("hole").size() % 2 == 0;
      case ConfigKind::theta:
      case ConfigKind::pyramid:
      case ConfigKind::prism: return verify_three_paths(g, w);
      case ConfigKind::wheel:
      case ConfigKind::even_wheel: {
        const auto& rim = w.part("rim");
        const auto& c = w.part("center");
        if (c.size() != 1 || !is_hole(g, rim)) return false;
        if (std::find(rim.begin(), rim.end(), c[0]) != rim.end()) return false;
        int cnt = 0;
        for (Vertex v : rim) cnt += g.adjacent(c[0], v) ? 1 : 0;
        return cnt >= 3 && (w.kind == ConfigKind::wheel || cnt % 2 == 0);
      }
      case ConfigKind::turtle: {
        const auto& p1 = w.part("P1");
        const auto& p2 = w.part("P2");
        const auto& xs = w.part("x");
        const auto& ys = w.part("y");
        if (xs.size() != 1 || ys.size() != 1 || p1.size() < 2 || p2.size() < 2) return false;
        if (p1.front() != p2.front() || p1.back() != p2.back()) return false;
        if (!is_path_in(g, p1) || !is_path_in(g, p2)) return false;
        std::vector<Vertex> cycle = p1;
        for (auto it = p2.rbegin() + 1; it + 1 != p2.rend(); ++it) cycle.push_back(*it);
        if (!is_hole(g, cycle)) return false;
        Vertex x = xs[0], y = ys[0];
        if (x == y || !g.adjacent(x, y)) return false;
        for (Vertex v : cycle)
          if (v == x || v == y) return false;
        auto count = [&](Vertex c, const std::vector<Vertex>& p) {
          int t = 0;
          for (Vertex v : p) t += g.adjacent(c, v) ? 1 : 0;
          return t;
        };
        return count(x, p1) >= 3 && count(x, p2) == 0 && count(y, p2) >= 3 && count(y, p1) == 0;
      }
    }
  } catch (const std::out_of_range&) {
    return false;
  }
  return false;
}

ClassCheck is_in_class_C(const Graph& g, std::size_t budget) {
  ClassCheck out;
  HoleEnumeration holes = enumerate_holes(g, 0, budget);
  for (auto kind : {ConfigKind::square, ConfigKind::prism, ConfigKind::pyramid, ConfigKind::theta,
                    ConfigKind::even_wheel}) {
    if (auto w = find_config_in(g, kind, holes.holes)) {
      out.in_class = Membership::no;
      out.witness = std::move(w);
      return out;
    }
  }
  out.in_class = holes.complete ? Membership::yes : Membership::inconclusive;
  return out;
}

}  // namespace sepenum
