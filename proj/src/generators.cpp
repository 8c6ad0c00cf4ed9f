#include "sepenum/generators.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

namespace sepenum {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void clique(std::vector<Edge>& e, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) e.emplace_back(vs[i], vs[j]);
}

void path(std::vector<Edge>& e, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) e.emplace_back(vs[i], vs[i + 1]);
}

std::vector<Vertex> range(Vertex from, int count) {
  std::vector<Vertex> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = from + i;
  return out;
}

// Portable mapping of the engine output, so a seed means the same graph on
// every standard library.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

Graph gen_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph gen_k_prism(int k) {
  require(k >= 1, "k-prism needs k >= 1");
  std::vector<Edge> e;
  clique(e, range(0, k));
  clique(e, range(k, k));
  for (int i = 0; i < k; ++i) e.emplace_back(i, k + i);
  return Graph(2 * k, e);
}

Graph gen_k_theta(int k) {
  require(k >= 2, "k-theta needs k >= 2");
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i) path(e, {0, 2 * i, 2 * i + 1, 1});
  return Graph(2 * k + 2, e);
}

Graph gen_k_pyramid(int k) {
  require(k >= 2, "k-pyramid needs k >= 2");
  std::vector<Edge> e;
  clique(e, range(1, k));
  for (int i = 1; i <= k; ++i) path(e, {0, k + i, i});
  return Graph(2 * k + 1, e);
}

namespace {

struct TurtleLayout {
  int n = 0;
  std::vector<Vertex> p1, p2;  // u .. v
  std::vector<Vertex> x, y;
  std::vector<Edge> edges;
};

TurtleLayout turtle_layout(int k) {
  TurtleLayout t;
  const Vertex u = t.n++, v = t.n++;
  std::vector<std::vector<int>> attach(2);
  for (int side = 0; side < 2; ++side) {
    std::vector<Vertex>& p = side == 0 ? t.p1 : t.p2;
    p.push_back(u);
    for (int j = 0; j < k; ++j) {
      if (j > 0) p.push_back(t.n++);  // spacer between blocks
      for (int s = 0; s < 7; ++s) {
        if (s % 3 == 0) attach[side].push_back(static_cast<int>(p.size()));
        p.push_back(t.n++);
      }
    }
    p.push_back(v);
    path(t.edges, p);
  }
  for (int j = 0; j < k; ++j) {
    Vertex x = t.n++, y = t.n++;
    t.x.push_back(x);
    t.y.push_back(y);
    t.edges.emplace_back(x, y);
    for (int s = 0; s < 3; ++s) {
      t.edges.emplace_back(x, t.p1[attach[0][3 * j + s]]);
      t.edges.emplace_back(y, t.p2[attach[1][3 * j + s]]);
    }
  }
  return t;
}

struct LadderLayout {
  std::vector<Vertex> p, q, s, y, m, b;
  std::vector<Edge> edges;
  int n = 0;
};

LadderLayout ladder_layout(int k) {
  LadderLayout l;
  for (int i = 0; i < k; ++i) {
    l.p.push_back(l.n++);
    l.q.push_back(l.n++);
    l.s.push_back(l.n++);
    l.m.push_back(l.n++);
    l.b.push_back(l.n++);
  }
  for (int i = 0; i + 1 < k; ++i) l.y.push_back(l.n++);
  for (int i = 0; i < k; ++i) {
    clique(l.edges, {l.p[i], l.q[i], l.s[i]});
    path(l.edges, {l.s[i], l.m[i], l.b[i]});
    if (i + 1 < k) {
      path(l.edges, {l.q[i], l.y[i], l.p[i + 1]});
      l.edges.emplace_back(l.b[i], l.b[i + 1]);
    }
  }
  return l;
}

}  // namespace

Graph gen_k_turtle(int k) {
  require(k >= 1, "k-turtle needs k >= 1");
  auto t = turtle_layout(k);
  return Graph(t.n, t.edges);
}

Graph gen_k_ladder(int k) {
  require(k >= 1, "k-ladder needs k >= 1");
  auto l = ladder_layout(k);
  return Graph(l.n, l.edges);
}

Graph gen_Gk(int k) {
  require(k >= 1, "G_k needs k >= 1");
  std::vector<Edge> e;
  auto X = range(0, k), Y = range(k, k), Xp = range(2 * k, k), Yp = range(3 * k, k);
  const Vertex z = 4 * k;
  for (const auto* c : {&X, &Y, &Xp, &Yp}) clique(e, *c);
  for (int i = 0; i < k; ++i) {
    e.emplace_back(z, X[i]);
    e.emplace_back(z, Xp[i]);
    for (int j = 0; j < k; ++j) e.emplace_back(Y[i], Yp[j]);
    // x_i (1-based i) sees y_{k-i+1} .. y_k
    for (int j = k - 1 - i; j < k; ++j) {
      e.emplace_back(X[i], Y[j]);
      e.emplace_back(Xp[i], Yp[j]);
    }
  }
  return Graph(4 * k + 1, e);
}

Graph gen_random_chordal(int n, double density, std::uint64_t seed) {
  require(n >= 1, "chordal generator needs n >= 1");
  require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit(rng) < density) {
        adj[u].insert(v);
        adj[v].insert(u);
      }
  std::vector<Vertex> order = range(0, n);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(rng, i)]);
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  // eliminate in order; later neighbours become a clique
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex u : adj[v])
      if (rank[u] > rank[v]) later.push_back(u);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        adj[later[i]].insert(later[j]);
        adj[later[j]].insert(later[i]);
      }
  }
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[u])
      if (u < v) e.emplace_back(u, v);
  Graph g(n, e);
  auto comps = connected_components(g, VertexSet(n));
  for (std::size_t i = 1; i < comps.size(); ++i) {
    Vertex a = comps[i - 1].to_vector()[below(rng, static_cast<std::size_t>(comps[i - 1].size()))];
    Vertex b = comps[i].to_vector()[below(rng, static_cast<std::size_t>(comps[i].size()))];
    e.emplace_back(a, b);
  }
  return Graph(n, e);
}

Graph gen_cycle_with_clones(int n, int clones, std::uint64_t seed) {
  require(n >= 4, "clone cycle needs n >= 4");
  require(clones >= 0, "clone count must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  std::vector<std::vector<Vertex>> at(static_cast<std::size_t>(n));
  int next = n;
  for (int c = 0; c < clones; ++c) {
    Vertex y = static_cast<Vertex>(below(rng, static_cast<std::size_t>(n)));
    Vertex u = next++;
    for (Vertex w : {(y + n - 1) % n, y, (y + 1) % n}) e.emplace_back(u, w);
    for (Vertex w : at[y]) e.emplace_back(u, w);
    at[y].push_back(u);
  }
  return Graph(next, e);
}

GeneratedGraph generate(const std::string& family, int k, int n, std::uint64_t seed,
                        double density) {
  GeneratedGraph out;
  if (family == "cycle") {
    out.graph = gen_cycle(n);
    out.groups = {{"cycle", range(0, n)}};
  } else if (family == "kprism") {
    out.graph = gen_k_prism(k);
    out.groups = {{"A", range(0, k)}, {"B", range(k, k)}};
  } else if (family == "ktheta") {
    out.graph = gen_k_theta(k);
    out.groups = {{"a", {0}}, {"b", {1}}};
  } else if (family == "kpyramid") {
    out.graph = gen_k_pyramid(k);
    out.groups = {{"apex", {0}}, {"B", range(1, k)}, {"M", range(k + 1, k)}};
  } else if (family == "kturtle") {
    require(k >= 1, "k-turtle needs k >= 1");
    auto t = turtle_layout(k);
    out.graph = gen_k_turtle(k);
    out.groups = {{"P1", t.p1}, {"P2", t.p2}, {"x", t.x}, {"y", t.y}};
  } else if (family == "kladder") {
    require(k >= 1, "k-ladder needs k >= 1");
    auto l = ladder_layout(k);
    out.graph = gen_k_ladder(k);
    out.groups = {{"p", l.p}, {"q", l.q}, {"s", l.s}, {"y", l.y}, {"m", l.m}, {"b", l.b}};
  } else if (family == "gk") {
    out.graph = gen_Gk(k);
    out.groups = {{"X", range(0, k)},
                  {"Y", range(k, k)},
                  {"X'", range(2 * k, k)},
                  {"Y'", range(3 * k, k)},
                  {"z", {4 * k}}};
  } else if (family == "chordal") {
    out.graph = gen_random_chordal(n, density, seed);
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  return out;
}

void CliquePathPartition::validate() const {
  const int n = graph.order();
  VertexSet seen(n);
  for (const auto* part : {&clique, &path})
    for (Vertex v : *part) {
      require(v >= 0 && v < n, "partition vertex out of range");
      require(!seen.contains(v), "partition lists a vertex twice");
      seen.insert(v);
    }
  require(seen.size() == n, "partition does not cover every vertex");
  require(is_clique(graph, VertexSet::from_range(n, clique)), "K is not a clique");
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j)
      require(graph.adjacent(path[i], path[j]) == (j == i + 1), "P is not an induced path");
  VertexSet k = VertexSet::from_range(n, clique);
  for (Vertex v : path)
    require((graph.neighbors(v) & k).size() <= 1, "a path vertex has two clique neighbours");
}

namespace {

// K-neighbour of a path vertex, or -1.
Vertex clique_neighbor(const CliquePathPartition& cp, const VertexSet& k, Vertex v) {
  return (cp.graph.neighbors(v) & k).first();
}

struct SurgerySite {
  Vertex b = -1;
  std::size_t b_index = 0;
};

// First qualifying tuple in path order: a' = P[i], c' = P[j], i < j.
std::optional<SurgerySite> find_site(const CliquePathPartition& cp) {
  const int n = cp.graph.order();
  VertexSet k = VertexSet::from_range(n, cp.clique);
  const auto& p = cp.path;
  std::vector<Vertex> kn(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) kn[i] = clique_neighbor(cp, k, p[i]);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (kn[i] < 0) continue;
    for (std::size_t j = i + 2; j < p.size(); ++j) {
      Vertex a = kn[i], c = kn[j];
      if (c < 0 || c == a) continue;
      bool clean = true;
      std::vector<int> count(static_cast<std::size_t>(n), 0);
      for (std::size_t t = i + 1; t < j; ++t) {
        if (kn[t] == a || kn[t] == c) clean = false;
        if (kn[t] >= 0) ++count[kn[t]];
      }
      if (!clean) continue;
      for (std::size_t t = i + 1; t < j; ++t)
        if (kn[t] >= 0 && count[kn[t]] == 1) return SurgerySite{kn[t], t};
    }
  }
  return std::nullopt;
}

}  // namespace

CliquePathPartition pyramid_surgery(const CliquePathPartition& in) {
  in.validate();
  CliquePathPartition cur = in;
  for (int round = 0;; ++round) {
    if (round > 100000) throw std::runtime_error("pyramid surgery did not terminate");
    auto site = find_site(cur);
    if (!site) return cur;
    const int n = cur.graph.order();
    const Vertex bp = cur.path[site->b_index];
    const Vertex y = cur.path[site->b_index + 1];
    std::vector<Vertex> ps{bp};
    for (int i = 0; i < 6; ++i) ps.push_back(n + i);
    std::vector<Edge> e;
    for (auto [u, v] : cur.graph.edges()) {
      if ((u == bp && v == y) || (u == y && v == bp)) continue;
      e.emplace_back(u, v);
    }
    path(e, ps);
    e.emplace_back(ps.back(), y);
    for (int i : {0, 3, 6}) e.emplace_back(site->b, ps[i]);
    cur.graph = Graph(n + 6, e);
    std::vector<Vertex> np(cur.path.begin(), cur.path.begin() + static_cast<long>(site->b_index));
    np.insert(np.end(), ps.begin(), ps.end());
    np.insert(np.end(), cur.path.begin() + static_cast<long>(site->b_index) + 1, cur.path.end());
    cur.path = std::move(np);
  }
}

}  // namespace sepenum
