#include "sepenum/semi_matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace sepenum {

namespace {

struct MatchingSearch {
  const Graph& g;
  int k;
  std::vector<Edge> edges;
  std::vector<Vertex> xs, ys;
  VertexSet used;

  bool compatible(Vertex x, Vertex y) const {
    if (used.contains(x) || used.contains(y)) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (g.adjacent(x, ys[i]) || g.adjacent(xs[i], y)) return false;
    return true;
  }

  bool run(std::size_t from) {
    if (static_cast<int>(xs.size()) == k) return true;
    for (std::size_t e = from; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      for (auto [x, y] : {Edge{a, b}, Edge{b, a}}) {
        if (!compatible(x, y)) continue;
        xs.push_back(x);
        ys.push_back(y);
        used.insert(x);
        used.insert(y);
        if (run(e + 1)) return true;
        used.erase(x);
        used.erase(y);
        xs.pop_back();
        ys.pop_back();
      }
    }
    return false;
  }
};

void combinations(int n, int size, std::vector<Vertex>& cur, Vertex from,
                  std::vector<std::vector<Vertex>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (Vertex v = from; v < n; ++v) {
    cur.push_back(v);
    combinations(n, size, cur, v + 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<SemiMatchingWitness> find_semi_induced_matching(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("semi-induced matching size must be >= 1");
  MatchingSearch s{g, k, g.edges(), {}, {}, VertexSet(g.order())};
  if (!s.run(0)) return std::nullopt;
  return SemiMatchingWitness{s.xs, s.ys};
}

bool is_semi_induced_matching(const Graph& g, const SemiMatchingWitness& w) {
  if (w.x.size() != w.y.size()) return false;
  VertexSet seen(g.order());
  for (const auto* side : {&w.x, &w.y})
    for (Vertex v : *side) {
      if (v < 0 || v >= g.order() || seen.contains(v)) return false;
      seen.insert(v);
    }
  for (std::size_t i = 0; i < w.x.size(); ++i)
    for (std::size_t j = 0; j < w.y.size(); ++j)
      if (g.adjacent(w.x[i], w.y[j]) != (i == j)) return false;
  return true;
}

SeparatorSet enumerate_separators_semimatching(const Graph& g, int k, int jobs) {
  if (k < 2) throw std::invalid_argument("semi-matching enumeration needs k >= 2");
  const int n = g.order();
  std::vector<std::vector<Vertex>> subsets;
  for (int size = 1; size <= k - 1 && size <= n; ++size) {
    std::vector<Vertex> cur;
    combinations(n, size, cur, 0, subsets);
  }
  std::vector<VertexSet> nbhd;
  nbhd.reserve(subsets.size());
  for (const auto& s : subsets) nbhd.push_back(g.neighborhood(VertexSet::from_range(n, s)));

  jobs = std::max(1, jobs);
  std::vector<SeparatorSet> parts(static_cast<std::size_t>(jobs));
  auto work = [&](int id) {
    std::set<VertexSet> tried;
    for (std::size_t a = static_cast<std::size_t>(id); a < nbhd.size();
         a += static_cast<std::size_t>(jobs))
      for (std::size_t b = a; b < nbhd.size(); ++b) {
        VertexSet c = nbhd[a] & nbhd[b];
        if (c.empty() || !tried.insert(c).second) continue;
        if (auto r = is_minimal_separator(g, c)) parts[static_cast<std::size_t>(id)].insert(*r);
      }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }
  SeparatorSet out;
  for (auto& p : parts) out.merge(p);
  return out;
}

}  // namespace sepenum
