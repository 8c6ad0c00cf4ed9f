#include "sepenum/holes.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sepenum {

int Hole::index_of(Vertex v) const {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

Hole canonical_hole(std::vector<Vertex> cycle) {
  if (cycle.empty()) return {};
  auto mn = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), mn, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return Hole{std::move(cycle)};
}

bool is_hole(const Graph& g, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 4) return false;
  VertexSet seen(g.order());
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

std::size_t default_hole_budget() {
  if (const char* env = std::getenv("SEPENUM_HOLE_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
    }
  }
  return 50'000'000;
}

namespace {

struct HoleSearch {
  const Graph& g;
  int max_len;
  std::size_t budget;
  const std::function<bool(const Hole&)>& visit;
  std::size_t steps = 0;
  bool stopped = false;
  bool exhausted = false;

  std::vector<Vertex> path;
  VertexSet above;

  // blocked = N[v_1..v_{k-2}] for the current path v_0..v_{k-1}
  void extend(const VertexSet& blocked) {
    if (stopped) return;
    if (++steps > budget) {
      exhausted = stopped = true;
      return;
    }
    const Vertex s = path.front();
    const Vertex last = path.back();
    const int k = static_cast<int>(path.size());
    VertexSet cand = g.neighbors(last);
    cand &= above;
    cand -= blocked;

    if (k >= 3) {
      VertexSet closing = cand & g.neighbors(s);
      closing.for_each([&](Vertex w) {
        if (stopped || path[1] > w) return;
        if (max_len > 0 && k + 1 > max_len) return;
        path.push_back(w);
        if (!visit(Hole{path})) stopped = true;
        path.pop_back();
      });
    }
    if (max_len > 0 && k + 1 >= max_len) return;
    cand -= g.closed_neighbors(s);
    VertexSet next_blocked = blocked;
    if (k >= 2) next_blocked |= g.closed_neighbors(path[static_cast<std::size_t>(k - 1)]);
    // The new last vertex is `w`; the one before it joins the blocked set.
    cand.for_each([&](Vertex w) {
      if (stopped) return;
      path.push_back(w);
      extend(next_blocked);
      path.pop_back();
    });
  }
};

}  // namespace

bool for_each_hole(const Graph& g, int max_len, std::size_t budget,
                   const std::function<bool(const Hole&)>& visit) {
  HoleSearch search{g, max_len, budget, visit, 0, false, false, {}, {}};
  for (Vertex s = 0; s < g.order() && !search.stopped; ++s) {
    search.above = VertexSet(g.order());
    for (Vertex v = s + 1; v < g.order(); ++v) search.above.insert(v);
    g.neighbors(s).for_each([&](Vertex v1) {
      if (search.stopped || v1 < s) return;
      search.path = {s, v1};
      VertexSet blocked(g.order());
      blocked.insert(s);
      search.extend(blocked);
    });
  }
  return !search.exhausted;
}

HoleEnumeration enumerate_holes(const Graph& g, int max_len, std::size_t budget) {
  HoleEnumeration out;
  out.complete = for_each_hole(g, max_len, budget, [&](const Hole& h) {
    out.holes.push_back(h);
    return true;
  });
  std::sort(out.holes.begin(), out.holes.end());
  return out;
}

}  // namespace sepenum
