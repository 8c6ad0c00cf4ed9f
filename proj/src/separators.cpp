#include "sepenum/separators.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <mutex>
#include <thread>

#include "sepenum/errors.hpp"

namespace sepenum {

std::optional<SeparatorRecord> is_minimal_separator(const Graph& g, const VertexSet& c) {
  if (c.empty()) return std::nullopt;
  auto fulls = full_components(g, c);
  if (fulls.size() < 2) return std::nullopt;
  SeparatorRecord r;
  r.set = c;
  r.witness = {fulls[0].first(), fulls[1].first()};
  r.fulls = std::move(fulls);
  return r;
}

bool is_proper_separator(const Graph& g, const VertexSet& c) {
  return is_minimal_separator(g, c).has_value() && !is_clique(g, c);
}

std::vector<VertexSet> sets_of(const SeparatorSet& seps) {
  std::vector<VertexSet> out;
  out.reserve(seps.size());
  for (const auto& r : seps) out.push_back(r.set);
  return out;
}

SeparatorSet records_for(const Graph& g, const std::vector<VertexSet>& sets) {
  SeparatorSet out;
  for (const auto& s : sets)
    if (auto r = is_minimal_separator(g, s)) out.insert(std::move(*r));
  return out;
}

namespace {

using Mask = std::uint32_t;

// Minimal separator test on 32-bit masks.
bool mask_is_minimal_separator(const std::vector<Mask>& adj, Mask all, Mask c) {
  Mask rest = all & ~c;
  int full = 0;
  while (rest) {
    Mask comp = rest & (~rest + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask nb = 0;
      for (Mask f = frontier; f; f &= f - 1) nb |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
      nb &= rest & ~comp;
      comp |= nb;
      frontier = nb;
    }
    rest &= ~comp;
    Mask seen = 0;
    for (Mask f = comp; f; f &= f - 1) seen |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
    if ((seen & c) == c && ++full >= 2) return true;
  }
  return false;
}

}  // namespace

SeparatorSet oracle_separators_exhaustive(const Graph& g, int jobs) {
  const int n = g.order();
  if (n > kExhaustiveSeparatorLimit)
    throw SizeGuardError("exhaustive separator scan limited to n <= " +
                         std::to_string(kExhaustiveSeparatorLimit));
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  jobs = std::max(1, jobs);
  std::vector<std::vector<Mask>> found(static_cast<std::size_t>(jobs));
  auto work = [&](int id) {
    for (std::uint64_t m = 1 + static_cast<std::uint64_t>(id); m < total;
         m += static_cast<std::uint64_t>(jobs))
      if (mask_is_minimal_separator(adj, all, static_cast<Mask>(m)))
        found[static_cast<std::size_t>(id)].push_back(static_cast<Mask>(m));
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }
  std::vector<VertexSet> sets;
  for (const auto& part : found)
    for (Mask m : part) {
      VertexSet s(n);
      for (Mask f = m; f; f &= f - 1) s.insert(__builtin_ctz(f));
      sets.push_back(std::move(s));
    }
  return records_for(g, sets);
}

SeparatorSet oracle_separators_expansion(const Graph& g) {
  std::set<VertexSet> seen;
  std::deque<VertexSet> queue;
  auto offer = [&](VertexSet s) {
    if (s.empty()) return;
    if (seen.insert(s).second) queue.push_back(std::move(s));
  };
  for (Vertex v = 0; v < g.order(); ++v)
    for (const auto& d : connected_components(g, g.closed_neighbors(v))) offer(g.neighborhood(d));
  while (!queue.empty()) {
    VertexSet s = std::move(queue.front());
    queue.pop_front();
    s.for_each([&](Vertex x) {
      for (const auto& d : connected_components(g, s | g.neighbors(x))) offer(g.neighborhood(d));
    });
  }
  return records_for(g, std::vector<VertexSet>(seen.begin(), seen.end()));
}

SeparatorSet oracle_minimal_separators(const Graph& g) {
  if (g.order() <= 16) return oracle_separators_exhaustive(g);
  return oracle_separators_expansion(g);
}

SeparatorSet clique_minimal_separators(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> numbered(static_cast<std::size_t>(n), false);
  std::vector<VertexSet> madj(static_cast<std::size_t>(n), VertexSet(n));
  constexpr int kInf = 1 << 30;
  for (int step = 0; step < n; ++step) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u)
      if (!numbered[u] && (v < 0 || weight[u] > weight[v])) v = u;
    numbered[v] = true;
    // bottleneck distances: smallest possible maximum weight of an interior
    // vertex on a path from v through unnumbered vertices
    std::vector<int> d(static_cast<std::size_t>(n), kInf);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    g.neighbors(v).for_each([&](Vertex u) {
      if (!numbered[u]) d[u] = -1;
    });
    for (;;) {
      Vertex y = -1;
      for (Vertex u = 0; u < n; ++u)
        if (!numbered[u] && !done[u] && d[u] < kInf && (y < 0 || d[u] < d[y])) y = u;
      if (y < 0) break;
      done[y] = true;
      int through = std::max(d[y], weight[y]);
      g.neighbors(y).for_each([&](Vertex x) {
        if (!numbered[x] && !done[x] && through < d[x]) d[x] = through;
      });
    }
    // neighbours have d = -1, so they are always reached
    std::vector<Vertex> reached;
    for (Vertex u = 0; u < n; ++u)
      if (!numbered[u] && d[u] < weight[u]) reached.push_back(u);
    for (Vertex u : reached) {
      ++weight[u];
      madj[u].insert(v);
    }
  }
  std::set<VertexSet> cands(madj.begin(), madj.end());
  SeparatorSet out;
  for (const auto& s : cands) {
    if (s.empty() || !is_clique(g, s)) continue;
    if (auto r = is_minimal_separator(g, s)) out.insert(std::move(*r));
  }
  return out;
}

}  // namespace sepenum
