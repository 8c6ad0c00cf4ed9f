#pragma once

// Test-side reference implementations. They work on plain adjacency
// matrices and bit masks and share no code with the library algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "sepenum/graph.hpp"
#include "sepenum/weights.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Mat {
  int n = 0;
  std::vector<std::vector<bool>> a;
  explicit Mat(const sepenum::Graph& g) : n(g.order()), a(n, std::vector<bool>(n, false)) {
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  }
  Mat(int n_, const std::vector<std::pair<int, int>>& edges) : n(n_), a(n, std::vector<bool>(n, false)) {
    for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
  }
};

inline Mask bit(int v) { return Mask{1} << v; }

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int v = 0; v < 32; ++v)
    if (m & bit(v)) out.push_back(v);
  return out;
}

// Component label per vertex of G - removed (-1 for removed vertices).
inline std::vector<int> components(const Mat& g, Mask removed) {
  std::vector<int> label(g.n, -1);
  int next = 0;
  for (int s = 0; s < g.n; ++s) {
    if ((removed & bit(s)) || label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < g.n; ++w)
        if (g.a[u][w] && !(removed & bit(w)) && label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

inline bool separates(const Mat& g, Mask c, int a, int b) {
  auto l = components(g, c);
  return l[a] >= 0 && l[b] >= 0 && l[a] != l[b];
}

// C is a minimal (a,b)-separator for some pair: it separates a from b and
// no C - {v} does.
inline bool is_minimal_separator(const Mat& g, Mask c) {
  if (c == 0) return false;
  // one representative per component of G - C is enough
  auto l = components(g, c);
  std::vector<int> reps;
  for (int v = 0; v < g.n; ++v)
    if (l[v] >= 0 && l[v] == static_cast<int>(reps.size())) reps.push_back(v);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      int a = reps[i], b = reps[j];
      bool minimal = true;
      for (int v : members(c))
        if (separates(g, c & ~bit(v), a, b)) {
          minimal = false;
          break;
        }
      if (minimal) return true;
    }
  return false;
}

inline std::set<std::vector<int>> minimal_separators(const Mat& g) {
  std::set<std::vector<int>> out;
  for (Mask c = 1; c < (Mask{1} << g.n); ++c)
    if (is_minimal_separator(g, c)) out.insert(members(c));
  return out;
}

inline bool is_clique(const Mat& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.a[s[i]][s[j]]) return false;
  return true;
}

// Vertex sets inducing a cycle of length >= 4 (connected, 2-regular).
inline std::set<std::vector<int>> hole_vertex_sets(const Mat& g, int max_len = 0) {
  std::set<std::vector<int>> out;
  for (Mask m = 1; m < (Mask{1} << g.n); ++m) {
    int k = __builtin_popcount(m);
    if (k < 4 || (max_len > 0 && k > max_len)) continue;
    auto vs = members(m);
    bool ok = true;
    for (int v : vs) {
      int d = 0;
      for (int w : vs) d += g.a[v][w] ? 1 : 0;
      if (d != 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    auto l = components(g, ~m & ((Mask{1} << g.n) - 1));
    for (int v : vs)
      if (l[v] != l[vs[0]]) ok = false;
    if (ok) out.insert(vs);
  }
  return out;
}

// Potential maximal clique predicate on masks.
inline bool is_pmc(const Mat& g, Mask k) {
  if (k == 0) return false;
  auto l = components(g, k);
  int comps = 0;
  for (int x : l) comps = std::max(comps, x + 1);
  std::vector<Mask> nb(comps, 0);
  for (int v = 0; v < g.n; ++v)
    if (l[v] >= 0)
      for (int w = 0; w < g.n; ++w)
        if (g.a[v][w] && (k & bit(w))) nb[l[v]] |= bit(w);
  for (Mask m : nb)
    if (m == k) return false;
  for (int x : members(k))
    for (int y : members(k)) {
      if (x >= y || g.a[x][y]) continue;
      bool seen = false;
      for (Mask m : nb)
        if ((m & bit(x)) && (m & bit(y))) seen = true;
      if (!seen) return false;
    }
  return true;
}

inline std::set<std::vector<int>> pmcs(const Mat& g) {
  std::set<std::vector<int>> out;
  for (Mask m = 1; m < (Mask{1} << g.n); ++m)
    if (is_pmc(g, m)) out.insert(members(m));
  return out;
}

// Exhaustive maximum weight independent set weight.
inline sepenum::Weight mwis_weight(const Mat& g, const std::vector<sepenum::Weight>& w) {
  sepenum::Weight best = 0;
  for (Mask m = 0; m < (Mask{1} << g.n); ++m) {
    auto vs = members(m);
    bool indep = true;
    for (std::size_t i = 0; i < vs.size() && indep; ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (g.a[vs[i]][vs[j]]) {
          indep = false;
          break;
        }
    if (!indep) continue;
    sepenum::Weight t = 0;
    for (int v : vs) t += w[v];
    if (t > best) best = t;
  }
  return best;
}

// Is there a k-semi-induced matching? Ordered tuples, no pruning tricks.
inline bool has_semi_induced_matching(const Mat& g, int k) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.a[u][v]) arcs.emplace_back(u, v);
  std::vector<std::pair<int, int>> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (std::size_t i = from; i < arcs.size(); ++i) {
      auto [x, y] = arcs[i];
      bool ok = true;
      for (auto [a, b] : chosen)
        if (a == x || a == y || b == x || b == y || g.a[x][b] || g.a[a][y]) ok = false;
      if (!ok) continue;
      chosen.push_back(arcs[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

inline std::vector<int> to_list(const sepenum::VertexSet& s) { return s.to_vector(); }

template <typename Records>
std::set<std::vector<int>> lists_of(const Records& recs) {
  std::set<std::vector<int>> out;
  for (const auto& r : recs) out.insert(r.set.to_vector());
  return out;
}

}  // namespace oracle
