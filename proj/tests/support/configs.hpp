#pragma once

// Brute-force configuration recognition for small graphs. A vertex subset S
// induces a theta, pyramid or prism exactly when its degree pattern and the
// routes between its branch vertices have the right shape, so every subset
// can be classified without any path search.

#include <array>
#include <optional>

#include "oracles.hpp"

namespace oracle {

enum class Shape { none, theta, pyramid, prism };

struct Induced {
  const Mat& g;
  Mask s;
  int deg(int v) const {
    int d = 0;
    for (int w = 0; w < g.n; ++w)
      if ((s & bit(w)) && g.a[v][w]) ++d;
    return d;
  }
  // Walk from branch vertex x through its neighbour y along degree-2 vertices;
  // returns the branch vertex reached.
  int route(int x, int y) const {
    int prev = x, cur = y;
    while (deg(cur) == 2) {
      int nxt = -1;
      for (int w = 0; w < g.n; ++w)
        if ((s & bit(w)) && g.a[cur][w] && w != prev) nxt = w;
      prev = cur;
      cur = nxt;
    }
    return cur;
  }
  std::vector<int> nbrs(int v) const {
    std::vector<int> out;
    for (int w = 0; w < g.n; ++w)
      if ((s & bit(w)) && g.a[v][w]) out.push_back(w);
    return out;
  }
};

inline bool connected(const Mat& g, Mask s) {
  Mask all = (g.n == 32) ? ~Mask{0} : ((Mask{1} << g.n) - 1);
  auto l = components(g, all & ~s);
  int first = -1;
  for (int v : members(s)) {
    if (first < 0) first = l[v];
    if (l[v] != first) return false;
  }
  return true;
}

inline Shape shape_of(const Mat& g, Mask s) {
  Induced in{g, s};
  std::vector<int> branch;
  for (int v : members(s)) {
    int d = in.deg(v);
    if (d == 3)
      branch.push_back(v);
    else if (d != 2)
      return Shape::none;
  }
  if (!connected(g, s)) return Shape::none;

  if (branch.size() == 2) {
    int a = branch[0], b = branch[1];
    if (g.a[a][b]) return Shape::none;
    for (int y : in.nbrs(a))
      if (in.route(a, y) != b) return Shape::none;
    return Shape::theta;
  }

  if (branch.size() == 4) {
    for (int apex : branch) {
      std::vector<int> t;
      for (int v : branch)
        if (v != apex) t.push_back(v);
      if (!is_clique(g, t)) continue;
      int direct = 0;
      bool ok = true;
      for (int b : t) {
        if (g.a[apex][b]) ++direct;
        for (int y : in.nbrs(b)) {
          if (y == t[0] || y == t[1] || y == t[2]) continue;
          if (in.route(b, y) != apex) ok = false;
        }
      }
      if (ok && direct <= 1) return Shape::pyramid;
    }
    return Shape::none;
  }

  if (branch.size() == 6) {
    // split into two triangles, each branch vertex routed to the other one
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
          std::vector<int> t1{branch[i], branch[j], branch[k]}, t2;
          for (int v : branch)
            if (v != t1[0] && v != t1[1] && v != t1[2]) t2.push_back(v);
          if (t1[0] != branch[0]) continue;
          if (!is_clique(g, t1) || !is_clique(g, t2)) continue;
          auto in_t2 = [&](int v) { return v == t2[0] || v == t2[1] || v == t2[2]; };
          bool ok = true;
          Mask hit = 0;
          for (int a : t1)
            for (int y : in.nbrs(a)) {
              if (y == t1[0] || y == t1[1] || y == t1[2]) continue;
              int end = in.route(a, y);
              if (!in_t2(end)) ok = false;
              hit |= bit(end);
            }
          if (ok && __builtin_popcount(hit) == 3) return Shape::prism;
        }
    return Shape::none;
  }
  return Shape::none;
}

struct ConfigPresence {
  bool theta = false, pyramid = false, prism = false;
  bool square = false, even_hole = false, wheel = false, even_wheel = false;
};

inline ConfigPresence config_presence(const Mat& g) {
  ConfigPresence p;
  for (Mask s = 1; s < (Mask{1} << g.n); ++s) {
    switch (shape_of(g, s)) {
      case Shape::theta: p.theta = true; break;
      case Shape::pyramid: p.pyramid = true; break;
      case Shape::prism: p.prism = true; break;
      case Shape::none: break;
    }
  }
  for (const auto& h : hole_vertex_sets(g)) {
    if (h.size() == 4) p.square = true;
    if (h.size() % 2 == 0) p.even_hole = true;
    Mask hm = 0;
    for (int v : h) hm |= bit(v);
    for (int c = 0; c < g.n; ++c) {
      if (hm & bit(c)) continue;
      int k = 0;
      for (int v : h) k += g.a[c][v] ? 1 : 0;
      if (k >= 3) p.wheel = true;
      if (k >= 3 && k % 2 == 0) p.even_wheel = true;
    }
  }
  return p;
}

inline bool in_class_C(const Mat& g) {
  auto p = config_presence(g);
  return !p.square && !p.theta && !p.pyramid && !p.prism && !p.even_wheel;
}

inline Mask mask_of(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

}  // namespace oracle
