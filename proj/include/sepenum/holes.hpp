#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sepenum/graph.hpp"

namespace sepenum {

/// Induced cycle of length >= 4, stored in canonical form: it starts at its
/// smallest vertex and continues toward the smaller of that vertex's two
/// cycle neighbours.
struct Hole {
  std::vector<Vertex> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
  VertexSet vertex_set(int n) const { return VertexSet::from_range(n, cycle); }
  /// Position of v in cycle, or -1.
  int index_of(Vertex v) const;
  Vertex at(int i) const {
    int k = length();
    return cycle[static_cast<std::size_t>(((i % k) + k) % k)];
  }

  friend bool operator==(const Hole& a, const Hole& b) { return a.cycle == b.cycle; }
  friend bool operator<(const Hole& a, const Hole& b) { return a.cycle < b.cycle; }
};

/// Rotates/reflects a cyclic vertex sequence into canonical form.
Hole canonical_hole(std::vector<Vertex> cycle);

/// True when `cycle` lists >= 4 distinct vertices forming an induced cycle
/// in that order.
bool is_hole(const Graph& g, const std::vector<Vertex>& cycle);

/// Default number of search steps allowed for exhaustive hole enumeration.
/// Overridden by the SEPENUM_HOLE_BUDGET environment variable.
std::size_t default_hole_budget();

struct HoleEnumeration {
  std::vector<Hole> holes;  // canonical, sorted
  bool complete = true;     // false when the step budget ran out
};

/// Every hole of length <= max_len (0 = unlimited) exactly once.
HoleEnumeration enumerate_holes(const Graph& g, int max_len = 0,
                                std::size_t budget = default_hole_budget());

/// Streaming variant. The callback returns false to stop early. Returns
/// false when the budget ran out before the search finished.
bool for_each_hole(const Graph& g, int max_len, std::size_t budget,
                   const std::function<bool(const Hole&)>& visit);

}  // namespace sepenum
