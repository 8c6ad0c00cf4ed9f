#pragma once

#include <optional>
#include <vector>

#include "sepenum/graph.hpp"
#include "sepenum/holes.hpp"

namespace sepenum {

enum class HoleRelation { no_neighbor, pending, cap, clone, major, irregular };

const char* to_string(HoleRelation r);

struct HoleRelativeClass {
  HoleRelation tag;
  Vertex center = -1;  // set for clone
  VertexSet neighbors;  // N_H(u)
};

/// N_H(u) for u outside the hole.
VertexSet hole_neighbors(const Graph& g, const Hole& h, Vertex u);

/// True when s (a subset of V(h)) fits inside some 3-vertex path of h.
bool inside_three_path(const Hole& h, const VertexSet& s);

/// Throws std::invalid_argument when u lies on h. `irregular` covers the
/// minor neighbourhoods that match no named tag (two vertices at distance
/// two on the hole).
HoleRelativeClass classify(const Graph& g, const Hole& h, Vertex u);

bool is_major(const Graph& g, const Hole& h, Vertex u);

/// u-sectors in hole order, starting at the first neighbour of u along the
/// canonical cycle. Throws std::invalid_argument when |N_H(u)| < 2.
std::vector<Path> sectors(const Graph& g, const Hole& h, Vertex u);

/// Whether some two distinct hole vertices a, b split h into two (a,b)-paths
/// holding N_H(u) and N_H(v) respectively.
bool are_nested(const Graph& g, const Hole& h, Vertex u, Vertex v);

/// y together with its clones w.r.t. h.
VertexSet clones_of(const Graph& g, const Hole& h, Vertex y);

struct DecompositionCheck {
  bool ok = true;
  VertexSet failing_component;  // empty when ok
};

/// For every component D of g - N[w], looks for a w-sector x..y with
/// N(D) inside {x, y} plus the neighbours of w off the hole.
/// Throws std::invalid_argument if w is not major w.r.t. h.
DecompositionCheck check_decomposition(const Graph& g, const Hole& h, Vertex w);

}  // namespace sepenum
