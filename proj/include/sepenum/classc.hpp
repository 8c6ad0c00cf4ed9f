#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sepenum/graph.hpp"
#include "sepenum/holes.hpp"
#include "sepenum/separators.hpp"

namespace sepenum {

enum class Variant { LL, LR };

const char* to_string(Variant v);

/// State of one branch of the enumeration once the clique/disjointness
/// check has passed.
struct CHoleContext {
  VertexSet C;  // {c1, c2} + heavy + majors
  Vertex c1 = -1, c2 = -1;
  Vertex l1 = -1, r1 = -1, l2 = -1, r2 = -1;
  Hole hole;  // c1 r1 H_R r2 c2 l2 H_L l1 (not canonical)
  Path hl, hr;
  VertexSet L1, R1, L2, R2, C1, C2;
  VertexSet heavy, majors;
};

/// v outside {c1, c2} such that c1 and c2 fall in different components of
/// g - (N[v] - {c1, c2}).
VertexSet step3_heavy_closure(const Graph& g, Vertex c1, Vertex c2);

struct CleanHole {
  Hole hole;
  Path hl, hr;
};

/// Shortest l1-l2 and r1-r2 paths avoiding (C u N(c1) u N(c2)) minus the
/// tuple; nullopt when either path is missing or the closed walk is not a
/// hole.
std::optional<CleanHole> step4_clean_hole(const Graph& g, const VertexSet& C, Vertex c1,
                                          Vertex c2, Vertex l1, Vertex r1, Vertex l2, Vertex r2);

struct ClasscStats {
  std::uint64_t pairs = 0;            // ordered non-adjacent pairs
  std::uint64_t tuples = 0;           // 4-tuples surviving the heavy-vertex test
  std::uint64_t discard_hole = 0;     // no clean hole
  std::uint64_t discard_cliques = 0;  // cliques not disjoint
  std::uint64_t leaves = 0;           // (c1', c2') branches, per variant
  std::uint64_t rejected = 0;         // failed the final proper-separator test
  std::uint64_t emitted = 0;          // accepted leaves before deduplication

  ClasscStats& operator+=(const ClasscStats& o);
};

/// Leaf of the (c1', c2') loop.
struct LeafEvent {
  Variant variant;
  Vertex c1p = -1, c2p = -1;
  VertexSet after_closure;  // C after the two monotone closures
  // vertices added by the two path steps, each with the path Q found
  std::vector<Path> paths_first, paths_second;
  VertexSet final_set;
  bool kept = false;
};

/// Hooks for instrumented runs. Calls are serialised when jobs > 1.
class ClasscObserver {
 public:
  virtual ~ClasscObserver() = default;
  virtual void on_context(const CHoleContext&) {}
  virtual void on_leaf(const CHoleContext&, const LeafEvent&) {}
};

struct ClasscOptions {
  int jobs = 1;
  bool run_ll = true;
  bool run_lr = true;
  ClasscObserver* observer = nullptr;
};

struct ClasscResult {
  SeparatorSet separators;
  ClasscStats stats;
};

/// Runs the enumeration for the selected variants (shared tuple and context stages).
/// Every output is a proper separator of g.
ClasscResult run_classc(const Graph& g, const ClasscOptions& opts = {});

SeparatorSet run_A(const Graph& g, Variant variant, int jobs = 1);

/// Proper separators from both variants plus the clique minimal
/// separators. Equal to the set of all minimal separators when g is in the
/// class. Throws std::logic_error if the output exceeds n^8 sets.
ClasscResult enumerate_all_minimal_separators_classC(const Graph& g, const ClasscOptions& opts = {});

}  // namespace sepenum
