#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sepenum/graph.hpp"

namespace sepenum {

struct SeparatorRecord {
  VertexSet set;
  std::pair<Vertex, Vertex> witness{-1, -1};
  std::vector<VertexSet> fulls;

  friend bool operator<(const SeparatorRecord& a, const SeparatorRecord& b) { return a.set < b.set; }
  friend bool operator==(const SeparatorRecord& a, const SeparatorRecord& b) {
    return a.set == b.set;
  }
};

using SeparatorSet = std::set<SeparatorRecord>;

/// Record iff g - c has at least two full components. The empty set is never
/// a minimal separator here.
std::optional<SeparatorRecord> is_minimal_separator(const Graph& g, const VertexSet& c);

/// Minimal and not a clique.
bool is_proper_separator(const Graph& g, const VertexSet& c);

/// Sorted plain sets of a record collection.
std::vector<VertexSet> sets_of(const SeparatorSet& seps);

/// Records for a collection of sets already known to be minimal separators.
SeparatorSet records_for(const Graph& g, const std::vector<VertexSet>& sets);

constexpr int kExhaustiveSeparatorLimit = 20;

/// Scans all 2^n subsets. Throws SizeGuardError when n > 20.
SeparatorSet oracle_separators_exhaustive(const Graph& g, int jobs = 1);

/// Closure from the neighbourhoods of components of g - N[v] under
/// S -> N(D) for the components D of g - (S u N(x)), x in S.
SeparatorSet oracle_separators_expansion(const Graph& g);

/// Exhaustive for small graphs, expansion otherwise.
SeparatorSet oracle_minimal_separators(const Graph& g);

/// Minimal separators that are cliques, from a minimal elimination ordering
/// (MCS-M): candidates are the madj sets, then filtered by definition.
SeparatorSet clique_minimal_separators(const Graph& g);

}  // namespace sepenum
