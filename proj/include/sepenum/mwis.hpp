#pragma once

#include <vector>

#include "sepenum/graph.hpp"
#include "sepenum/separators.hpp"
#include "sepenum/weights.hpp"

namespace sepenum {

struct MwisResult {
  VertexSet set;
  Weight weight;
};

/// Among maximum-weight independent sets, every solver returns the one that
/// contains the smallest vertex of its symmetric difference with any other
/// optimum (the lexicographically least one when all weights are positive).

constexpr int kBruteMwisLimit = 24;

/// Branch and bound. Throws SizeGuardError when n > 24.
MwisResult brute_force_mwis(const WeightedGraph& wg);

/// (a) no component of g - k is full for k, and (b) each non-adjacent pair
/// of k has a component of g - k adjacent to both.
bool is_pmc(const Graph& g, const VertexSet& k);

/// Incremental construction over a connected vertex order, one vertex at a
/// time. `seps` must hold every minimal separator of g. Sorted output.
std::vector<VertexSet> enumerate_pmcs(const Graph& g, const SeparatorSet& seps);

/// All subsets filtered by is_pmc. Throws SizeGuardError when n > 20.
std::vector<VertexSet> enumerate_pmcs_exhaustive(const Graph& g);

/// Dynamic program over blocks (N(D), D) and the PMCs inside them. Throws
/// IntegrityError when the separator or PMC lists are incomplete.
MwisResult mwis_via_pmc(const WeightedGraph& wg, const std::vector<VertexSet>& pmcs,
                        const SeparatorSet& seps);

/// Separators from the class-C enumerator, then PMCs, then the DP.
MwisResult mwis_classC(const WeightedGraph& wg, int jobs = 1);

}  // namespace sepenum
