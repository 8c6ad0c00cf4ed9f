#pragma once

#include <optional>
#include <vector>

#include "sepenum/graph.hpp"
#include "sepenum/separators.hpp"

namespace sepenum {

/// x_i y_i are edges, x_i y_j (i != j) are not; edges inside X or inside Y
/// are unrestricted.
struct SemiMatchingWitness {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
};

/// Backtracking over edges in increasing order, each edge tried in both
/// orientations. Throws std::invalid_argument when k < 1.
std::optional<SemiMatchingWitness> find_semi_induced_matching(const Graph& g, int k);

bool is_semi_induced_matching(const Graph& g, const SemiMatchingWitness& w);

/// For all X_A, X_B with 1 <= |X_A|, |X_B| <= k-1, keeps N(X_A) n N(X_B)
/// when it is a minimal separator. Complete on graphs without a
/// k-semi-induced matching. Throws std::invalid_argument when k < 2.
SeparatorSet enumerate_separators_semimatching(const Graph& g, int k, int jobs = 1);

}  // namespace sepenum
