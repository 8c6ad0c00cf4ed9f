#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepenum/graph.hpp"

namespace sepenum {

/// Exact non-negative vertex weight.
using Weight = boost::multiprecision::cpp_rational;

struct WeightedGraph {
  Graph graph;
  std::vector<Weight> weights;

  /// Unit weights.
  explicit WeightedGraph(Graph g);
  /// Throws std::invalid_argument on a length mismatch or a negative weight.
  WeightedGraph(Graph g, std::vector<Weight> w);

  Weight total(const VertexSet& s) const;
};

/// Weights rescaled to integers over a common denominator, so optimality
/// comparisons run on machine integers without losing exactness.
struct ScaledWeights {
  std::vector<std::int64_t> value;
  boost::multiprecision::cpp_int denominator;

  /// Throws std::overflow_error when the total weight does not fit in int64.
  explicit ScaledWeights(const std::vector<Weight>& weights);
  Weight unscale(std::int64_t v) const;
};

/// "7", "5/2", "2.5" → exact rational. Throws std::invalid_argument.
Weight parse_weight(const std::string& text);
/// Integer form when the denominator is 1, "p/q" otherwise.
std::string format_weight(const Weight& w);

}  // namespace sepenum
