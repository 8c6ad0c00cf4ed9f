#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sepenum/graph.hpp"

namespace sepenum {

/// Cycle 0-1-...-(n-1)-0. n >= 3.
Graph gen_cycle(int n);

/// Cliques a_i = i-1 and b_i = k+i-1 (i = 1..k) plus the matching a_i b_i.
Graph gen_k_prism(int k);

/// a = 0, b = 1 and k paths a - p_i - q_i - b with p_i = 2i, q_i = 2i+1.
Graph gen_k_theta(int k);

/// Apex a = 0, clique b_i = i, middle vertices m_i = k+i, paths a - m_i - b_i.
Graph gen_k_pyramid(int k);

/// Hole formed by two u-v paths P1, P2 with k adjacent pairs (x_j, y_j).
/// x_j sees exactly three vertices of P1, spaced three apart, and none of
/// P2; y_j is its mirror image on P2. See docs/generators.md.
Graph gen_k_turtle(int k);

/// Chain of k triangles (p_i, q_i, s_i) linked q_i - y_i - p_{i+1}, a
/// bottom path b_1..b_k and rungs s_i - m_i - b_i. Maximum degree 3; every
/// hole has length 4d+5. See docs/generators.md.
Graph gen_k_ladder(int k);

/// Four k-cliques X, Y, X', Y' and a vertex z. Ids: x_i = i-1, y_i = k+i-1,
/// x'_i = 2k+i-1, y'_i = 3k+i-1, z = 4k.
Graph gen_Gk(int k);

/// Random chordal graph: G(n, p) filled in along a random elimination
/// order, components then joined by single edges. Deterministic per seed.
Graph gen_random_chordal(int n, double density, std::uint64_t seed);

/// Cycle of length n where `clones` random positions receive a clone (a
/// vertex adjacent to the position and its two cycle neighbours). Clones of
/// the same position are pairwise adjacent.
Graph gen_cycle_with_clones(int n, int clones, std::uint64_t seed);

/// Named vertex groups of a generated family, used for sidecar metadata.
using VertexGroups = std::vector<std::pair<std::string, std::vector<Vertex>>>;

struct GeneratedGraph {
  Graph graph;
  VertexGroups groups;
};

/// Dispatch by family name: cycle, kprism, ktheta, kpyramid, kturtle,
/// kladder, gk, chordal. Throws std::invalid_argument on a bad family or
/// parameter.
GeneratedGraph generate(const std::string& family, int k, int n, std::uint64_t seed,
                        double density = 0.3);

/// Vertex set partitioned into a clique K and an induced path P in which
/// every path vertex has at most one neighbour in K.
struct CliquePathPartition {
  Graph graph;
  std::vector<Vertex> clique;
  std::vector<Vertex> path;

  /// Throws std::invalid_argument when the partition is malformed.
  void validate() const;
};

/// Repeatedly replaces b' by x p1 ... p7 y with edges b p1, b p4, b p7
/// while a qualifying (a, b, c, a', b', c') exists. b' keeps its id as p1;
/// p2..p7 get fresh ids. Throws std::invalid_argument on a malformed input.
CliquePathPartition pyramid_surgery(const CliquePathPartition& in);

}  // namespace sepenum
