#include "doctest.h"
#include "oracles.hpp"
#include "random_graphs.hpp"
#include "sepenum/errors.hpp"
#include "sepenum/generators.hpp"
#include "sepenum/separators.hpp"

using namespace sepenum;
using Lists = std::set<std::vector<int>>;

TEST_CASE("C5: opposite pairs are minimal separators, adjacent pairs are not") {
  Graph c5 = gen_cycle(5);
  auto r = is_minimal_separator(c5, VertexSet(5, {1, 3}));
  REQUIRE(r);
  CHECK(r->fulls.size() == 2);
  CHECK(r->witness == std::pair<Vertex, Vertex>{0, 2});
  CHECK_FALSE(is_minimal_separator(c5, VertexSet(5, {1, 2})));
  CHECK_FALSE(is_minimal_separator(c5, VertexSet(5)));
  CHECK(is_proper_separator(c5, VertexSet(5, {1, 3})));

  Lists expect{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
  CHECK(oracle::lists_of(oracle_separators_exhaustive(c5)) == expect);
  CHECK(oracle::lists_of(oracle_separators_expansion(c5)) == expect);
}

TEST_CASE("K4 minus an edge and P4") {
  // K4 - {0,3}
  Graph d = testgen::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(oracle::lists_of(oracle_separators_exhaustive(d)) == Lists{{1, 2}});
  CHECK_FALSE(is_proper_separator(d, VertexSet(4, {1, 2})));
  CHECK(oracle::lists_of(clique_minimal_separators(d)) == Lists{{1, 2}});

  Graph p4 = testgen::path(4);
  CHECK(oracle::lists_of(oracle_separators_exhaustive(p4)) == Lists{{1}, {2}});
  CHECK(oracle::lists_of(oracle_separators_expansion(p4)) == Lists{{1}, {2}});
  CHECK(oracle::lists_of(clique_minimal_separators(p4)) == Lists{{1}, {2}});

  CHECK(oracle_separators_exhaustive(testgen::complete(5)).empty());
  CHECK(oracle_separators_expansion(testgen::complete(5)).empty());
}

TEST_CASE("disconnected graphs: no empty separator, components handled separately") {
  Graph g = testgen::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  CHECK(oracle::lists_of(oracle_separators_exhaustive(g)) == Lists{{1}, {4}});
  CHECK(oracle::lists_of(oracle_separators_expansion(g)) == Lists{{1}, {4}});
  CHECK(oracle::lists_of(clique_minimal_separators(g)) == Lists{{1}, {4}});
}

TEST_CASE("exhaustive, expansion and the reference agree on random graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 5 + static_cast<int>(seed % 7);
    double p = 0.15 + 0.1 * static_cast<double>(seed % 5);
    Graph g = seed % 3 == 0 ? testgen::gnp(n, p, seed) : testgen::connected_gnp(n, p, seed);
    oracle::Mat m(g);
    Lists ref = oracle::minimal_separators(m);
    CAPTURE(seed);
    CHECK(oracle::lists_of(oracle_separators_exhaustive(g)) == ref);
    CHECK(oracle::lists_of(oracle_separators_exhaustive(g, 3)) == ref);
    CHECK(oracle::lists_of(oracle_separators_expansion(g)) == ref);
    CHECK(oracle::lists_of(oracle_minimal_separators(g)) == ref);
  }
}

TEST_CASE("every reported separator has two full components and a valid witness") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    Graph g = testgen::connected_gnp(11, 0.25, seed);
    for (const auto& r : oracle_separators_expansion(g)) {
      REQUIRE(r.fulls.size() >= 2);
      for (const auto& d : r.fulls) CHECK(g.neighborhood(d) == r.set);
      CHECK(r.fulls[0].contains(r.witness.first));
      CHECK(r.fulls[1].contains(r.witness.second));
      CHECK(oracle::is_minimal_separator(oracle::Mat(g), [&] {
        oracle::Mask k = 0;
        r.set.for_each([&](Vertex v) { k |= oracle::bit(v); });
        return k;
      }()));
    }
  }
}

TEST_CASE("clique minimal separators match the filtered reference") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 5 + static_cast<int>(seed % 8);
    Graph g = seed % 4 == 0 ? testgen::gnp(n, 0.3, seed) : testgen::connected_gnp(n, 0.3, seed);
    oracle::Mat m(g);
    Lists ref;
    for (const auto& s : oracle::minimal_separators(m))
      if (oracle::is_clique(m, s)) ref.insert(s);
    CAPTURE(seed);
    CHECK(oracle::lists_of(clique_minimal_separators(g)) == ref);
  }
  // chordal graphs: every minimal separator is a clique
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = gen_random_chordal(12, 0.3, seed);
    CHECK(oracle::lists_of(clique_minimal_separators(g)) ==
          oracle::lists_of(oracle_separators_expansion(g)));
  }
}

TEST_CASE("generated families have the expected separator counts") {
  // C_n: the n(n-3)/2 non-adjacent pairs
  for (int n = 4; n <= 9; ++n)
    CHECK(static_cast<int>(oracle_separators_expansion(gen_cycle(n)).size()) == n * (n - 3) / 2);
  // the k-prism and k-theta, compared against the reference
  for (int k = 3; k <= 4; ++k) {
    for (const Graph& g : {gen_k_prism(k), gen_k_theta(k), gen_k_pyramid(k)}) {
      if (g.order() > 16) continue;
      CHECK(oracle::lists_of(oracle_separators_expansion(g)) ==
            oracle::minimal_separators(oracle::Mat(g)));
    }
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(oracle_separators_exhaustive(gen_cycle(21)), SizeGuardError);
  CHECK_NOTHROW(oracle_minimal_separators(gen_cycle(21)));
}
