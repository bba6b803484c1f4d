#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pcs/matching.hpp"

using namespace pcs;
using namespace pcs::testing;

TEST_SUITE("matching") {
  TEST_CASE("small graphs") {
    CHECK(maximum_matching(Graph(0, {})).size() == 0);
    CHECK(maximum_matching(cycle_graph(5)).size() == 2);
    CHECK(maximum_matching(cycle_graph(6)).is_perfect());
    CHECK(maximum_matching(petersen_graph()).is_perfect());
    CHECK(maximum_matching(star_graph(5)).size() == 1);
  }

  TEST_CASE("blossom that the greedy start cannot fix") {
    // Triangle 0-1-2 with pendant paths 2-3 and 0-4-5.
    const Graph g(6, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{2, 3}, Edge{0, 4}, Edge{4, 5}});
    const Matching m = maximum_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.is_perfect());
  }

  TEST_CASE("maximum size agrees with exhaustive search") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 400; ++round) {
      const std::size_t n = 1 + rng() % 11;
      const double p = 0.15 + 0.1 * static_cast<double>(rng() % 6);
      const Graph g = random_graph(n, p, rng);
      if (g.edge_count() > 22) continue;
      const Matching m = maximum_matching(g);
      CHECK(is_valid_matching(g, m));
      CHECK(m.size() == brute_force_matching_size(g));
      CHECK(m.pairs().size() == m.size());
    }
  }

  TEST_CASE("deterministic for a fixed graph") {
    std::mt19937_64 rng(4);
    const Graph g = random_graph(40, 0.1, rng);
    CHECK(maximum_matching(g).mate == maximum_matching(g).mate);
  }

  TEST_CASE("invalid matchings are rejected") {
    const Graph g = path_graph(3);
    Matching m;
    m.mate = {Vertex{2}, std::nullopt, Vertex{0}};
    CHECK_FALSE(is_valid_matching(g, m));
    m.mate = {Vertex{1}, std::nullopt, std::nullopt};
    CHECK_FALSE(is_valid_matching(g, m));
  }
}
