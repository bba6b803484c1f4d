#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pcs/graph.hpp"

using namespace pcs;
using namespace pcs::testing;

TEST_SUITE("graph") {
  TEST_CASE("vertex sets are sorted and reject duplicates") {
    const VertexSet s{4, 1, 3};
    CHECK(s.size() == 3);
    CHECK(s[0] == 1);
    CHECK(s[2] == 4);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK_THROWS_AS(VertexSet({1, 1}), GraphError);
    CHECK_THROWS_AS(VertexSet({1, 5}).indicator(3), GraphError);
    CHECK(set_union(VertexSet{0, 2}, VertexSet{1}) == VertexSet{0, 1, 2});
    CHECK(disjoint(VertexSet{0, 2}, VertexSet{1, 3}));
    CHECK_FALSE(disjoint(VertexSet{0, 2}, VertexSet{2}));
  }

  TEST_CASE("graph construction rejects loops, duplicates and bad endpoints") {
    CHECK_THROWS_AS(Graph(3, {Edge{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {Edge{0, 1}, Edge{0, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {Edge{0, 3}}), GraphError);
  }

  TEST_CASE("edges are canonical and neighbour lists sorted") {
    const Graph g(4, {Edge{2, 3}, Edge{0, 2}, Edge{0, 1}});
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[2] == Edge{2, 3});
    const auto nb = g.neighbors(0);
    REQUIRE(nb.size() == 2);
    CHECK(nb[0] == 1);
    CHECK(nb[1] == 2);
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.max_degree() == 2);
    CHECK(g.min_degree() == 1);
  }

  TEST_CASE("components after removal on a path") {
    const Graph g = path_graph(5);
    const auto parts = components_after_removal(g, VertexSet{2});
    REQUIRE(parts.blocks.size() == 2);
    CHECK(parts.blocks[0] == VertexSet{0, 1});
    CHECK(parts.blocks[1] == VertexSet{3, 4});
    CHECK(is_connected(g));
    CHECK_FALSE(is_connected(remove_edges(g, std::vector<Edge>{Edge{1, 2}})));
  }

  TEST_CASE("component count agrees with an independent search") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
      const std::size_t n = 2 + rng() % 10;
      const Graph g = random_graph(n, 0.3, rng);
      std::vector<Vertex> removed;
      for (std::size_t v = 0; v < n; ++v) {
        if (rng() % 3 == 0) removed.push_back(static_cast<Vertex>(v));
      }
      const VertexSet s(removed);
      const auto parts = components_after_removal(g, s);
      CHECK(parts.blocks.size() == naive_component_count(g, s));
      std::size_t covered = 0;
      for (const auto& b : parts.blocks) covered += b.size();
      CHECK(covered + s.size() == n);
    }
  }

  TEST_CASE("distances on a cycle") {
    const Graph g = cycle_graph(6);
    CHECK(distance(g, 0, 3) == std::size_t{3});
    CHECK(distance(g, 0, 5) == std::size_t{1});
    const Graph h(3, {Edge{0, 1}});
    CHECK_FALSE(distance(h, 0, 2).has_value());
    const auto d = distances_from(g, 0);
    CHECK(d[4] == std::size_t{2});
  }

  TEST_CASE("edge counts between sets") {
    const Graph g = complete_graph(4);
    CHECK(edge_count_between(g, VertexSet{0}, VertexSet{1, 2, 3}) == 3);
    CHECK(edge_count_between(g, VertexSet{0, 1}, VertexSet{2, 3}) == 4);
    CHECK_THROWS_AS(edge_count_between(g, VertexSet{0, 1}, VertexSet{1}), GraphError);
  }

  TEST_CASE("relabelling preserves the edge multiset") {
    const Graph g = petersen_graph();
    const std::vector<Vertex> perm{9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
    const Graph h = relabel(g, perm);
    CHECK(h.edge_count() == g.edge_count());
    for (const Edge& e : g.edges()) CHECK(h.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
    CHECK(relabel(h, perm) == g);
  }
}
