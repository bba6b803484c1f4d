#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pcs/verify.hpp"

using namespace pcs;
using namespace pcs::testing;

namespace {

// Minimum edge cut over all vertex bipartitions.
std::size_t brute_lambda(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return 0;
  std::size_t best = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::size_t cut = 0;
    for (const Edge& e : g.edges()) cut += ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
    best = std::min(best, cut);
  }
  return best;
}

// Largest number of non-trivial components after deleting up to k-1 edges.
bool brute_essential(const Graph& g, std::size_t k) {
  const auto& es = g.edges();
  const std::size_t m = es.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > k - 1) continue;
    std::vector<Edge> gone;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) gone.push_back(es[i]);
    }
    const auto parts = connected_components(remove_edges(g, gone));
    std::size_t big = 0;
    for (const auto& b : parts.blocks) big += b.size() >= 2;
    if (big > 1) return false;
  }
  return true;
}

bool brute_star(const Graph& g, std::size_t m) {
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    const std::size_t d = nb.size();
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
      bool independent = true;
      for (std::size_t i = 0; i < d && independent; ++i) {
        for (std::size_t j = i + 1; j < d && independent; ++j) {
          if (((mask >> i) & 1u) && ((mask >> j) & 1u) && g.adjacent(nb[i], nb[j])) independent = false;
        }
      }
      if (independent) return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("regularity") {
    CHECK(check_regular(petersen_graph(), 3).holds());
    const auto rep = check_regular(path_graph(3), 2);
    CHECK(rep.fails());
    REQUIRE(rep.witness.has_value());
    CHECK(std::holds_alternative<WrongDegree>(*rep.witness));
    CHECK(rep.to_line().rfind("regular(2): FAIL", 0) == 0);
  }

  TEST_CASE("edge connectivity of standard graphs") {
    CHECK(edge_connectivity(petersen_graph()).lambda == 3);
    CHECK(edge_connectivity(complete_graph(5)).lambda == 4);
    CHECK(edge_connectivity(cycle_graph(7)).lambda == 2);
    CHECK(edge_connectivity(Graph(1, {})).lambda == 0);
    CHECK(edge_connectivity(Graph(2, {})).lambda == 0);
    const auto rep = check_edge_connectivity(path_graph(4), 2);
    CHECK(rep.fails());
    REQUIRE(rep.witness.has_value());
    const auto& cut = std::get<EdgeCut>(*rep.witness);
    CHECK(cut.edges.size() == 1);
    CHECK_FALSE(is_connected(remove_edges(path_graph(4), cut.edges)));
  }

  TEST_CASE("edge connectivity matches exhaustive cuts") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 150; ++round) {
      const Graph g = random_graph(2 + rng() % 9, 0.55, rng);
      const auto ec = edge_connectivity(g);
      CHECK(ec.lambda == brute_lambda(g));
      if (ec.lambda > 0) {
        CHECK(ec.min_cut.size() == ec.lambda);
        CHECK_FALSE(is_connected(remove_edges(g, ec.min_cut)));
      }
    }
  }

  TEST_CASE("essential edge connectivity matches exhaustive deletion") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 80; ++round) {
      const Graph g = random_graph(3 + rng() % 5, 0.6, rng);
      if (g.edge_count() > 16) continue;
      for (std::size_t k = 1; k <= 4; ++k) {
        const auto rep = essential_edge_connectivity_at_least(g, k);
        REQUIRE_FALSE(rep.verdict == Verdict::undecided);
        CHECK(rep.holds() == brute_essential(g, k));
      }
    }
  }

  TEST_CASE("essential edge connectivity reports undecided past its budget") {
    EssentialOptions tight;
    tight.max_candidate_sets = 3;
    const auto rep = essential_edge_connectivity_at_least(complete_graph(8), 5, tight);
    CHECK(rep.verdict == Verdict::undecided);
  }

  TEST_CASE("induced stars") {
    CHECK(find_induced_star(star_graph(3), 3).has_value());
    CHECK_FALSE(find_induced_star(complete_graph(6), 2).has_value());
    CHECK_FALSE(check_star_free(petersen_graph(), 3).holds());
    CHECK(check_star_free(petersen_graph(), 4).holds());
    std::mt19937_64 rng(9);
    for (int round = 0; round < 150; ++round) {
      const Graph g = random_graph(3 + rng() % 8, 0.5, rng);
      for (std::size_t m = 2; m <= 4; ++m) {
        const auto star = find_induced_star(g, m);
        CHECK(star.has_value() == brute_star(g, m));
        if (star) {
          CHECK(star->leaves.size() == m);
          CHECK(is_independent(g, star->leaves));
          for (Vertex l : star->leaves) CHECK(g.adjacent(star->center, l));
        }
      }
    }
  }

  TEST_CASE("terminal conditions") {
    const Graph g = cycle_graph(8);
    CHECK(check_terminal_set(g, VertexSet{0, 4}, TerminalMode::distance3).holds());
    CHECK(check_terminal_set(g, VertexSet{0, 2}, TerminalMode::distance3).fails());
    CHECK(check_terminal_set(g, VertexSet{0, 3}, TerminalMode::nbhd1).holds());
    const auto rep = check_terminal_set(g, VertexSet{0, 2}, TerminalMode::nbhd1);
    CHECK(rep.fails());
    REQUIRE(rep.witness.has_value());
    CHECK(std::get<CrowdedVertex>(*rep.witness).vertex == 1);
    CHECK(check_terminal_set(g, VertexSet{0, 2, 4}, TerminalMode::nbhd1).fails());
    const auto load = terminal_load(g, VertexSet{0, 2});
    CHECK(load.max_load == 2);
    CHECK(load.vertex == Vertex{1});
  }

  TEST_CASE("distance-3 terminals always satisfy the neighbourhood condition") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 200; ++round) {
      const Graph g = random_graph(4 + rng() % 8, 0.3, rng);
      const auto subsets = even_subsets(g.vertex_count());
      const VertexSet& w = subsets[rng() % subsets.size()];
      if (check_terminal_set(g, w, TerminalMode::distance3).holds()) {
        CHECK(check_terminal_set(g, w, TerminalMode::nbhd1).holds());
      }
    }
  }

  TEST_CASE("path system criterion") {
    CHECK(path_system_criterion(path_graph(5)).holds());
    CHECK(path_system_criterion(petersen_graph()).holds());
    const auto rep = path_system_criterion(star_graph(3));
    CHECK(rep.fails());
    REQUIRE(rep.witness.has_value());
    CHECK(std::get<Separator>(*rep.witness).components == 3);
    CHECK(path_system_criterion(cycle_graph(20), 18).verdict == Verdict::undecided);
  }

  TEST_CASE("bipartition and independence") {
    CHECK(bipartition(cycle_graph(6)).has_value());
    CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
    const auto col = bipartition(petersen_graph());
    CHECK_FALSE(col.has_value());
    CHECK(is_independent(cycle_graph(6), VertexSet{0, 2, 4}));
    CHECK_FALSE(is_independent(cycle_graph(6), VertexSet{0, 1}));
  }
}
