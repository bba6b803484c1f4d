#include <set>
#include <string>

#include "doctest.h"
#include "pcs/factor.hpp"
#include "pcs/families.hpp"
#include "pcs/tutte.hpp"
#include "pcs/verify.hpp"

using namespace pcs;

namespace {

void check_instance(const FamilyInstance& inst) {
  CAPTURE(inst.family);
  for (const auto& rep : verify_instance(inst)) {
    CAPTURE(rep.to_line());
    CHECK(rep.holds());
  }
  CHECK(inst.names.size() == inst.graph.vertex_count());
  std::set<std::string> labels;
  std::set<Vertex> indices;
  for (const auto& [name, v] : inst.names) {
    labels.insert(name);
    indices.insert(v);
  }
  CHECK(labels.size() == inst.names.size());
  CHECK(indices.size() == inst.names.size());
  CHECK(inst.w.size() % 2 == 0);
  if (inst.witness) {
    const DegreeSpec f = degree_spec_from_terminals(inst.graph, inst.w);
    CHECK(delta(inst.graph, f, inst.witness->s, inst.witness->t) == inst.witness->expected_delta);
    CHECK(inst.witness->expected_delta < 0);
    CHECK_FALSE(solve(inst.graph, inst.w).has_value());
  }
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("odd-degree counterexample") {
    const FamilyInstance inst = gen_prop1_odd(5, 6);
    CHECK(inst.graph.vertex_count() == 132);
    CHECK(inst.claims.lambda_exact == std::size_t{4});
    check_instance(inst);
  }

  TEST_CASE("even-degree counterexamples for both residues") {
    check_instance(gen_prop1_even(6, 6));
    check_instance(gen_prop1_even(8, 8));
  }

  TEST_CASE("bipartite instance contains a star") {
    const FamilyInstance inst = gen_prop1_bipartite(4, 8);
    CHECK_FALSE(inst.claims.star_free);
    CHECK(bipartition(inst.graph).has_value());
    CHECK(find_induced_star(inst.graph, 4).has_value());
    check_instance(inst);
  }

  TEST_CASE("degree-four apex construction") {
    const FamilyInstance inst = gen_prop2_r4(6);
    CHECK(inst.graph.vertex_count() == 60);
    CHECK(terminal_load(inst.graph, inst.w).max_load == 2);
    check_instance(inst);
  }

  TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(gen_prop1_odd(4, 6), FamilyError);
    CHECK_THROWS_AS(gen_prop1_odd(5, 5), FamilyError);
    CHECK_THROWS_AS(gen_prop1_even(4, 4), FamilyError);
    CHECK_THROWS_AS(gen_prop1_even(8, 7), FamilyError);
    CHECK_THROWS_AS(gen_prop1_bipartite(4, 7), FamilyError);
    CHECK_THROWS_AS(gen_prop2_r4(5), FamilyError);
    CHECK_THROWS_AS(gen_prop2_general(6, 49), FamilyError);
    CHECK_THROWS_AS(gen_prop2_general(5, 40), FamilyError);
    CHECK_THROWS_AS(gen_prop2_r5(92), FamilyError);
    CHECK_THROWS_AS(gen_prop2_r5(98), FamilyError);
  }

  TEST_CASE("random valid instances are reproducible and valid") {
    for (int r = 4; r <= 6; ++r) {
      const FamilyInstance a = random_valid_instance(r, 24, 99);
      const FamilyInstance b = random_valid_instance(r, 24, 99);
      CHECK(a.graph == b.graph);
      CHECK(a.w == b.w);
      check_instance(a);
      CHECK(solve(a.graph, a.w).has_value());
    }
  }
}
