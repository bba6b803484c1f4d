#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pcs/io.hpp"

using namespace pcs;
using namespace pcs::testing;

TEST_SUITE("io") {
  TEST_CASE("parse a commented graph file") {
    const Graph g = parse_graph("c triangle\np 3 3\ne 0 1\nc mid\ne 1 2\ne 0 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
  }

  TEST_CASE("serialization is canonical and round-trips") {
    const Graph g = parse_graph("p 4 3\ne 2 3\ne 0 1\ne 1 2\n");
    CHECK(serialize_graph(g) == "p 4 3\ne 0 1\ne 1 2\ne 2 3\n");
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const Graph h = random_graph(1 + rng() % 12, 0.4, rng);
      CHECK(parse_graph(serialize_graph(h)) == h);
    }
  }

  TEST_CASE("malformed graph files carry a line number") {
    const char* bad[] = {
        "e 0 1\np 2 1\n",         // edge before header
        "p 2 1\ne 0 2\n",         // out of range
        "p 2 1\ne 1 1\n",         // loop
        "p 3 2\ne 0 1\ne 1 0\n",  // duplicate
        "p 3 2\ne 0 1\n",         // too few edges
        "p 2 1\ne 0 1\ne 0 1\n",  // too many
        "p 2 1\nx 0 1\n",         // junk
        "p 2 1\np 2 1\ne 0 1\n",  // second header
        "p -1 0\n",               // negative
        "",                       // empty
    };
    for (const char* text : bad) {
      CAPTURE(text);
      CHECK_THROWS_AS(parse_graph(text), ParseError);
    }
    try {
      parse_graph("p 2 1\ne 0 1\nzzz\n");
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }

  TEST_CASE("terminal files") {
    CHECK(parse_terminals("3 1\n", 4) == VertexSet{1, 3});
    CHECK(parse_terminals("", 4).empty());
    CHECK_THROWS_AS(parse_terminals("1 5", 4), ParseError);
    CHECK_THROWS_AS(parse_terminals("1 1", 4), ParseError);
    CHECK(parse_terminals(serialize_terminals(VertexSet{0, 2, 7}), 8) == VertexSet{0, 2, 7});
  }

  TEST_CASE("vertex lists on the command line") {
    CHECK(parse_vertex_list("").empty());
    CHECK(parse_vertex_list("3,1,2") == VertexSet{1, 2, 3});
    CHECK_THROWS_AS(parse_vertex_list("1,x"), ParseError);
    CHECK_THROWS_AS(parse_vertex_list("1,1"), ParseError);
  }

  TEST_CASE("name maps round-trip") {
    const NameMap names{{"x_0", 0}, {"H_1:v_2", 5}};
    CHECK(parse_names(serialize_names(names)) == names);
    CHECK_THROWS_AS(parse_names("x 0\n"), ParseError);
  }
}
