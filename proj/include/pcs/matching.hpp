#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pcs/graph.hpp"

namespace pcs {

/// Matching stored as a mate array; mate[v] is empty for exposed vertices.
struct Matching {
  std::vector<std::optional<Vertex>> mate;

  std::size_t size() const;
  bool is_perfect() const;
  /// Matched pairs in canonical edge order.
  std::vector<Edge> pairs() const;
};

/// Every pair is a graph edge and no vertex is used twice.
bool is_valid_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching in a general graph: greedy start, then one
/// alternating-tree search per exposed vertex with blossoms shrunk through a
/// union-find over base vertices. Deterministic for a fixed graph.
Matching maximum_matching(const Graph& g);

}  // namespace pcs
