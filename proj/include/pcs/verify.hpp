#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcs/graph.hpp"

namespace pcs {

enum class Verdict { holds, fails, undecided };

struct WrongDegree {
  Vertex vertex;
  std::size_t degree;
};
struct EdgeCut {
  std::vector<Edge> edges;
};
struct InducedStar {
  Vertex center;
  VertexSet leaves;
};
struct ClosePair {
  Vertex a;
  Vertex b;
  std::size_t distance;
};
struct CrowdedVertex {
  Vertex vertex;
  VertexSet terminal_neighbors;
};
struct OddTerminalCount {
  std::size_t size;
};
struct Separator {
  VertexSet removed;
  std::size_t components;
};
struct ScaleLimit {
  std::string reason;
};

using Witness = std::variant<WrongDegree, EdgeCut, InducedStar, ClosePair, CrowdedVertex, OddTerminalCount,
                             Separator, ScaleLimit>;

std::string to_string(const Witness& w);

/// Outcome of a structural check. A failing report always carries a witness
/// that can be re-checked against the graph on its own.
struct PropertyReport {
  std::string name;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  std::string detail;

  bool holds() const { return verdict == Verdict::holds; }
  bool fails() const { return verdict == Verdict::fails; }
  /// "<name>: PASS" / "<name>: FAIL <witness>" / "<name>: UNDECIDED <reason>".
  std::string to_line() const;
};

PropertyReport check_regular(const Graph& g, std::size_t r);

struct EdgeConnectivity {
  std::size_t lambda = 0;
  /// A cut of size lambda; empty when the graph is already disconnected.
  std::vector<Edge> min_cut;
};

/// Global edge connectivity by unit-capacity max-flow from vertex 0 to every
/// other vertex. Graphs with fewer than two vertices report 0.
EdgeConnectivity edge_connectivity(const Graph& g);
PropertyReport check_edge_connectivity(const Graph& g, std::size_t k);

struct EssentialOptions {
  /// Largest number of base edge subsets (sizes 0..k-2) the search may visit.
  std::uint64_t max_candidate_sets = 5'000'000;
};

/// Holds iff deleting any k-1 or fewer edges leaves at most one component of
/// order at least two.
PropertyReport essential_edge_connectivity_at_least(const Graph& g, std::size_t k, EssentialOptions options = {});

/// Some vertex together with m pairwise non-adjacent neighbours, if any.
std::optional<InducedStar> find_induced_star(const Graph& g, std::size_t m);
PropertyReport check_star_free(const Graph& g, std::size_t m);

enum class TerminalMode { distance3, nbhd1 };

PropertyReport check_terminal_set(const Graph& g, const VertexSet& w, TerminalMode mode);

/// Largest |N(v) ∩ W| over all v, with a vertex attaining it.
struct TerminalLoad {
  std::size_t max_load = 0;
  std::optional<Vertex> vertex;
};
TerminalLoad terminal_load(const Graph& g, const VertexSet& w);

/// omega(G - S) <= |S| + 1 for every proper subset S (exhaustive, n <= max_vertices).
PropertyReport path_system_criterion(const Graph& g, std::size_t max_vertices = 18);

/// Proper two-colouring if one exists.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace pcs
