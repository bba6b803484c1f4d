#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcs/graph.hpp"
#include "pcs/matching.hpp"

namespace pcs {

/// Target degree f(v) for every vertex.
class DegreeSpec {
 public:
  DegreeSpec() = default;
  /// Throws GraphError on negative targets.
  explicit DegreeSpec(std::vector<int> targets);

  int operator[](Vertex v) const { return targets_[static_cast<std::size_t>(v)]; }
  std::size_t size() const { return targets_.size(); }
  long long total() const;
  long long total(const VertexSet& s) const;
  const std::vector<int>& targets() const { return targets_; }

  friend bool operator==(const DegreeSpec&, const DegreeSpec&) = default;

 private:
  std::vector<int> targets_;
};

/// f = 1 on the terminals and 2 elsewhere. Requires |w| even and w within the graph.
DegreeSpec degree_spec_from_terminals(const Graph& g, const VertexSet& w);

/// Gadget vertex standing for one end of an original edge.
struct PortOrigin {
  Edge edge;
  Vertex endpoint;
};
/// Gadget vertex absorbing one unit of degree slack at an original vertex.
struct CoreOrigin {
  Vertex vertex;
  std::size_t slot;
};
using GadgetOrigin = std::variant<PortOrigin, CoreOrigin>;

/// Tutte's reduction of an f-factor instance to perfect matching.
///
/// Every original vertex v contributes deg(v) ports (one per incident edge)
/// and deg(v) - f(v) cores, with all ports of v joined to all cores of v. Each
/// original edge {u,v} becomes a single edge between u's port and v's port.
/// A perfect matching then uses exactly f(v) port-port edges at every v.
struct GadgetGraph {
  Graph graph;
  std::vector<GadgetOrigin> origin;
  std::vector<Edge> original_edges;
  /// For original edge i: {port at original_edges[i].u, port at original_edges[i].v}.
  std::vector<std::array<Vertex, 2>> edge_ports;
  /// Cores of v are first_core[v], ..., first_core[v] + core_count[v] - 1.
  std::vector<Vertex> first_core;
  std::vector<std::size_t> core_count;
  DegreeSpec spec;
};

/// Throws GraphError when f(v) > deg(v) for some v.
GadgetGraph build_gadget(const Graph& g, const DegreeSpec& f);

/// Edge subset of the original graph with the vertex count it spans.
struct FFactor {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  std::vector<int> degrees() const;
};

bool is_f_factor(const Graph& g, const DegreeSpec& f, const FFactor& factor);

/// Reads the factor off a perfect gadget matching. Throws if the matching is not perfect.
FFactor extract_f_factor(const GadgetGraph& gg, const Matching& m);

/// Reverse map: matches the factor's port pairs, then pairs each leftover
/// port of v with the cores of v in index order.
Matching matching_from_factor(const GadgetGraph& gg, const FFactor& factor);

struct PathCycleSystem {
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::vector<Vertex>> cycles;

  friend bool operator==(const PathCycleSystem&, const PathCycleSystem&) = default;
};

/// Splits a factor with degree 1 on w and 2 elsewhere into its paths and
/// cycles, in canonical form: paths start at their smaller end, cycles start
/// at their minimum vertex heading to its smaller neighbour, both sorted by
/// first vertex. Throws std::logic_error when the degree condition fails.
PathCycleSystem decompose_system(const FFactor& factor, const VertexSet& w);

/// Empty when `system` is a spanning path-cycle system of g for w; otherwise
/// a description of the first defect found.
std::optional<std::string> validate_system(const Graph& g, const VertexSet& w, const PathCycleSystem& system);

/// f-factor via the gadget and maximum matching, after the parity and
/// degree pre-screens. Empty means no f-factor exists.
std::optional<FFactor> solve_f_factor(const Graph& g, const DegreeSpec& f);

/// Spanning path-cycle system with end-vertex set w, or empty when none exists.
/// Throws GraphError for odd |w| or terminals outside the graph.
std::optional<PathCycleSystem> solve(const Graph& g, const VertexSet& w);

struct BruteForceOptions {
  std::size_t max_edges = 24;
};

/// Exhaustive backtracking over edge subsets, vertex by vertex with degree
/// pruning. Throws ScaleLimitExceeded when the graph has more than
/// options.max_edges edges.
std::optional<FFactor> brute_force_f_factor(const Graph& g, const DegreeSpec& f, BruteForceOptions options = {});

/// "path: ..." lines, then "cycle: ..." lines; "INFEASIBLE" for no system.
std::string serialize_system(const std::optional<PathCycleSystem>& system);
std::optional<PathCycleSystem> parse_system(std::string_view text);

}  // namespace pcs
