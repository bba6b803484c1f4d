#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcs {

using Vertex = std::int32_t;

/// Raised when a graph or vertex set would violate its structural invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to run past its configured size bound.
class ScaleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex indices.
///
/// Plays every set role of the constructions: separators, terminal sets,
/// component blocks, apex neighbourhoods.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts the input. Duplicates are rejected rather than merged.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  /// Membership bitmap of length n; throws if a member is out of range.
  std::vector<char> indicator(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on self-loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges in canonical (lexicographic, u < v) order.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted neighbour list.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool valid(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < vertex_count_; }
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Components of an induced subgraph, each block sorted, blocks ordered by
/// their smallest vertex.
struct ComponentPartition {
  std::vector<VertexSet> blocks;
};

/// Hop distance; std::nullopt means the vertices are in different components.
using Distance = std::optional<std::size_t>;

ComponentPartition components_after_removal(const Graph& g, const VertexSet& removed);
ComponentPartition connected_components(const Graph& g);
bool is_connected(const Graph& g);

Distance distance(const Graph& g, Vertex u, Vertex v);
/// BFS distances from a source; unreachable vertices are std::nullopt.
std::vector<Distance> distances_from(const Graph& g, Vertex source);

/// Number of edges with one end in a and the other in b. Throws when a and b overlap.
std::size_t edge_count_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Graph obtained by deleting the listed edges (vertex set unchanged).
Graph remove_edges(const Graph& g, std::span<const Edge> removed);

/// Applies a vertex relabelling: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace pcs
