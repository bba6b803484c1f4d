#include "pcs/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pcs {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw GraphError("vertex set contains a duplicate index");
  }
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::vector<char> VertexSet::indicator(std::size_t n) const {
  std::vector<char> in(n, 0);
  for (Vertex v : members_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw GraphError("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
    }
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : vertex_count_(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (!valid(e.u) || !valid(e.v)) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
    }
    edges_.push_back(Edge::make(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }

  std::vector<std::size_t> degree(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[static_cast<std::size_t>(e.u)]++] = e.v;
    adjacency_[fill[static_cast<std::size_t>(e.v)]++] = e.u;
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return std::span<const Vertex>(adjacency_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::size_t Graph::min_degree() const {
  if (vertex_count_ == 0) return 0;
  std::size_t best = offsets_[1];
  for (std::size_t v = 0; v < vertex_count_; ++v) best = std::min(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.valid(v)) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
  }
}

}  // namespace

ComponentPartition components_after_removal(const Graph& g, const VertexSet& removed) {
  check_members(g, removed);
  const std::size_t n = g.vertex_count();
  std::vector<char> seen = removed.indicator(n);
  ComponentPartition out;
  std::vector<Vertex> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> block;
    stack.push_back(static_cast<Vertex>(start));
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    out.blocks.emplace_back(std::move(block));
  }
  return out;
}

ComponentPartition connected_components(const Graph& g) { return components_after_removal(g, VertexSet{}); }

bool is_connected(const Graph& g) { return connected_components(g).blocks.size() <= 1; }

std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  if (!g.valid(source)) throw GraphError("vertex " + std::to_string(source) + " is not in the graph");
  std::vector<Distance> dist(g.vertex_count());
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    const std::size_t next = *dist[static_cast<std::size_t>(v)] + 1;
    for (Vertex u : g.neighbors(v)) {
      if (!dist[static_cast<std::size_t>(u)]) {
        dist[static_cast<std::size_t>(u)] = next;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid(v)) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
  return distances_from(g, u)[static_cast<std::size_t>(v)];
}

std::size_t edge_count_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_members(g, a);
  check_members(g, b);
  if (!disjoint(a, b)) throw GraphError("edge_count_between requires disjoint vertex sets");
  const std::vector<char> in_b = b.indicator(g.vertex_count());
  std::size_t count = 0;
  for (Vertex v : a) {
    for (Vertex u : g.neighbors(v)) count += in_b[static_cast<std::size_t>(u)] ? 1 : 0;
  }
  return count;
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> cut(removed.begin(), removed.end());
  for (Edge& e : cut) e = Edge::make(e.u, e.v);
  std::sort(cut.begin(), cut.end());
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  std::set_difference(g.edges().begin(), g.edges().end(), cut.begin(), cut.end(), std::back_inserter(kept));
  return Graph(g.vertex_count(), kept);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw GraphError("relabelling has the wrong length");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back(Edge::make(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
  }
  return Graph(g.vertex_count(), edges);
}

}  // namespace pcs
