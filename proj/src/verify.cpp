#include "pcs/verify.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

namespace pcs {

namespace {

std::string join(std::span<const Vertex> vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string join_edges(const std::vector<Edge>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(es[i].u) + "-" + std::to_string(es[i].v);
  }
  return out;
}

PropertyReport pass(std::string name, std::string detail = {}) {
  return PropertyReport{std::move(name), Verdict::holds, std::nullopt, std::move(detail)};
}

PropertyReport fail(std::string name, Witness w, std::string detail = {}) {
  return PropertyReport{std::move(name), Verdict::fails, std::move(w), std::move(detail)};
}

PropertyReport undecided(std::string name, std::string reason) {
  return PropertyReport{std::move(name), Verdict::undecided, ScaleLimit{std::move(reason)}, {}};
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (value > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(value + 0.5L);
}

}  // namespace

std::string to_string(const Witness& w) {
  struct Visitor {
    std::string operator()(const WrongDegree& x) const {
      return "vertex " + std::to_string(x.vertex) + " has degree " + std::to_string(x.degree);
    }
    std::string operator()(const EdgeCut& x) const {
      return "cut [" + join_edges(x.edges) + "] (" + std::to_string(x.edges.size()) + " edges)";
    }
    std::string operator()(const InducedStar& x) const {
      return "center " + std::to_string(x.center) + " leaves " + join(x.leaves.members());
    }
    std::string operator()(const ClosePair& x) const {
      return "terminals " + std::to_string(x.a) + "," + std::to_string(x.b) + " at distance " +
             std::to_string(x.distance);
    }
    std::string operator()(const CrowdedVertex& x) const {
      return "vertex " + std::to_string(x.vertex) + " sees terminals " + join(x.terminal_neighbors.members());
    }
    std::string operator()(const OddTerminalCount& x) const {
      return "terminal set has odd size " + std::to_string(x.size);
    }
    std::string operator()(const Separator& x) const {
      return "S={" + join(x.removed.members()) + "} leaves " + std::to_string(x.components) + " components";
    }
    std::string operator()(const ScaleLimit& x) const { return x.reason; }
  };
  return std::visit(Visitor{}, w);
}

std::string PropertyReport::to_line() const {
  switch (verdict) {
    case Verdict::holds:
      return name + ": PASS";
    case Verdict::fails:
      return name + ": FAIL " + (witness ? to_string(*witness) : std::string("(no witness)"));
    case Verdict::undecided:
      return name + ": UNDECIDED " + (witness ? to_string(*witness) : std::string());
  }
  return name;
}

PropertyReport check_regular(const Graph& g, std::size_t r) {
  const std::string name = "regular(" + std::to_string(r) + ")";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(static_cast<Vertex>(v));
    if (d != r) return fail(name, WrongDegree{static_cast<Vertex>(v), d});
  }
  return pass(name);
}

namespace {

// Unit-capacity flow on an undirected graph. flow[e] in {-1, 0, 1}, positive
// meaning one unit from edges[e].u to edges[e].v.
class UnitFlow {
 public:
  explicit UnitFlow(const Graph& g) : g_(g), incident_(g.vertex_count()) {
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      incident_[static_cast<std::size_t>(edges[e].u)].push_back(e);
      incident_[static_cast<std::size_t>(edges[e].v)].push_back(e);
    }
  }

  // Max flow from s to t, stopping once it reaches `limit`.
  std::size_t run(Vertex s, Vertex t, std::size_t limit) {
    flow_.assign(g_.edge_count(), 0);
    std::size_t value = 0;
    while (value < limit && augment(s, t)) ++value;
    return value;
  }

  // Vertices reachable from s in the residual graph of the last run.
  std::vector<char> residual_side(Vertex s) {
    std::vector<char> seen(g_.vertex_count(), 0);
    std::vector<Vertex> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (std::size_t e : incident_[static_cast<std::size_t>(v)]) {
        Vertex u = g_.edges()[e].other(v);
        if (!seen[static_cast<std::size_t>(u)] && residual(e, v) > 0) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    return seen;
  }

 private:
  int residual(std::size_t e, Vertex from) const {
    return g_.edges()[e].u == from ? 1 - flow_[e] : 1 + flow_[e];
  }

  bool augment(Vertex s, Vertex t) {
    const std::size_t n = g_.vertex_count();
    std::vector<std::size_t> via(n, std::numeric_limits<std::size_t>::max());
    std::vector<char> seen(n, 0);
    std::deque<Vertex> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty() && !seen[static_cast<std::size_t>(t)]) {
      Vertex v = queue.front();
      queue.pop_front();
      for (std::size_t e : incident_[static_cast<std::size_t>(v)]) {
        Vertex u = g_.edges()[e].other(v);
        if (seen[static_cast<std::size_t>(u)] || residual(e, v) <= 0) continue;
        seen[static_cast<std::size_t>(u)] = 1;
        via[static_cast<std::size_t>(u)] = e;
        queue.push_back(u);
      }
    }
    if (!seen[static_cast<std::size_t>(t)]) return false;
    for (Vertex v = t; v != s;) {
      const std::size_t e = via[static_cast<std::size_t>(v)];
      const Edge& edge = g_.edges()[e];
      Vertex prev = edge.other(v);
      flow_[e] += edge.u == prev ? 1 : -1;
      v = prev;
    }
    return true;
  }

  const Graph& g_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<int> flow_;
};

std::vector<Edge> crossing_edges(const Graph& g, const std::vector<char>& side) {
  std::vector<Edge> cut;
  for (const Edge& e : g.edges()) {
    if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) cut.push_back(e);
  }
  return cut;
}

}  // namespace

EdgeConnectivity edge_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return {};
  if (!is_connected(g)) return {};

  // Start from the trivial cut around a minimum-degree vertex.
  Vertex min_vertex = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(static_cast<Vertex>(v)) < g.degree(min_vertex)) min_vertex = static_cast<Vertex>(v);
  }
  EdgeConnectivity best;
  best.lambda = g.degree(min_vertex);
  {
    std::vector<char> side(n, 0);
    side[static_cast<std::size_t>(min_vertex)] = 1;
    best.min_cut = crossing_edges(g, side);
  }

  UnitFlow flow(g);
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t value = flow.run(0, static_cast<Vertex>(v), best.lambda);
    if (value < best.lambda) {
      best.lambda = value;
      best.min_cut = crossing_edges(g, flow.residual_side(0));
    }
  }
  return best;
}

PropertyReport check_edge_connectivity(const Graph& g, std::size_t k) {
  const std::string name = "edge-connectivity>=" + std::to_string(k);
  EdgeConnectivity ec = edge_connectivity(g);
  const std::string detail = "lambda=" + std::to_string(ec.lambda);
  if (ec.lambda >= k) return pass(name, detail);
  return fail(name, EdgeCut{ec.min_cut}, detail);
}

namespace {

// Bridges of G minus a set of removed edges, with the sizes of the two sides.
struct BridgeScan {
  const Graph& g;
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> incident;  // (neighbour, edge id)

  explicit BridgeScan(const Graph& graph) : g(graph), incident(graph.vertex_count()) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edges()[e];
      incident[static_cast<std::size_t>(edge.u)].emplace_back(edge.v, e);
      incident[static_cast<std::size_t>(edge.v)].emplace_back(edge.u, e);
    }
  }

  // Calls visit(edge id, component order, subtree order) for each bridge;
  // returns the number of components of order >= 2.
  template <typename Visit>
  std::size_t scan(const std::vector<char>& removed, Visit&& visit) const {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> disc(n, 0), low(n, 0), size(n, 1), parent_edge(n, 0), next(n, 0);
    std::vector<Vertex> comp_members;
    std::size_t timer = 0;
    std::size_t big = 0;
    struct PendingBridge {
      std::size_t edge;
      std::size_t subtree;
    };
    std::vector<PendingBridge> pending;
    std::vector<Vertex> stack;
    for (std::size_t root = 0; root < n; ++root) {
      if (disc[root]) continue;
      pending.clear();
      std::size_t comp_size = 0;
      stack.push_back(static_cast<Vertex>(root));
      disc[root] = low[root] = ++timer;
      parent_edge[root] = std::numeric_limits<std::size_t>::max();
      while (!stack.empty()) {
        const auto v = static_cast<std::size_t>(stack.back());
        if (next[v] < incident[v].size()) {
          auto [u, e] = incident[v][next[v]++];
          if (removed[e] || e == parent_edge[v]) continue;
          const auto ui = static_cast<std::size_t>(u);
          if (disc[ui]) {
            low[v] = std::min(low[v], disc[ui]);
          } else {
            disc[ui] = low[ui] = ++timer;
            parent_edge[ui] = e;
            stack.push_back(u);
          }
        } else {
          stack.pop_back();
          ++comp_size;
          if (!stack.empty()) {
            const auto p = static_cast<std::size_t>(stack.back());
            low[p] = std::min(low[p], low[v]);
            size[p] += size[v];
            if (low[v] > disc[p]) pending.push_back({parent_edge[v], size[v]});
          }
        }
      }
      if (comp_size >= 2) ++big;
      for (const auto& b : pending) visit(b.edge, comp_size, b.subtree);
    }
    return big;
  }
};

}  // namespace

PropertyReport essential_edge_connectivity_at_least(const Graph& g, std::size_t k, EssentialOptions options) {
  const std::string name = "essential-edge-connectivity>=" + std::to_string(k);
  if (k == 0) throw GraphError("essential edge connectivity needs k >= 1");
  const std::size_t m = g.edge_count();

  // Any inclusion-minimal violating edge set L has the property that each
  // e in L is a bridge of G - (L - e). So it suffices to take every base set
  // of size <= k-2 and try its bridges with a larger edge index.
  const std::size_t max_base = k >= 2 ? std::min(k - 2, m) : 0;
  std::uint64_t candidates = 0;
  for (std::size_t j = 0; j <= max_base && k >= 2; ++j) {
    candidates += binomial_capped(m, j, options.max_candidate_sets);
    if (candidates > options.max_candidate_sets) {
      return undecided(name, "undecided at this scale (more than " + std::to_string(options.max_candidate_sets) +
                                 " edge subsets)");
    }
  }

  BridgeScan scanner(g);
  std::vector<char> removed(m, 0);
  std::optional<std::vector<std::size_t>> found;

  auto check_base = [&](const std::vector<std::size_t>& base) {
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> bridges;
    const std::size_t big = scanner.scan(removed, [&](std::size_t e, std::size_t comp, std::size_t sub) {
      bridges.push_back({e, {comp, sub}});
    });
    if (big >= 2) {
      found = base;
      return;
    }
    if (base.size() + 1 > k - 1) return;
    const std::size_t floor = base.empty() ? 0 : base.back() + 1;
    std::sort(bridges.begin(), bridges.end());
    for (const auto& [e, sizes] : bridges) {
      if (e < floor) continue;
      const auto [comp, sub] = sizes;
      const std::size_t after = big - 1 + (sub >= 2 ? 1 : 0) + (comp - sub >= 2 ? 1 : 0);
      if (after >= 2) {
        auto witness = base;
        witness.push_back(e);
        found = witness;
        return;
      }
    }
  };

  // Base sets of size 0..max_base in lexicographic order.
  check_base({});
  for (std::size_t j = 1; j <= max_base && !found && k >= 2; ++j) {
    std::vector<std::size_t> idx(j);
    for (std::size_t i = 0; i < j; ++i) idx[i] = i;
    while (!found) {
      for (std::size_t e : idx) removed[e] = 1;
      check_base(idx);
      for (std::size_t e : idx) removed[e] = 0;
      // next combination
      std::size_t i = j;
      while (i > 0 && idx[i - 1] == m - j + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t t = i; t < j; ++t) idx[t] = idx[t - 1] + 1;
    }
  }

  if (!found) return pass(name);
  EdgeCut cut;
  for (std::size_t e : *found) cut.edges.push_back(g.edges()[e]);
  return fail(name, std::move(cut));
}

namespace {

bool extend_independent(const Graph& g, std::vector<Vertex>& chosen, std::span<const Vertex> candidates,
                        std::size_t m) {
  if (chosen.size() == m) return true;
  if (chosen.size() + candidates.size() < m) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (chosen.size() + (candidates.size() - i) < m) return false;
    const Vertex v = candidates[i];
    std::vector<Vertex> rest;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (!g.adjacent(v, candidates[j])) rest.push_back(candidates[j]);
    }
    chosen.push_back(v);
    if (extend_independent(g, chosen, rest, m)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<InducedStar> find_induced_star(const Graph& g, std::size_t m) {
  if (m == 0) throw GraphError("star size must be positive");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    if (nb.size() < m) continue;
    std::vector<Vertex> chosen;
    if (extend_independent(g, chosen, nb, m)) return InducedStar{static_cast<Vertex>(v), VertexSet(chosen)};
  }
  return std::nullopt;
}

PropertyReport check_star_free(const Graph& g, std::size_t m) {
  const std::string name = "star-free(" + std::to_string(m) + ")";
  if (auto star = find_induced_star(g, m)) return fail(name, *star);
  return pass(name);
}

TerminalLoad terminal_load(const Graph& g, const VertexSet& w) {
  const std::vector<char> in_w = w.indicator(g.vertex_count());
  TerminalLoad load;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t count = 0;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) count += in_w[static_cast<std::size_t>(u)] ? 1 : 0;
    if (!load.vertex || count > load.max_load) {
      load.vertex = static_cast<Vertex>(v);
      load.max_load = count;
    }
  }
  return load;
}

namespace {

std::optional<CrowdedVertex> crowded_vertex(const Graph& g, const std::vector<char>& in_w) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> seen;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
      if (in_w[static_cast<std::size_t>(u)]) seen.push_back(u);
    }
    if (seen.size() >= 2) {
      seen.resize(2);
      return CrowdedVertex{static_cast<Vertex>(v), VertexSet(seen)};
    }
  }
  return std::nullopt;
}

std::optional<ClosePair> close_pair(const Graph& g, const VertexSet& w, const std::vector<char>& in_w) {
  for (Vertex a : w) {
    std::optional<ClosePair> best;
    for (Vertex u : g.neighbors(a)) {
      if (in_w[static_cast<std::size_t>(u)]) {
        best = ClosePair{a, u, 1};
        break;
      }
    }
    if (!best) {
      for (Vertex u : g.neighbors(a)) {
        for (Vertex x : g.neighbors(u)) {
          if (x != a && in_w[static_cast<std::size_t>(x)] && (!best || x < best->b)) best = ClosePair{a, x, 2};
        }
      }
    }
    if (best) {
      if (best->b < best->a) std::swap(best->a, best->b);
      return best;
    }
  }
  return std::nullopt;
}

}  // namespace

PropertyReport check_terminal_set(const Graph& g, const VertexSet& w, TerminalMode mode) {
  const std::string name = mode == TerminalMode::distance3 ? "terminals-distance3" : "terminals-nbhd1";
  const std::vector<char> in_w = w.indicator(g.vertex_count());
  if (w.size() % 2 != 0) return fail(name, OddTerminalCount{w.size()});
  if (mode == TerminalMode::nbhd1) {
    if (auto c = crowded_vertex(g, in_w)) return fail(name, *c);
    return pass(name);
  }
  if (auto p = close_pair(g, w, in_w)) return fail(name, *p);
  // A vertex seeing two terminals would put them at distance <= 2.
  const bool implied = !crowded_vertex(g, in_w).has_value();
  if (!implied) throw std::logic_error("distance-3 terminal set violates the neighbourhood condition");
  return pass(name, "implies terminals-nbhd1");
}

PropertyReport path_system_criterion(const Graph& g, std::size_t max_vertices) {
  const std::string name = "path-system-criterion";
  const std::size_t n = g.vertex_count();
  if (n > max_vertices || n > 31) {
    return undecided(name, "undecided at this scale (" + std::to_string(n) + " vertices, bound " +
                               std::to_string(max_vertices) + ")");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  auto count_components = [&](std::uint32_t alive) {
    std::size_t count = 0;
    while (alive) {
      std::uint32_t frontier = alive & (~alive + 1);
      std::uint32_t comp = frontier;
      while (frontier) {
        std::uint32_t grown = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) grown |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = grown & alive & ~comp;
        comp |= frontier;
      }
      alive &= ~comp;
      ++count;
    }
    return count;
  };
  // Proper subsets by size, then lexicographically.
  for (std::size_t size = 0; size < n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::uint32_t s = 0;
      for (std::size_t i : idx) s |= 1u << i;
      const std::size_t omega = count_components(all & ~s);
      if (omega > size + 1) {
        std::vector<Vertex> members(idx.begin(), idx.end());
        return fail(name, Separator{VertexSet(members), omega});
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t t = i; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return pass(name);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::vector<Vertex> stack{static_cast<Vertex>(root)};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        auto& cu = colour[static_cast<std::size_t>(u)];
        if (cu < 0) {
          cu = 1 - colour[static_cast<std::size_t>(v)];
          stack.push_back(u);
        } else if (cu == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) {
      if (s.contains(u)) return false;
    }
  }
  return true;
}

}  // namespace pcs
