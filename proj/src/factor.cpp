#include "pcs/factor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcs {

DegreeSpec::DegreeSpec(std::vector<int> targets) : targets_(std::move(targets)) {
  for (int t : targets_) {
    if (t < 0) throw GraphError("degree targets must be nonnegative");
  }
}

long long DegreeSpec::total() const { return std::accumulate(targets_.begin(), targets_.end(), 0LL); }

long long DegreeSpec::total(const VertexSet& s) const {
  long long sum = 0;
  for (Vertex v : s) sum += (*this)[v];
  return sum;
}

DegreeSpec degree_spec_from_terminals(const Graph& g, const VertexSet& w) {
  if (w.size() % 2 != 0) throw GraphError("terminal set must have even size");
  std::vector<int> targets(g.vertex_count(), 2);
  for (Vertex v : w) {
    if (!g.valid(v)) throw GraphError("terminal " + std::to_string(v) + " is not in the graph");
    targets[static_cast<std::size_t>(v)] = 1;
  }
  return DegreeSpec(std::move(targets));
}

GadgetGraph build_gadget(const Graph& g, const DegreeSpec& f) {
  const std::size_t n = g.vertex_count();
  if (f.size() != n) throw GraphError("degree spec does not match the graph");
  GadgetGraph gg;
  gg.spec = f;
  gg.original_edges = g.edges();
  gg.first_core.resize(n);
  gg.core_count.resize(n);

  // Per vertex: its ports (one per incident edge, neighbour order), then its cores.
  std::vector<Vertex> first_port(n);
  Vertex next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto deg = static_cast<int>(g.degree(static_cast<Vertex>(v)));
    const int target = f[static_cast<Vertex>(v)];
    if (target > deg) {
      throw GraphError("f(" + std::to_string(v) + ")=" + std::to_string(target) + " exceeds degree " +
                       std::to_string(deg));
    }
    first_port[v] = next;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
      gg.origin.emplace_back(PortOrigin{Edge::make(static_cast<Vertex>(v), u), static_cast<Vertex>(v)});
    }
    next += deg;
    gg.first_core[v] = next;
    gg.core_count[v] = static_cast<std::size_t>(deg - target);
    for (std::size_t slot = 0; slot < gg.core_count[v]; ++slot) {
      gg.origin.emplace_back(CoreOrigin{static_cast<Vertex>(v), slot});
    }
    next += deg - target;
  }

  auto port_of = [&](Vertex v, Vertex towards) {
    auto nb = g.neighbors(v);
    const auto pos = std::lower_bound(nb.begin(), nb.end(), towards) - nb.begin();
    return first_port[static_cast<std::size_t>(v)] + static_cast<Vertex>(pos);
  };

  std::vector<Edge> edges;
  gg.edge_ports.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const Vertex pu = port_of(e.u, e.v);
    const Vertex pv = port_of(e.v, e.u);
    gg.edge_ports.push_back({pu, pv});
    edges.push_back(Edge::make(pu, pv));
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto deg = static_cast<Vertex>(g.degree(static_cast<Vertex>(v)));
    for (Vertex p = first_port[v]; p < first_port[v] + deg; ++p) {
      for (std::size_t c = 0; c < gg.core_count[v]; ++c) {
        edges.push_back(Edge::make(p, gg.first_core[v] + static_cast<Vertex>(c)));
      }
    }
  }
  gg.graph = Graph(static_cast<std::size_t>(next), edges);
  return gg;
}

std::vector<int> FFactor::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (const Edge& e : edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

bool is_f_factor(const Graph& g, const DegreeSpec& f, const FFactor& factor) {
  if (factor.vertex_count != g.vertex_count() || f.size() != g.vertex_count()) return false;
  for (const Edge& e : factor.edges) {
    if (!g.valid(e.u) || !g.valid(e.v) || !g.adjacent(e.u, e.v)) return false;
  }
  std::vector<Edge> sorted = factor.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return factor.degrees() == f.targets();
}

FFactor extract_f_factor(const GadgetGraph& gg, const Matching& m) {
  if (m.mate.size() != gg.graph.vertex_count() || !m.is_perfect()) {
    throw std::invalid_argument("extract_f_factor needs a perfect matching of the gadget");
  }
  FFactor factor;
  factor.vertex_count = gg.first_core.size();
  for (std::size_t i = 0; i < gg.original_edges.size(); ++i) {
    const auto [pu, pv] = gg.edge_ports[i];
    if (m.mate[static_cast<std::size_t>(pu)] == pv) factor.edges.push_back(gg.original_edges[i]);
  }
  if (factor.degrees() != gg.spec.targets()) throw std::logic_error("gadget matching does not meet the degree spec");
  return factor;
}

Matching matching_from_factor(const GadgetGraph& gg, const FFactor& factor) {
  Matching m;
  m.mate.resize(gg.graph.vertex_count());
  std::vector<Edge> chosen = factor.edges;
  std::sort(chosen.begin(), chosen.end());
  for (std::size_t i = 0; i < gg.original_edges.size(); ++i) {
    if (!std::binary_search(chosen.begin(), chosen.end(), gg.original_edges[i])) continue;
    const auto [pu, pv] = gg.edge_ports[i];
    m.mate[static_cast<std::size_t>(pu)] = pv;
    m.mate[static_cast<std::size_t>(pv)] = pu;
  }
  // Leftover ports of v, in index order, take the cores of v in index order.
  std::vector<std::size_t> used(gg.first_core.size(), 0);
  for (std::size_t p = 0; p < gg.origin.size(); ++p) {
    const auto* port = std::get_if<PortOrigin>(&gg.origin[p]);
    if (!port || m.mate[p]) continue;
    const auto v = static_cast<std::size_t>(port->endpoint);
    if (used[v] == gg.core_count[v]) throw std::invalid_argument("factor exceeds the degree spec");
    const Vertex core = gg.first_core[v] + static_cast<Vertex>(used[v]++);
    m.mate[p] = core;
    m.mate[static_cast<std::size_t>(core)] = static_cast<Vertex>(p);
  }
  return m;
}

PathCycleSystem decompose_system(const FFactor& factor, const VertexSet& w) {
  const std::size_t n = factor.vertex_count;
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : factor.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  const std::vector<char> in_w = w.indicator(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t want = in_w[v] ? 1 : 2;
    if (adj[v].size() != want) {
      throw std::logic_error("factor has degree " + std::to_string(adj[v].size()) + " at vertex " +
                             std::to_string(v) + ", expected " + std::to_string(want));
    }
    std::sort(adj[v].begin(), adj[v].end());
  }

  PathCycleSystem out;
  std::vector<char> seen(n, 0);
  auto walk = [&](Vertex start, Vertex first_step) {
    std::vector<Vertex> seq{start};
    seen[static_cast<std::size_t>(start)] = 1;
    Vertex prev = start;
    Vertex cur = first_step;
    while (cur != start && !seen[static_cast<std::size_t>(cur)]) {
      seq.push_back(cur);
      seen[static_cast<std::size_t>(cur)] = 1;
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      if (nb.size() == 1) break;
      const Vertex step = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = step;
    }
    return seq;
  };

  for (Vertex t : w) {
    if (seen[static_cast<std::size_t>(t)]) continue;
    out.paths.push_back(walk(t, adj[static_cast<std::size_t>(t)][0]));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    // v is the minimum of its cycle; head to the smaller neighbour.
    out.cycles.push_back(walk(static_cast<Vertex>(v), adj[v][0]));
  }
  return out;
}

std::optional<std::string> validate_system(const Graph& g, const VertexSet& w, const PathCycleSystem& system) {
  const std::size_t n = g.vertex_count();
  std::vector<int> owner(n, 0);
  auto claim = [&](Vertex v) -> std::optional<std::string> {
    if (!g.valid(v)) return "vertex " + std::to_string(v) + " is not in the graph";
    if (owner[static_cast<std::size_t>(v)]++) return "vertex " + std::to_string(v) + " is used twice";
    return std::nullopt;
  };
  std::vector<Vertex> ends;
  for (const auto& path : system.paths) {
    if (path.size() < 2) return std::string("path with no edge");
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (auto err = claim(path[i])) return err;
      if (i > 0 && !g.adjacent(path[i - 1], path[i])) {
        return "path step " + std::to_string(path[i - 1]) + "-" + std::to_string(path[i]) + " is not an edge";
      }
      if (i > 0 && i + 1 < path.size() && w.contains(path[i])) {
        return "terminal " + std::to_string(path[i]) + " is internal to a path";
      }
    }
    ends.push_back(path.front());
    ends.push_back(path.back());
  }
  for (const auto& cycle : system.cycles) {
    if (cycle.size() < 3) return std::string("cycle with fewer than 3 vertices");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (auto err = claim(cycle[i])) return err;
      const Vertex next = cycle[(i + 1) % cycle.size()];
      if (!g.adjacent(cycle[i], next)) {
        return "cycle step " + std::to_string(cycle[i]) + "-" + std::to_string(next) + " is not an edge";
      }
      if (w.contains(cycle[i])) return "terminal " + std::to_string(cycle[i]) + " lies on a cycle";
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!owner[v]) return "vertex " + std::to_string(v) + " is not covered";
  }
  std::sort(ends.begin(), ends.end());
  if (!std::equal(ends.begin(), ends.end(), w.begin(), w.end())) return std::string("path ends differ from W");
  return std::nullopt;
}

std::optional<FFactor> solve_f_factor(const Graph& g, const DegreeSpec& f) {
  if (f.size() != g.vertex_count()) throw GraphError("degree spec does not match the graph");
  if (f.total() % 2 != 0) return std::nullopt;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<std::size_t>(f[static_cast<Vertex>(v)]) > g.degree(static_cast<Vertex>(v))) return std::nullopt;
  }
  const GadgetGraph gg = build_gadget(g, f);
  const Matching m = maximum_matching(gg.graph);
  if (!m.is_perfect()) return std::nullopt;
  return extract_f_factor(gg, m);
}

std::optional<PathCycleSystem> solve(const Graph& g, const VertexSet& w) {
  const DegreeSpec f = degree_spec_from_terminals(g, w);
  auto factor = solve_f_factor(g, f);
  if (!factor) return std::nullopt;
  return decompose_system(*factor, w);
}

namespace {

class FactorSearch {
 public:
  FactorSearch(const Graph& g, const DegreeSpec& f) : g_(g), f_(f), deg_(g.vertex_count(), 0) {}

  bool run() { return place(0); }
  FFactor result() const { return FFactor{g_.vertex_count(), chosen_}; }

 private:
  // Vertices below v are complete; choose the remaining edges of v among
  // edges to later vertices that still have room.
  bool place(std::size_t v) {
    if (v == g_.vertex_count()) return true;
    const int need = f_[static_cast<Vertex>(v)] - deg_[v];
    if (need < 0) return false;
    std::vector<Vertex> options;
    for (Vertex u : g_.neighbors(static_cast<Vertex>(v))) {
      if (static_cast<std::size_t>(u) > v && deg_[static_cast<std::size_t>(u)] < f_[u]) options.push_back(u);
    }
    if (static_cast<int>(options.size()) < need) return false;
    std::vector<Vertex> pick;
    return choose(v, options, 0, need, pick);
  }

  bool choose(std::size_t v, const std::vector<Vertex>& options, std::size_t from, int need,
              std::vector<Vertex>& pick) {
    if (need == 0) {
      for (Vertex u : pick) {
        ++deg_[static_cast<std::size_t>(u)];
        chosen_.push_back(Edge::make(static_cast<Vertex>(v), u));
      }
      deg_[v] += static_cast<int>(pick.size());
      if (place(v + 1)) return true;
      deg_[v] -= static_cast<int>(pick.size());
      for (Vertex u : pick) {
        --deg_[static_cast<std::size_t>(u)];
        chosen_.pop_back();
      }
      return false;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= options.size(); ++i) {
      pick.push_back(options[i]);
      if (choose(v, options, i + 1, need - 1, pick)) return true;
      pick.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const DegreeSpec& f_;
  std::vector<int> deg_;
  std::vector<Edge> chosen_;
};

}  // namespace

std::optional<FFactor> brute_force_f_factor(const Graph& g, const DegreeSpec& f, BruteForceOptions options) {
  if (f.size() != g.vertex_count()) throw GraphError("degree spec does not match the graph");
  if (g.edge_count() > options.max_edges) {
    throw ScaleLimitExceeded("brute-force factor search limited to " + std::to_string(options.max_edges) +
                             " edges, graph has " + std::to_string(g.edge_count()));
  }
  FactorSearch search(g, f);
  if (!search.run()) return std::nullopt;
  FFactor out = search.result();
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string serialize_system(const std::optional<PathCycleSystem>& system) {
  if (!system) return "INFEASIBLE\n";
  std::string out;
  auto line = [&](const char* tag, const std::vector<Vertex>& seq) {
    out += tag;
    out += ':';
    for (Vertex v : seq) out += ' ' + std::to_string(v);
    out += '\n';
  };
  for (const auto& p : system->paths) line("path", p);
  for (const auto& c : system->cycles) line("cycle", c);
  return out;
}

std::optional<PathCycleSystem> parse_system(std::string_view text) {
  PathCycleSystem out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool infeasible = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "INFEASIBLE") {
      infeasible = true;
      continue;
    }
    std::istringstream words(line);
    std::string tag;
    words >> tag;
    std::vector<Vertex> seq;
    for (Vertex v; words >> v;) seq.push_back(v);
    if (tag == "path:") {
      out.paths.push_back(std::move(seq));
    } else if (tag == "cycle:") {
      out.cycles.push_back(std::move(seq));
    } else {
      throw std::invalid_argument("unrecognised system line '" + line + "'");
    }
  }
  if (infeasible) return std::nullopt;
  return out;
}

}  // namespace pcs
