#include "pcs/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>

#include "pcs/factor.hpp"
#include "pcs/tutte.hpp"

namespace pcs {

namespace {

// Accumulates named vertices and edges; the index of a vertex is its creation order.
class Builder {
 public:
  Vertex add(const std::string& name) {
    const auto v = static_cast<Vertex>(names_.size());
    if (!index_.emplace(name, v).second) throw FamilyError("duplicate vertex name " + name);
    names_.emplace_back(name, v);
    return v;
  }
  Vertex at(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw FamilyError("unknown vertex name " + name);
    return it->second;
  }
  void join(Vertex a, Vertex b) { edges_.push_back(Edge::make(a, b)); }

  Graph graph() const {
    try {
      return Graph(names_.size(), edges_);
    } catch (const GraphError& e) {
      throw FamilyError(std::string("construction produced an invalid graph: ") + e.what());
    }
  }
  const NameMap& names() const { return names_; }

 private:
  NameMap names_;
  std::map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

std::string sub(const std::string& base, long long i) { return base + "_" + std::to_string(i); }
std::string sub2(const std::string& base, long long i, long long j) {
  return base + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}
std::string copy_vertex(long long copy, long long j) { return "H_" + std::to_string(copy) + ":v_" + std::to_string(j); }

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

// Pairs {i,j} of Z_N at circular distance between 1 and c.
std::vector<std::pair<int, int>> circulant_pairs(int n, int c) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::min(j - i, n - (j - i)) <= c) out.emplace_back(i, j);
    }
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw FamilyError(message);
}

// Fails loudly when a claimed property does not hold.
void self_check(const FamilyInstance& inst) {
  for (const PropertyReport& rep : verify_instance(inst)) {
    if (!rep.holds()) throw FamilyError(inst.family + " failed its own check: " + rep.to_line());
  }
}

}  // namespace

std::vector<PropertyReport> verify_instance(const FamilyInstance& inst) {
  const Graph& g = inst.graph;
  const FamilyClaims& c = inst.claims;
  std::vector<PropertyReport> out;
  out.push_back(check_regular(g, c.r));

  if (c.star_free) {
    out.push_back(check_star_free(g, c.r));
  } else {
    PropertyReport rep{"contains-star(" + std::to_string(c.r) + ")", Verdict::holds, std::nullopt, {}};
    if (auto star = find_induced_star(g, c.r)) {
      rep.detail = to_string(Witness{*star});
    } else {
      rep.verdict = Verdict::fails;
      rep.witness = ScaleLimit{"no vertex has " + std::to_string(c.r) + " pairwise non-adjacent neighbours"};
    }
    out.push_back(rep);
  }

  if (c.lambda_exact || c.lambda_at_least) {
    const EdgeConnectivity ec = edge_connectivity(g);
    const bool exact = c.lambda_exact.has_value();
    const std::size_t k = exact ? *c.lambda_exact : *c.lambda_at_least;
    PropertyReport rep{std::string("edge-connectivity") + (exact ? "=" : ">=") + std::to_string(k), Verdict::holds,
                       std::nullopt, "lambda=" + std::to_string(ec.lambda)};
    if (exact ? ec.lambda != k : ec.lambda < k) {
      rep.verdict = Verdict::fails;
      rep.witness = EdgeCut{ec.min_cut};
    }
    out.push_back(rep);
  }

  if (c.terminal_mode) out.push_back(check_terminal_set(g, inst.w, *c.terminal_mode));

  if (c.terminal_load) {
    const TerminalLoad load = terminal_load(g, inst.w);
    PropertyReport rep{"terminal-load=" + std::to_string(*c.terminal_load), Verdict::holds, std::nullopt,
                       "max |N(v) n W|=" + std::to_string(load.max_load)};
    if (load.max_load != *c.terminal_load) {
      rep.verdict = Verdict::fails;
      std::vector<Vertex> seen;
      if (load.vertex) {
        for (Vertex u : g.neighbors(*load.vertex)) {
          if (inst.w.contains(u)) seen.push_back(u);
        }
      }
      rep.witness = CrowdedVertex{load.vertex.value_or(0), VertexSet(std::move(seen))};
    }
    out.push_back(rep);
  }

  if (c.terminal_distance) {
    PropertyReport rep{"terminal-distance=" + std::to_string(*c.terminal_distance), Verdict::holds, std::nullopt, {}};
    for (std::size_t i = 0; i < inst.w.size() && rep.holds(); ++i) {
      const std::vector<Distance> dist = distances_from(g, inst.w[i]);
      for (std::size_t j = i + 1; j < inst.w.size(); ++j) {
        const Distance d = dist[static_cast<std::size_t>(inst.w[j])];
        if (d != c.terminal_distance) {
          rep.verdict = Verdict::fails;
          rep.witness = ClosePair{inst.w[i], inst.w[j], d.value_or(0)};
          if (!d) rep.detail = "terminals in different components";
          break;
        }
      }
    }
    out.push_back(rep);
  }

  if (c.bipartite) {
    PropertyReport rep{"bipartite", Verdict::holds, std::nullopt, {}};
    if (!bipartition(g)) {
      rep.verdict = Verdict::fails;
      rep.witness = ScaleLimit{"graph has an odd cycle"};
    }
    out.push_back(rep);
  }

  if (inst.witness) {
    const DegreeSpec f = degree_spec_from_terminals(g, inst.w);
    const DeltaTerms terms = delta_terms(g, f, inst.witness->s, inst.witness->t);
    PropertyReport rep{"witness-delta=" + std::to_string(inst.witness->expected_delta), Verdict::holds, std::nullopt,
                       "f(S)=" + std::to_string(terms.f_s) + " deg(T)=" + std::to_string(terms.deg_t) +
                           " f(T)=" + std::to_string(terms.f_t) + " q=" + std::to_string(terms.q)};
    if (terms.value() != inst.witness->expected_delta) {
      rep.verdict = Verdict::fails;
      rep.witness = ScaleLimit{"delta evaluates to " + std::to_string(terms.value())};
    }
    out.push_back(rep);
  }
  return out;
}

FamilyInstance gen_prop1_odd(int r, int k) {
  require(r >= 5 && r % 2 == 1, "prop1-odd needs odd r >= 5");
  require(k >= r + 1 && k % 2 == 0, "prop1-odd needs even k >= r+1");
  Builder b;
  const int copies = 2 * r + 2;
  const int n_h = r + k - 1;
  const int n_star = r + k + 1;
  for (int i = 1; i <= copies; ++i) {
    const int n = i == copies ? n_star : n_h;
    for (int j = 0; j < n; ++j) b.add(copy_vertex(i, j));
    for (auto [p, q] : circulant_pairs(n, (r - 1) / 2)) b.join(b.at(copy_vertex(i, p)), b.at(copy_vertex(i, q)));
    const int first = i == copies ? r + 1 : r - 1;
    const int last = i == copies ? r + k / 2 : r + k / 2 - 2;
    for (int s = first; s <= last; ++s) {
      b.join(b.at(copy_vertex(i, s % n)), b.at(copy_vertex(i, (s + k / 2) % n)));
    }
  }
  std::vector<Vertex> hubs;
  for (int i = 1; i <= 2 * r; ++i) hubs.push_back(b.add(sub("x", i)));
  auto hub = [&](long long i) { return hubs[static_cast<std::size_t>(mod(i - 1, 2 * r))]; };
  for (int i = 1; i <= 2 * r; ++i) {
    b.join(b.at(copy_vertex(i, 0)), hub(i));
    b.join(b.at(copy_vertex(i, 1)), hub(i));
    for (int t = 2; t <= r - 2; ++t) b.join(b.at(copy_vertex(i, t)), hub(i + t - 1));
  }
  // Deficient vertices of the last two copies go to the hubs in ascending order.
  std::vector<Vertex> deficient;
  for (int j = 0; j <= r - 2; ++j) deficient.push_back(b.at(copy_vertex(2 * r + 1, j)));
  for (int j = 0; j <= r; ++j) deficient.push_back(b.at(copy_vertex(copies, j)));
  for (std::size_t j = 0; j < deficient.size(); ++j) b.join(deficient[j], hubs[j]);

  std::vector<Vertex> w = hubs;
  for (int i = 1; i <= 2 * r + 1; ++i) w.push_back(b.at(copy_vertex(i, r + k / 2 - 2)));
  w.push_back(b.at(copy_vertex(copies, r + k / 2)));

  FamilyInstance inst;
  inst.family = "prop1-odd";
  inst.graph = b.graph();
  inst.w = VertexSet(std::move(w));
  inst.witness = FamilyWitness{VertexSet(hubs), VertexSet{}, -2};
  inst.names = b.names();
  inst.claims.r = static_cast<std::size_t>(r);
  inst.claims.lambda_exact = static_cast<std::size_t>(r - 1);
  inst.claims.terminal_mode = TerminalMode::distance3;
  self_check(inst);
  return inst;
}

FamilyInstance gen_prop1_even(int r, int k) {
  require(r % 2 == 0, "prop1-even needs even r");
  const bool two_mod_four = r % 4 == 2;
  if (two_mod_four) {
    require(r >= 6 && k >= r, "prop1-even with r = 2 (mod 4) needs r >= 6 and k >= r");
  } else {
    require(r >= 8 && k >= r && k % 2 == 0, "prop1-even with r = 0 (mod 4) needs r >= 8 and even k >= r");
  }
  const int n_h = two_mod_four ? r + k + 1 : r + k;
  std::vector<std::pair<int, int>> removed;
  const int blocks = two_mod_four ? (r - 2) / 4 : (r - 4) / 4;
  for (int j = 0; j < blocks; ++j) {
    removed.emplace_back(4 * j, 4 * j + 2);
    removed.emplace_back(4 * j + 1, 4 * j + 3);
  }
  std::vector<int> u;
  int w_index = 0;
  if (two_mod_four) {
    for (int t = 0; t < r - 2; ++t) u.push_back(t);
    w_index = (3 * r - 4) / 2;
  } else {
    removed.emplace_back(r - 4, r - 2);
    for (int t = 0; t <= r - 6; ++t) u.push_back(t);
    u.insert(u.end(), {r - 4, r - 5, r - 2});
    w_index = (3 * r - 2) / 2;
  }
  std::sort(removed.begin(), removed.end());

  Builder b;
  for (int i = 1; i <= r; ++i) {
    for (int j = 0; j < n_h; ++j) b.add(copy_vertex(i, j));
    for (auto pq : circulant_pairs(n_h, r / 2)) {
      if (std::binary_search(removed.begin(), removed.end(), pq)) continue;
      b.join(b.at(copy_vertex(i, pq.first)), b.at(copy_vertex(i, pq.second)));
    }
  }
  std::vector<Vertex> hubs;
  for (int i = 1; i <= r - 2; ++i) hubs.push_back(b.add(sub("x", i)));
  auto hub = [&](long long i) { return hubs[static_cast<std::size_t>(mod(i - 1, r - 2))]; };
  for (int i = 1; i <= r; ++i) {
    auto at_u = [&](int t) { return b.at(copy_vertex(i, u[static_cast<std::size_t>(t)])); };
    if (i <= r - 2) {
      b.join(at_u(0), hub(i));
      b.join(at_u(1), hub(i));
      for (int t = 2; t <= r - 3; ++t) b.join(at_u(t), hub(i + t - 1));
    } else {
      for (int t = 0; t <= r - 3; ++t) b.join(at_u(t), hub(t + 1));
    }
  }
  std::vector<Vertex> w = hubs;
  for (int i = 1; i <= r; ++i) w.push_back(b.at(copy_vertex(i, w_index)));

  FamilyInstance inst;
  inst.family = "prop1-even";
  inst.graph = b.graph();
  inst.w = VertexSet(std::move(w));
  inst.witness = FamilyWitness{VertexSet(hubs), VertexSet{}, -2};
  inst.names = b.names();
  inst.claims.r = static_cast<std::size_t>(r);
  inst.claims.lambda_at_least = static_cast<std::size_t>(r - 2);
  inst.claims.terminal_mode = TerminalMode::distance3;
  self_check(inst);
  return inst;
}

FamilyInstance gen_prop1_bipartite(int r, int n) {
  require(r >= 4, "prop1-bipartite needs r >= 4");
  require(n >= 2 * r, "prop1-bipartite needs n >= 2r for a same-side pair at distance 4");
  Builder b;
  for (int i = 0; i < n; ++i) b.add(sub("L", i));
  for (int i = 0; i < n; ++i) b.add(sub("R", i));
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < r; ++d) b.join(b.at(sub("L", i)), b.at(sub("R", (i + d) % n)));
  }
  FamilyInstance inst;
  inst.family = "prop1-bipartite";
  inst.graph = b.graph();
  inst.w = VertexSet{b.at(sub("L", 0)), b.at(sub("L", r))};
  inst.names = b.names();
  inst.claims.r = static_cast<std::size_t>(r);
  inst.claims.star_free = false;
  inst.claims.lambda_exact = static_cast<std::size_t>(r);
  inst.claims.terminal_distance = 4;
  inst.claims.bipartite = true;
  self_check(inst);
  return inst;
}

FamilyInstance gen_prop2_r4(int n) {
  require(n >= 6, "prop2-r4 needs n >= 6");
  Builder b;
  std::vector<Vertex> x;
  std::vector<Vertex> y;
  for (int i = 1; i <= 3 * n; ++i) {
    x.push_back(b.add(sub("x", i)));
    y.push_back(b.add(sub("y", i)));
  }
  for (int i = 0; i < 3 * n; ++i) {
    b.join(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
    b.join(y[static_cast<std::size_t>(i)], x[static_cast<std::size_t>((i + 1) % (3 * n))]);
  }
  std::vector<Vertex> a;
  std::vector<Vertex> bb;
  for (int i = 1; i <= 2 * n; ++i) a.push_back(b.add(sub("a", i)));
  for (int i = 1; i <= 2 * n; ++i) bb.push_back(b.add(sub("b", i)));
  for (int j = 0; j < n; ++j) {
    const auto a1 = a[static_cast<std::size_t>(2 * j)];
    const auto a2 = a[static_cast<std::size_t>(2 * j + 1)];
    const auto b1 = bb[static_cast<std::size_t>(2 * j)];
    const auto b2 = bb[static_cast<std::size_t>(2 * j + 1)];
    b.join(a1, a2);
    b.join(b1, b2);
    for (int off : {0, n, 2 * n}) {
      b.join(a1, x[static_cast<std::size_t>(j + off)]);
      b.join(a2, x[static_cast<std::size_t>(j + off)]);
    }
    for (int h = 0; h < 3; ++h) {
      b.join(b1, y[static_cast<std::size_t>(3 * j + h)]);
      b.join(b2, y[static_cast<std::size_t>(3 * j + h)]);
    }
  }
  std::vector<Vertex> w(x.begin() + n, x.end());
  w.push_back(bb[0]);
  w.push_back(bb[2]);
  std::vector<Vertex> s = x;
  s.insert(s.end(), bb.begin(), bb.end());
  std::vector<Vertex> t = y;
  t.insert(t.end(), a.begin(), a.end());

  FamilyInstance inst;
  inst.family = "prop2-r4";
  inst.graph = b.graph();
  inst.w = VertexSet(std::move(w));
  inst.witness = FamilyWitness{VertexSet(std::move(s)), VertexSet(std::move(t)), -2};
  inst.names = b.names();
  inst.claims.r = 4;
  inst.claims.lambda_exact = 4;
  inst.claims.terminal_load = 2;
  self_check(inst);
  return inst;
}

namespace {

// Shared assembly of the layered constructions for r >= 5.
//
// X_1 (2m vertices) and Y_1 form the subdivision of a circulant on X_1; every
// Y_1 vertex is identified with a Y_2 slot of the auxiliary graph H_2 on
// (X_2, Y_2). Apex pairs a_{2i-1}a_{2i} cover the parts A_i of X_1 u X_2, and
// b_{2i-1}b_{2i} cover the parts B_i of Y.
struct Layered {
  int r = 0;
  int m = 0;
  int n = 0;
  // Circulant on X_1; Y_1 vertex y subdivides edge y.
  std::vector<std::pair<int, int>> m1;
  // H_2 adjacency: for each X_2 vertex, its Y_2 slots.
  std::vector<std::vector<int>> x2_slots;
  std::vector<std::string> x2_names;
  std::vector<std::string> slot_names;
  // slot_of_y[y] = Y_2 slot identified with Y_1 vertex y.
  std::vector<int> slot_of_y;
  // Parts B_i as lists of Y_2 slots.
  std::vector<std::vector<int>> b_parts;
  // 1-based indices of the two b apexes placed in W.
  std::array<int, 2> w_apexes{1, 3};
};

std::vector<std::pair<int, int>> circulant_m1(int m, int r) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 2 * m; ++i) {
    for (int o = 1; o <= (r - 2) / 2; ++o) out.emplace_back(i, (i + o) % (2 * m));
  }
  if ((r - 2) % 2 == 1) {
    for (int i = 0; i < m; ++i) out.emplace_back(i, i + m);
  }
  return out;
}

std::vector<int> eligible_y(const Layered& L) {
  std::vector<int> out;
  for (std::size_t y = 0; y < L.m1.size(); ++y) {
    const int in_prime = (L.m1[y].first < 2 * L.n) + (L.m1[y].second < 2 * L.n);
    if (in_prime <= 1) out.push_back(static_cast<int>(y));
  }
  return out;
}

Graph subdivision_h1(const Layered& L) {
  std::vector<Edge> edges;
  const int base = 2 * L.m;
  for (std::size_t y = 0; y < L.m1.size(); ++y) {
    edges.push_back(Edge::make(L.m1[y].first, base + static_cast<Vertex>(y)));
    edges.push_back(Edge::make(L.m1[y].second, base + static_cast<Vertex>(y)));
  }
  return Graph(static_cast<std::size_t>(base) + L.m1.size(), edges);
}

Graph auxiliary_h2(const Layered& L) {
  std::vector<Edge> edges;
  const auto base = static_cast<Vertex>(L.x2_slots.size());
  for (std::size_t x = 0; x < L.x2_slots.size(); ++x) {
    for (int slot : L.x2_slots[x]) edges.push_back(Edge::make(static_cast<Vertex>(x), base + slot));
  }
  return Graph(L.x2_slots.size() + L.slot_names.size(), edges);
}

// Degree check for a bipartite auxiliary graph whose first `split` vertices form one side.
void require_side_degrees(const Graph& h, std::size_t split, std::size_t left, std::size_t right,
                          const std::string& what) {
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    const std::size_t want = v < split ? left : right;
    require(h.degree(static_cast<Vertex>(v)) == want,
            what + ": vertex " + std::to_string(v) + " has degree " + std::to_string(h.degree(static_cast<Vertex>(v))) +
                ", expected " + std::to_string(want));
  }
}

void note_report(FamilyInstance& inst, const std::string& prefix, const PropertyReport& rep) {
  require(!rep.fails(), prefix + " failed: " + rep.to_line());
  inst.notes.push_back(prefix + " " + rep.to_line());
}

FamilyInstance assemble_layered(const Layered& L, const std::string& family) {
  const int r = L.r;
  const int m = L.m;
  const int n = L.n;
  Builder b;
  std::vector<Vertex> x1;
  for (int i = 1; i <= 2 * m; ++i) x1.push_back(b.add(sub("X1", i)));
  std::vector<Vertex> x2;
  for (const auto& name : L.x2_names) x2.push_back(b.add(name));
  std::vector<Vertex> slot_vertex;
  for (const auto& name : L.slot_names) slot_vertex.push_back(b.add(name));

  for (std::size_t y = 0; y < L.m1.size(); ++y) {
    const Vertex yv = slot_vertex[static_cast<std::size_t>(L.slot_of_y[y])];
    b.join(yv, x1[static_cast<std::size_t>(L.m1[y].first)]);
    b.join(yv, x1[static_cast<std::size_t>(L.m1[y].second)]);
  }
  for (std::size_t x = 0; x < L.x2_slots.size(); ++x) {
    for (int slot : L.x2_slots[x]) b.join(x2[x], slot_vertex[static_cast<std::size_t>(slot)]);
  }

  std::vector<Vertex> a;
  std::vector<Vertex> bb;
  for (int i = 1; i <= 2 * n; ++i) a.push_back(b.add(sub("a", i)));
  for (int i = 1; i <= 2 * n; ++i) bb.push_back(b.add(sub("b", i)));

  // A_i = two vertices of X_1' plus the next r-3 vertices of (X_1 - X_1') ++ X_2.
  std::vector<Vertex> rest(x1.begin() + 2 * n, x1.end());
  rest.insert(rest.end(), x2.begin(), x2.end());
  require(rest.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(r - 3), family + ": A-part sizes");
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> part{x1[static_cast<std::size_t>(2 * i)], x1[static_cast<std::size_t>(2 * i + 1)]};
    part.insert(part.end(), rest.begin() + i * (r - 3), rest.begin() + (i + 1) * (r - 3));
    const Vertex p = a[static_cast<std::size_t>(2 * i)];
    const Vertex q = a[static_cast<std::size_t>(2 * i + 1)];
    b.join(p, q);
    for (Vertex v : part) {
      b.join(p, v);
      b.join(q, v);
    }
  }
  require(L.b_parts.size() == static_cast<std::size_t>(n), family + ": B-part count");
  for (int i = 0; i < n; ++i) {
    const auto& part = L.b_parts[static_cast<std::size_t>(i)];
    require(part.size() == static_cast<std::size_t>(r - 1), family + ": B-part size");
    const Vertex p = bb[static_cast<std::size_t>(2 * i)];
    const Vertex q = bb[static_cast<std::size_t>(2 * i + 1)];
    b.join(p, q);
    for (int slot : part) {
      b.join(p, slot_vertex[static_cast<std::size_t>(slot)]);
      b.join(q, slot_vertex[static_cast<std::size_t>(slot)]);
    }
  }

  std::vector<Vertex> w(x1.begin(), x1.begin() + 2 * n);
  w.push_back(bb[static_cast<std::size_t>(L.w_apexes[0] - 1)]);
  w.push_back(bb[static_cast<std::size_t>(L.w_apexes[1] - 1)]);
  std::vector<Vertex> s = x1;
  s.insert(s.end(), x2.begin(), x2.end());
  s.insert(s.end(), bb.begin(), bb.end());
  std::vector<Vertex> t = slot_vertex;
  t.insert(t.end(), a.begin(), a.end());

  FamilyInstance inst;
  inst.family = family;
  inst.graph = b.graph();
  inst.w = VertexSet(std::move(w));
  inst.witness = FamilyWitness{VertexSet(std::move(s)), VertexSet(std::move(t)), -2};
  inst.names = b.names();
  inst.claims.r = static_cast<std::size_t>(r);
  inst.claims.lambda_exact = static_cast<std::size_t>(r);
  inst.claims.terminal_load = 2;
  return inst;
}

// Every Y_2 slot appears in exactly one B part.
void require_partition(const Layered& L, const std::string& family) {
  std::vector<int> seen(L.slot_names.size(), 0);
  for (const auto& part : L.b_parts) {
    for (int slot : part) ++seen[static_cast<std::size_t>(slot)];
  }
  require(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }), family + ": B parts do not partition Y");
}

}  // namespace

FamilyInstance gen_prop2_general(int r, int m) {
  require(r >= 6, "prop2-general needs r >= 6");
  require(m % (r - 1) == 0, "prop2-general needs m divisible by r-1");
  require(m >= 2 * (r - 1) * (r - 1), "prop2-general needs m >= 2(r-1)^2");
  Layered L;
  L.r = r;
  L.m = m;
  L.n = (r - 2) * m / (r - 1);
  L.m1 = circulant_m1(m, r);

  // H_2: Z_m-lift of K_{r-4,r-2}; X_2 vertex (a,s) sees slot ((a + s*t) mod m, t).
  for (int bi = 0; bi < m; ++bi) {
    for (int t = 0; t < r - 2; ++t) L.slot_names.push_back(sub2("y", bi + 1, t + 1));
  }
  for (int ai = 0; ai < m; ++ai) {
    for (int s = 0; s < r - 4; ++s) {
      L.x2_names.push_back(sub2("X2", ai + 1, s + 1));
      std::vector<int> slots;
      for (int t = 0; t < r - 2; ++t) slots.push_back(static_cast<int>(mod(ai + s * t, m)) * (r - 2) + t);
      L.x2_slots.push_back(std::move(slots));
    }
  }
  require(L.slot_names.size() == L.m1.size(), "prop2-general: |Y_1| != |Y_2|");
  L.slot_of_y.resize(L.m1.size());
  std::iota(L.slot_of_y.begin(), L.slot_of_y.end(), 0);

  const std::vector<int> eligible = eligible_y(L);
  require(eligible.size() >= static_cast<std::size_t>(2 * (r - 1)), "prop2-general: too few eligible Y vertices");
  std::vector<char> used(L.m1.size(), 0);
  for (int part = 0; part < 2; ++part) {
    std::vector<int> slots;
    for (int i = 0; i < r - 1; ++i) {
      const int y = eligible[static_cast<std::size_t>(part * (r - 1) + i)];
      slots.push_back(y);
      used[static_cast<std::size_t>(y)] = 1;
    }
    L.b_parts.push_back(std::move(slots));
  }
  std::vector<int> others;
  for (std::size_t y = 0; y < L.m1.size(); ++y) {
    if (!used[y]) others.push_back(static_cast<int>(y));
  }
  for (std::size_t i = 0; i < others.size(); i += static_cast<std::size_t>(r - 1)) {
    L.b_parts.emplace_back(others.begin() + static_cast<std::ptrdiff_t>(i),
                           others.begin() + static_cast<std::ptrdiff_t>(i + static_cast<std::size_t>(r - 1)));
  }
  require_partition(L, "prop2-general");

  FamilyInstance inst = assemble_layered(L, "prop2-general");
  const Graph h1 = subdivision_h1(L);
  require_side_degrees(h1, static_cast<std::size_t>(2 * m), static_cast<std::size_t>(r - 2), 2, "H_1");
  note_report(inst, "H_1", essential_edge_connectivity_at_least(h1, 3));
  const Graph h2 = auxiliary_h2(L);
  require_side_degrees(h2, L.x2_slots.size(), static_cast<std::size_t>(r - 2), static_cast<std::size_t>(r - 4), "H_2");
  note_report(inst, "H_2", check_edge_connectivity(h2, static_cast<std::size_t>(r - 4)));
  note_report(inst, "H_2", essential_edge_connectivity_at_least(h2, static_cast<std::size_t>(r - 3)));
  self_check(inst);
  return inst;
}

FamilyInstance gen_prop2_r5(int m) {
  require(m % 4 == 0 && m >= 96, "prop2-r5 needs m divisible by 4 with m >= 96");
  Layered L;
  L.r = 5;
  L.m = m;
  L.n = 3 * m / 4;
  L.m1 = circulant_m1(m, 5);
  L.w_apexes = {1, 7};

  // H_2: m disjoint stars, centre X2_j with leaves y_{j,1}, y_{j,2}, y_{j,3}.
  auto slot = [&](long long j, int h) { return static_cast<int>(mod(j - 1, m)) * 3 + (h - 1); };
  for (int j = 1; j <= m; ++j) {
    for (int h = 1; h <= 3; ++h) L.slot_names.push_back(sub2("y", j, h));
  }
  for (int j = 1; j <= m; ++j) {
    L.x2_names.push_back(sub("X2", j));
    L.x2_slots.push_back({slot(j, 1), slot(j, 2), slot(j, 3)});
  }
  require(L.slot_names.size() == L.m1.size(), "prop2-r5: |Y_1| != |Y_2|");

  // The first eight eligible Y_1 vertices become y_{1,1}..y_{8,1}; the rest
  // fill the remaining slots in order.
  const std::vector<int> eligible = eligible_y(L);
  require(eligible.size() >= 8, "prop2-r5: too few eligible Y vertices");
  std::vector<int> order(eligible.begin(), eligible.begin() + 8);
  for (std::size_t y = 0; y < L.m1.size(); ++y) {
    if (std::find(order.begin(), order.begin() + 8, static_cast<int>(y)) == order.begin() + 8) {
      order.push_back(static_cast<int>(y));
    }
  }
  std::vector<int> slots;
  for (int j = 1; j <= 8; ++j) slots.push_back(slot(j, 1));
  for (int j = 1; j <= m; ++j) {
    for (int h = 1; h <= 3; ++h) {
      if (!(h == 1 && j <= 8)) slots.push_back(slot(j, h));
    }
  }
  L.slot_of_y.resize(L.m1.size());
  for (std::size_t i = 0; i < order.size(); ++i) L.slot_of_y[static_cast<std::size_t>(order[i])] = slots[i];

  // B_{3p+h} = { y_{j,h} : 4p+h <= j <= 4p+h+3 }, j taken mod m.
  for (int i = 1; i <= L.n; ++i) {
    const int p = (i - 1) / 3;
    const int h = (i - 1) % 3 + 1;
    std::vector<int> part;
    for (int j = 4 * p + h; j <= 4 * p + h + 3; ++j) part.push_back(slot(j, h));
    L.b_parts.push_back(std::move(part));
  }
  require_partition(L, "prop2-r5");

  FamilyInstance inst = assemble_layered(L, "prop2-r5");
  const Graph h1 = subdivision_h1(L);
  require_side_degrees(h1, static_cast<std::size_t>(2 * m), 3, 2, "H_1");
  note_report(inst, "H_1", essential_edge_connectivity_at_least(h1, 3));
  self_check(inst);
  return inst;
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t o : offsets) {
      const Edge e = Edge::make(static_cast<Vertex>(i), static_cast<Vertex>((i + o) % n));
      if (e.u != e.v) edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

// K_a x C_len: vertex (u, i) is u + a*i.
Graph clique_cycle(std::size_t a, std::size_t len) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t u = 0; u < a; ++u) {
      const auto v = static_cast<Vertex>(u + a * i);
      for (std::size_t u2 = u + 1; u2 < a; ++u2) edges.push_back(Edge::make(v, static_cast<Vertex>(u2 + a * i)));
      edges.push_back(Edge::make(v, static_cast<Vertex>(u + a * ((i + 1) % len))));
    }
  }
  return Graph(a * len, edges);
}

// Random simple d-regular graph by repeated configuration-model pairing.
std::optional<Graph> random_regular(std::size_t n, std::size_t d, Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Vertex> stubs;
    for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), d, static_cast<Vertex>(v));
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      ok = stubs[i] != stubs[i + 1];
      edges.push_back(Edge::make(stubs[i], stubs[i + 1]));
    }
    std::sort(edges.begin(), edges.end());
    if (!ok || std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, edges);
  }
  return std::nullopt;
}

Graph line_graph(const Graph& g) {
  const auto& es = g.edges();
  std::vector<std::vector<Vertex>> incident(g.vertex_count());
  for (std::size_t i = 0; i < es.size(); ++i) {
    incident[static_cast<std::size_t>(es[i].u)].push_back(static_cast<Vertex>(i));
    incident[static_cast<std::size_t>(es[i].v)].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  for (const auto& inc : incident) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) edges.push_back(Edge::make(inc[i], inc[j]));
    }
  }
  return Graph(es.size(), edges);
}

std::optional<Graph> random_candidate(int r, std::size_t size, Rng& rng) {
  const auto ur = static_cast<std::size_t>(r);
  const std::size_t n = std::max(size, 2 * ur + 2) + uniform(rng, 0, std::max<std::size_t>(1, size / 2));
  const bool odd = r % 2 == 1;
  switch (uniform(rng, 0, 3)) {
    case 0: {
      std::vector<std::size_t> offsets(ur / 2);
      std::iota(offsets.begin(), offsets.end(), 1);
      const std::size_t even_n = n + (n % 2);
      if (odd) offsets.push_back(even_n / 2);
      return circulant(odd ? even_n : n, offsets);
    }
    case 1: {
      const std::size_t a = ur - 1;
      return clique_cycle(a, std::max<std::size_t>(3, n / a));
    }
    case 2: {
      if (r != 4 && r != 6) return std::nullopt;
      // Line graphs of d-regular graphs are 2(d-1)-regular.
      const std::size_t d = r == 4 ? 3 : 4;
      std::size_t base = std::max<std::size_t>(d + 3, n * 2 / d);
      if ((base * d) % 2) ++base;
      auto g = random_regular(base, d, rng);
      if (!g) return std::nullopt;
      return line_graph(*g);
    }
    default: {
      const std::size_t even_n = n + (n % 2);
      const std::size_t nn = odd ? even_n : n;
      std::vector<std::size_t> offsets;
      while (offsets.size() < ur / 2) {
        const std::size_t o = uniform(rng, 1, (nn - 1) / 2);
        if (std::find(offsets.begin(), offsets.end(), o) == offsets.end()) offsets.push_back(o);
      }
      if (odd) offsets.push_back(nn / 2);
      return circulant(nn, offsets);
    }
  }
}

}  // namespace

FamilyInstance random_valid_instance(int r, std::size_t size, std::uint64_t seed) {
  require(r >= 4 && r <= 64, "random instances need 4 <= r <= 64");
  require(size >= 1 && size <= 100'000, "random instance size out of range");
  Rng rng(seed);
  const auto ur = static_cast<std::size_t>(r);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::optional<Graph> candidate = random_candidate(r, size, rng);
    if (!candidate) continue;
    std::vector<Vertex> perm(candidate->vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph g = relabel(*candidate, perm);
    if (!check_regular(g, ur).holds() || find_induced_star(g, ur) || edge_connectivity(g).lambda < ur) continue;

    // Greedy terminals: v joins unless it shares a neighbour with a member.
    std::vector<char> covered(g.vertex_count(), 0);
    std::vector<Vertex> greedy;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto nb = g.neighbors(static_cast<Vertex>(v));
      if (std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return covered[static_cast<std::size_t>(u)]; })) continue;
      greedy.push_back(static_cast<Vertex>(v));
      for (Vertex u : nb) covered[static_cast<std::size_t>(u)] = 1;
    }
    const std::size_t target = 2 * uniform(rng, 0, greedy.size() / 2);
    greedy.resize(target);

    FamilyInstance inst;
    inst.family = "random";
    inst.graph = g;
    inst.w = VertexSet(std::move(greedy));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) inst.names.emplace_back(sub("v", static_cast<long long>(v)), v);
    inst.claims.r = ur;
    inst.claims.lambda_at_least = ur;
    inst.claims.terminal_mode = TerminalMode::nbhd1;
    self_check(inst);
    return inst;
  }
  throw FamilyError("no valid random instance for r=" + std::to_string(r) + " within the attempt budget");
}

}  // namespace pcs
