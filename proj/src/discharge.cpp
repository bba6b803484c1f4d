#include "pcs/discharge.hpp"

#include <sstream>
#include <stdexcept>

#include "pcs/tutte.hpp"
#include "pcs/verify.hpp"

namespace pcs {

std::string to_string(const Charge& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

bool RuleConstants::ordered() const { return s1_out <= s2_to_t && s2_to_t <= d_to_t; }

Charge RuleConstants::claim4_worst_case() const {
  return Charge(1) + s2_to_t * Charge(r - 2) + s1_out;
}

RuleConstants rule_constants(int r) {
  if (r < 4) throw std::invalid_argument("discharging rules need r >= 4, got " + std::to_string(r));
  RuleConstants c;
  c.r = r;
  c.s1_out = Charge(1, r);
  c.s2_to_t = Charge(2LL * r - 1, static_cast<long long>(r) * (r - 1));
  c.s2_to_d = Charge(1, r);
  c.d_to_t = Charge(r - 1, r);
  return c;
}

Hypotheses assess_hypotheses(const Graph& g, const VertexSet& w, int r) {
  if (r < 1) throw std::invalid_argument("degree must be positive");
  const auto rr = static_cast<std::size_t>(r);
  Hypotheses h;
  h.r = r;
  h.regular = check_regular(g, rr).holds();
  h.star_free = !find_induced_star(g, rr).has_value();
  h.edge_connected = edge_connectivity(g).lambda >= rr;
  h.nbhd1 = terminal_load(g, w).max_load <= 1;
  return h;
}

bool DischargeReport::violation() const {
  if (!conservation || !identity || !delta_consistent) return true;
  if (nonnegative_implied && delta < 0) return true;
  for (const ClaimCheck* c : {&claim3, &claim4, &claim5}) {
    if (c->guaranteed && !c->holds) return true;
  }
  return false;
}

namespace {

std::string join(const VertexSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::string claim_line(const ClaimCheck& c) {
  std::string out = c.name + ": " + (c.holds ? "PASS" : "FAIL");
  if (c.first_violation) out += " " + *c.first_violation;
  if (c.guaranteed) {
    out += " (guaranteed)";
  } else {
    out += " (not guaranteed; unmet:";
    for (const auto& p : c.unmet_preconditions) out += " " + p;
    out += ")";
  }
  return out;
}

}  // namespace

std::string DischargeReport::to_text() const {
  std::ostringstream out;
  out << "rules: r=" << constants.r << " S1->T,D " << to_string(constants.s1_out) << " S2->T "
      << to_string(constants.s2_to_t) << " S2->D " << to_string(constants.s2_to_d) << " D->T "
      << to_string(constants.d_to_t) << (constants.ordered() ? " ordered" : " NOT ordered") << "\n";
  out << "sets: S1=" << join(state.s1) << " S2=" << join(state.s2) << " T=" << join(state.t)
      << " q=" << state.components.size() << " |U|=" << state.u.size() << "\n";
  out << "conservation: " << (conservation ? "PASS" : "FAIL") << " initial=" << to_string(total_initial)
      << " final=" << to_string(total_final) << "\n";
  out << "identity: " << (identity ? "PASS" : "FAIL") << " charges=" << to_string(identity_lhs)
      << " f(S)+deg(T)-e(T,U)=" << identity_rhs << "\n";
  out << claim_line(claim3) << "\n" << claim_line(claim4) << "\n" << claim_line(claim5) << "\n";
  out << "delta: " << delta << " via charges " << to_string(delta_via_charges)
      << (delta_consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
  out << "conclusion: "
      << (nonnegative_implied ? (delta >= 0 ? "delta >= 0 implied and confirmed" : "delta >= 0 implied but FALSE")
                              : "delta >= 0 not implied")
      << "\n";
  return out.str();
}

DischargeReport discharge(const Graph& g, const VertexSet& w, const VertexSet& s, const VertexSet& t, int r,
                          const Hypotheses* hypotheses) {
  DischargeReport rep;
  rep.constants = rule_constants(r);
  const RuleConstants& k = rep.constants;
  const std::size_t n = g.vertex_count();
  const DegreeSpec f = degree_spec_from_terminals(g, w);

  Hypotheses local;
  if (!hypotheses) {
    local = assess_hypotheses(g, w, r);
    hypotheses = &local;
  } else if (hypotheses->r != r) {
    throw std::invalid_argument("hypotheses were assessed for a different r");
  }

  ChargeState& st = rep.state;
  st.components = odd_components(g, f, s, t);
  st.t = t;
  std::vector<Vertex> s1;
  std::vector<Vertex> s2;
  for (Vertex x : s) (f[x] == 1 ? s1 : s2).push_back(x);
  st.s1 = VertexSet(std::move(s1));
  st.s2 = VertexSet(std::move(s2));

  enum Role : char { none, in_s1, in_s2, in_t, in_u };
  std::vector<Role> role(n, none);
  std::vector<std::size_t> comp_of(n, 0);
  for (Vertex x : st.s1) role[static_cast<std::size_t>(x)] = in_s1;
  for (Vertex x : st.s2) role[static_cast<std::size_t>(x)] = in_s2;
  for (Vertex y : t) role[static_cast<std::size_t>(y)] = in_t;
  std::vector<Vertex> u;
  for (std::size_t i = 0; i < st.components.size(); ++i) {
    for (Vertex z : st.components[i]) {
      role[static_cast<std::size_t>(z)] = in_u;
      comp_of[static_cast<std::size_t>(z)] = i;
      u.push_back(z);
    }
  }
  st.u = VertexSet(std::move(u));

  // Initial charges.
  for (Vertex x : st.s1) st.initial[x] = 1;
  for (Vertex x : st.s2) st.initial[x] = 2;
  long long e_tu = 0;
  for (Vertex y : t) {
    long long outside = 0;
    for (Vertex v : g.neighbors(y)) {
      const Role rv = role[static_cast<std::size_t>(v)];
      if (rv == in_u) ++e_tu;
      if (rv != in_s1 && rv != in_s2 && rv != in_u) ++outside;
    }
    st.initial[y] = outside;
  }
  st.final = st.initial;
  st.component_final.assign(st.components.size(), Charge(0));

  // Rules, applied once per edge.
  for (const Edge& e : g.edges()) {
    for (int side = 0; side < 2; ++side) {
      const Vertex a = side == 0 ? e.u : e.v;
      const Vertex b = side == 0 ? e.v : e.u;
      const Role ra = role[static_cast<std::size_t>(a)];
      const Role rb = role[static_cast<std::size_t>(b)];
      Charge amount;
      if (ra == in_s1 && (rb == in_t || rb == in_u)) {
        amount = k.s1_out;
      } else if (ra == in_s2 && rb == in_t) {
        amount = k.s2_to_t;
      } else if (ra == in_s2 && rb == in_u) {
        amount = k.s2_to_d;
      } else if (ra == in_u && rb == in_t) {
        amount = k.d_to_t;
      } else {
        continue;
      }
      if (ra == in_u) {
        st.component_final[comp_of[static_cast<std::size_t>(a)]] -= amount;
      } else {
        st.final[a] -= amount;
      }
      if (rb == in_u) {
        st.component_final[comp_of[static_cast<std::size_t>(b)]] += amount;
      } else {
        st.final[b] += amount;
      }
    }
  }

  // Conservation and the charge identity.
  for (const auto& [v, c] : st.initial) rep.total_initial += c;
  for (const auto& [v, c] : st.final) rep.total_final += c;
  for (const Charge& c : st.component_final) rep.total_final += c;
  rep.conservation = rep.total_initial == rep.total_final;

  const DeltaTerms terms = delta_terms(g, f, s, t);
  rep.identity_lhs = rep.total_initial;
  rep.identity_rhs = terms.f_s + terms.deg_t - e_tu;
  rep.identity = rep.identity_lhs == Charge(rep.identity_rhs);

  // Final-charge bounds.
  const bool t_independent = is_independent(g, t);
  auto preconditions = [&](ClaimCheck& c, bool need_regular, bool need_star_free, bool need_connected,
                           bool need_nbhd1, bool need_t_independent) {
    if (need_regular && !hypotheses->regular) c.unmet_preconditions.push_back("regular(" + std::to_string(r) + ")");
    if (need_star_free && !hypotheses->star_free) {
      c.unmet_preconditions.push_back("star-free(" + std::to_string(r) + ")");
    }
    if (need_connected && !hypotheses->edge_connected) {
      c.unmet_preconditions.push_back("edge-connectivity>=" + std::to_string(r));
    }
    if (need_nbhd1 && !hypotheses->nbhd1) c.unmet_preconditions.push_back("terminals-nbhd1");
    if (need_t_independent && !t_independent) c.unmet_preconditions.push_back("T-independent");
    c.guaranteed = c.unmet_preconditions.empty();
  };

  rep.claim3.name = "claim3";
  preconditions(rep.claim3, true, true, false, false, true);
  for (Vertex x : s) {
    if (st.final[x] < 0) {
      rep.claim3.holds = false;
      rep.claim3.first_violation = "vertex " + std::to_string(x) + " ends with " + to_string(st.final[x]);
      break;
    }
  }

  rep.claim4.name = "claim4";
  preconditions(rep.claim4, true, false, false, true, false);
  for (Vertex y : t) {
    if (st.final[y] < 2) {
      rep.claim4.holds = false;
      rep.claim4.first_violation = "vertex " + std::to_string(y) + " ends with " + to_string(st.final[y]);
      break;
    }
  }

  rep.claim5.name = "claim5";
  preconditions(rep.claim5, false, false, true, false, false);
  for (std::size_t i = 0; i < st.components.size(); ++i) {
    long long e_td = 0;
    for (Vertex z : st.components[i]) {
      for (Vertex v : g.neighbors(z)) e_td += role[static_cast<std::size_t>(v)] == in_t;
    }
    if (st.component_final[i] < Charge(1 - e_td)) {
      rep.claim5.holds = false;
      rep.claim5.first_violation = "component " + join(st.components[i]) + " ends with " +
                                   to_string(st.component_final[i]) + " < " + std::to_string(1 - e_td);
      break;
    }
  }

  rep.delta = terms.value();
  rep.delta_via_charges = rep.total_final + Charge(e_tu - terms.f_t - terms.q);
  rep.delta_consistent = rep.delta_via_charges == Charge(rep.delta);
  rep.nonnegative_implied = rep.claim3.holds && rep.claim4.holds && rep.claim5.holds;
  return rep;
}

}  // namespace pcs
