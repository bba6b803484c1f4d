#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "pcs/factor.hpp"
#include "pcs/graph.hpp"

namespace pcs {

using Charge = boost::rational<long long>;

std::string to_string(const Charge& c);

/// Amounts moved by the discharging rules for degree r.
struct RuleConstants {
  int r = 0;
  Charge s1_out;   // S_1 vertex to a T vertex or to an odd component
  Charge s2_to_t;  // S_2 vertex to a T vertex
  Charge s2_to_d;  // S_2 vertex to an odd component
  Charge d_to_t;   // odd component to a T vertex

  /// 1/r <= (2r-1)/(r(r-1)) <= (r-1)/r.
  bool ordered() const;
  /// Lower bound on the final charge of a T vertex with one neighbour outside
  /// S and U, one S_1 neighbour and r-2 S_2 neighbours: (3r^2-5r+1)/(r(r-1)).
  Charge claim4_worst_case() const;
};

/// Throws std::invalid_argument for r < 4.
RuleConstants rule_constants(int r);

/// Graph-level hypotheses the final-charge bounds rely on.
struct Hypotheses {
  int r = 0;
  bool regular = false;
  bool star_free = false;
  bool edge_connected = false;
  bool nbhd1 = false;
};

/// Evaluates r-regularity, K_{1,r}-freeness, r-edge-connectivity and
/// |N(v) n W| <= 1. Cost is dominated by the connectivity check, so callers
/// discharging many pairs on one graph should compute this once.
Hypotheses assess_hypotheses(const Graph& g, const VertexSet& w, int r);

struct ChargeState {
  VertexSet s1;
  VertexSet s2;
  VertexSet t;
  VertexSet u;
  std::vector<VertexSet> components;
  std::map<Vertex, Charge> initial;
  std::map<Vertex, Charge> final;
  std::vector<Charge> component_final;
};

struct ClaimCheck {
  std::string name;
  bool holds = true;
  /// True when every precondition of the bound holds on this input.
  bool guaranteed = false;
  std::vector<std::string> unmet_preconditions;
  std::optional<std::string> first_violation;
};

struct DischargeReport {
  RuleConstants constants;
  ChargeState state;

  Charge total_initial;
  Charge total_final;
  bool conservation = false;

  /// Sum of initial charges on S u T against f(S) + deg_{G-S}(T) - e(T,U).
  Charge identity_lhs;
  long long identity_rhs = 0;
  bool identity = false;

  ClaimCheck claim3;  // final charge >= 0 on S
  ClaimCheck claim4;  // final charge >= 2 on T
  ClaimCheck claim5;  // final charge of D >= 1 - e(T,D)

  long long delta = 0;
  /// Sum of final charges + e(T,U) - f(T) - q.
  Charge delta_via_charges;
  bool delta_consistent = false;
  /// All three bounds hold, which forces delta >= 0.
  bool nonnegative_implied = false;

  /// A bound that was guaranteed by its preconditions failed, or an
  /// unconditional identity broke.
  bool violation() const;
  std::string to_text() const;
};

/// Runs the discharging procedure on (S,T) with f derived from w. Throws
/// GraphError when s and t overlap or lie outside the graph, and
/// std::invalid_argument for r < 4.
DischargeReport discharge(const Graph& g, const VertexSet& w, const VertexSet& s, const VertexSet& t, int r,
                          const Hypotheses* hypotheses = nullptr);

}  // namespace pcs
