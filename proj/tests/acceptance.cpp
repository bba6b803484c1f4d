// Acceptance run: one PASS/FAIL line per criterion. Optional arguments select
// criteria by number; with none, all seven run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracles.hpp"
#include "pcs/cli.hpp"
#include "pcs/discharge.hpp"
#include "pcs/factor.hpp"
#include "pcs/families.hpp"
#include "pcs/io.hpp"
#include "pcs/tutte.hpp"
#include "pcs/verify.hpp"

using namespace pcs;
using namespace pcs::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 10) problems.push_back(what);
  }
};

// ---- criterion 1: solve, brute force and certificate search agree ----

Outcome duality_suite() {
  Outcome o;
  BruteForceOptions brute;
  brute.max_edges = 64;
  CertificateOptions search;
  search.max_vertices = 10;
  std::size_t graphs = 0;
  std::size_t cases = 0;
  std::size_t feasible = 0;
  std::size_t disagreements = 0;

  auto run_case = [&](const Graph& g, const VertexSet& w) {
    ++cases;
    const DegreeSpec f = degree_spec_from_terminals(g, w);
    const auto system = solve(g, w);
    const auto factor = brute_force_f_factor(g, f, brute);
    const auto cert = search_certificate(g, f, search);
    const bool by_solve = system.has_value();
    const bool by_brute = factor.has_value();
    const bool by_cert = cert.status == CertificateSearch::Status::none;
    std::ostringstream tag;
    tag << "n=" << g.vertex_count() << " m=" << g.edge_count() << " W={" << serialize_terminals(w) << "}";
    if (cert.status == CertificateSearch::Status::undecided) {
      o.require(false, "certificate search undecided on " + tag.str());
      ++disagreements;
      return;
    }
    if (by_solve != by_brute || by_brute != by_cert) {
      ++disagreements;
      o.require(false, "disagreement on " + tag.str());
    }
    if (system) o.require(!validate_system(g, w, *system).has_value(), "invalid system on " + tag.str());
    if (factor) o.require(is_f_factor(g, f, *factor), "invalid brute-force factor on " + tag.str());
    if (cert.certificate) {
      o.require(naive_delta(g, f, cert.certificate->s, cert.certificate->t) < 0,
                "certificate not negative under the independent delta on " + tag.str());
    }
    feasible += by_solve;
  };

  for (const Graph& g : connected_graphs_up_to(7)) {
    ++graphs;
    for (const VertexSet& w : even_subsets(g.vertex_count())) run_case(g, w);
  }
  const std::size_t small_graphs = graphs;

  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> density(0.2, 0.75);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 8 + static_cast<std::size_t>(rng() % 3);
    const Graph g = random_graph(n, density(rng), rng);
    ++graphs;
    std::set<std::uint32_t> picked;
    while (picked.size() < 20) {
      const auto mask = static_cast<std::uint32_t>(rng() & ((1u << n) - 1));
      if (__builtin_popcount(mask) % 2 == 0) picked.insert(mask);
    }
    for (std::uint32_t mask : picked) {
      std::vector<Vertex> vs;
      for (std::size_t v = 0; v < n; ++v) {
        if ((mask >> v) & 1u) vs.push_back(static_cast<Vertex>(v));
      }
      run_case(g, VertexSet(vs));
    }
  }

  std::ostringstream s;
  s << small_graphs << " connected graphs on <=7 vertices + 500 random graphs on 8-10 vertices, " << cases
    << " terminal sets, " << feasible << " feasible, " << disagreements << " disagreements";
  o.summary = s.str();
  o.require(small_graphs == 996, "expected 996 connected graphs on <=7 vertices, got " + std::to_string(small_graphs));
  return o;
}

// ---- criterion 2: the stated numbers ----

DeltaTerms witness_terms(const FamilyInstance& inst) {
  const DegreeSpec f = degree_spec_from_terminals(inst.graph, inst.w);
  return delta_terms(inst.graph, f, inst.witness->s, inst.witness->t);
}

Outcome stated_numbers() {
  Outcome o;
  {
    const FamilyInstance inst = gen_prop1_odd(5, 6);
    const DeltaTerms d = witness_terms(inst);
    o.require(d.f_s == 10, "prop1-odd(5,6): f(S)=" + std::to_string(d.f_s));
    o.require(d.q == 12, "prop1-odd(5,6): q=" + std::to_string(d.q));
    o.require(d.value() == -2, "prop1-odd(5,6): delta=" + std::to_string(d.value()));
  }
  {
    const FamilyInstance inst = gen_prop1_even(10, 12);
    const DeltaTerms d = witness_terms(inst);
    o.require(d.f_s == 8, "prop1-even(10,12): f(S)=" + std::to_string(d.f_s));
    o.require(d.q == 10, "prop1-even(10,12): q=" + std::to_string(d.q));
    o.require(d.value() == -2, "prop1-even(10,12): delta=" + std::to_string(d.value()));
  }
  {
    const int n = 6;
    const FamilyInstance inst = gen_prop2_r4(n);
    const DeltaTerms d = witness_terms(inst);
    const auto s = static_cast<long long>(inst.witness->s.size());
    const auto t = static_cast<long long>(inst.witness->t.size());
    const auto w = static_cast<long long>(inst.w.size());
    o.require(s == 5 * n && t == 5 * n, "prop2-r4(6): |S|,|T| not 5n");
    o.require(w == 2 * n + 2, "prop2-r4(6): |W|=" + std::to_string(w));
    o.require(d.f_s == 2 * s - w, "prop2-r4(6): f(S) is not 2|S|-|W|");
    o.require(d.deg_t == 2 * n, "prop2-r4(6): deg_{G-S}(T) is not 2n");
    o.require(d.f_t == 2 * t, "prop2-r4(6): f(T) is not 2|T|");
    o.require(d.q == 0, "prop2-r4(6): q is not 0");
    o.require(d.value() == 2 * s - w + 2 * n - 2 * t - 0, "prop2-r4(6): closed form mismatch");
    o.require(d.value() == -2, "prop2-r4(6): delta=" + std::to_string(d.value()));
  }
  std::vector<FamilyInstance> all;
  all.push_back(gen_prop1_odd(5, 6));
  all.push_back(gen_prop1_even(6, 6));
  all.push_back(gen_prop1_even(8, 8));
  all.push_back(gen_prop1_even(10, 12));
  all.push_back(gen_prop1_bipartite(4, 8));
  all.push_back(gen_prop2_r4(6));
  all.push_back(gen_prop2_general(6, 50));
  all.push_back(gen_prop2_r5(96));
  for (int r = 4; r <= 6; ++r) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) all.push_back(random_valid_instance(r, 30, seed));
  }
  std::size_t checked = 0;
  for (const FamilyInstance& inst : all) {
    if (!is_connected(inst.graph)) continue;
    ++checked;
    const DegreeSpec f = degree_spec_from_terminals(inst.graph, inst.w);
    o.require(delta(inst.graph, f, VertexSet{}, VertexSet{}) == 0, inst.family + ": delta(empty,empty) != 0");
  }
  o.require(checked == all.size(), "a generated instance is disconnected");
  o.summary = "prop1-odd(5,6) f(S)=10 q=12 delta=-2; prop1-even(10,12) f(S)=8 q=10 delta=-2; prop2-r4(6) delta=-2; "
              "delta(empty,empty)=0 on " +
              std::to_string(checked) + " connected instances";
  return o;
}

// ---- criterion 3: generator outputs have their structural properties ----

Outcome family_validity() {
  Outcome o;
  struct Case {
    FamilyInstance inst;
    std::size_t r;
    bool star_free;
    std::optional<std::size_t> lambda_exact;
    std::optional<std::size_t> lambda_at_least;
    bool distance3;
  };
  std::vector<Case> cases;
  cases.push_back({gen_prop1_odd(5, 6), 5, true, 4, std::nullopt, true});
  cases.push_back({gen_prop1_even(6, 6), 6, true, std::nullopt, 4, true});
  cases.push_back({gen_prop1_even(8, 8), 8, true, std::nullopt, 6, true});
  cases.push_back({gen_prop1_bipartite(4, 8), 4, false, std::nullopt, std::nullopt, true});
  cases.push_back({gen_prop2_r4(6), 4, true, 4, std::nullopt, false});
  cases.push_back({gen_prop2_general(6, 50), 6, true, 6, std::nullopt, false});
  cases.push_back({gen_prop2_r5(96), 5, true, 5, std::nullopt, false});

  std::ostringstream s;
  for (const Case& c : cases) {
    const Graph& g = c.inst.graph;
    const std::string tag = c.inst.family;
    o.require(check_regular(g, c.r).holds(), tag + ": not regular");
    const bool star_free = check_star_free(g, c.r).holds();
    o.require(star_free == c.star_free, tag + (c.star_free ? ": contains an induced star" : ": is star-free"));
    const std::size_t lambda = edge_connectivity(g).lambda;
    if (c.lambda_exact) o.require(lambda == *c.lambda_exact, tag + ": lambda=" + std::to_string(lambda));
    if (c.lambda_at_least) o.require(lambda >= *c.lambda_at_least, tag + ": lambda=" + std::to_string(lambda));
    if (c.distance3) {
      o.require(check_terminal_set(g, c.inst.w, TerminalMode::distance3).holds(), tag + ": terminals too close");
    } else {
      o.require(terminal_load(g, c.inst.w).max_load == 2, tag + ": max |N(v) n W| is not 2");
    }
    for (const auto& rep : verify_instance(c.inst)) o.require(rep.holds(), tag + ": " + rep.to_line());
    s << tag << " n=" << g.vertex_count() << " lambda=" << lambda << "; ";
  }
  o.summary = s.str();
  o.summary.resize(o.summary.size() - 2);
  return o;
}

// ---- criteria 4 and 5 share the random instances ----

std::vector<FamilyInstance>& random_instances() {
  static std::vector<FamilyInstance> all = [] {
    std::vector<FamilyInstance> out;
    for (int r = 4; r <= 6; ++r) {
      for (std::uint64_t seed = 0; seed < 200; ++seed) out.push_back(random_valid_instance(r, 30, seed));
    }
    return out;
  }();
  return all;
}

Outcome end_to_end() {
  Outcome o;
  std::size_t feasible = 0;
  std::size_t vertices = 0;
  for (const FamilyInstance& inst : random_instances()) {
    vertices += inst.graph.vertex_count();
    const auto system = solve(inst.graph, inst.w);
    if (!system) {
      o.require(false, "infeasible: " + inst.family + " W={" + serialize_terminals(inst.w) + "}");
      continue;
    }
    const auto defect = validate_system(inst.graph, inst.w, *system);
    o.require(!defect.has_value(), inst.family + ": " + defect.value_or(""));
    feasible += !defect.has_value();
  }
  std::ostringstream s;
  s << feasible << "/" << random_instances().size() << " instances (r=4,5,6 x 200 seeds, mean "
    << vertices / random_instances().size() << " vertices) solved with valid systems";
  o.summary = s.str();
  return o;
}

Outcome discharging() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t pairs = 0;
  std::size_t instances = 0;
  for (const FamilyInstance& inst : random_instances()) {
    const int r = static_cast<int>(inst.claims.r);
    const Hypotheses h = assess_hypotheses(inst.graph, inst.w, r);
    o.require(h.regular && h.star_free && h.edge_connected && h.nbhd1, inst.family + ": hypotheses do not hold");
    const DegreeSpec f = degree_spec_from_terminals(inst.graph, inst.w);
    ++instances;
    for (int i = 0; i < 1000; ++i) {
      const auto [s, t] = sample_pair_independent_t(inst.graph, rng);
      ++pairs;
      const DischargeReport rep = discharge(inst.graph, inst.w, s, t, r, &h);
      const std::string tag = inst.family + " S={" + serialize_terminals(s) + "} T={" + serialize_terminals(t) + "}";
      o.require(rep.conservation, "conservation: " + tag);
      o.require(rep.identity, "identity: " + tag);
      o.require(rep.claim3.holds && rep.claim4.holds && rep.claim5.holds, "bound: " + tag);
      o.require(rep.nonnegative_implied, "not implied: " + tag);
      o.require(rep.delta_consistent, "charges disagree with delta: " + tag);
      o.require(rep.delta == delta(inst.graph, f, s, t), "delta mismatch: " + tag);
      o.require(rep.delta >= 0, "negative delta: " + tag);
    }
  }
  o.summary = std::to_string(pairs) + " pairs over " + std::to_string(instances) +
              " instances: conservation, identity, bounds and delta >= 0 exact";
  return o;
}

// ---- criterion 6: counterexamples are infeasible and replay ----

Outcome infeasibility() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("pcs-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  struct Case {
    std::string label;
    std::vector<std::string> gen;
  };
  const std::vector<Case> cases{
      {"prop1-odd(5,6)", {"--family", "prop1-odd", "--r", "5", "--k", "6"}},
      {"prop1-even(10,12)", {"--family", "prop1-even", "--r", "10", "--k", "12"}},
      {"prop2-r4(6)", {"--family", "prop2-r4", "--n", "6"}},
  };
  std::ostringstream s;
  for (const Case& c : cases) {
    const std::string prefix = (dir / c.label).string();
    std::vector<std::string> args{"generate"};
    args.insert(args.end(), c.gen.begin(), c.gen.end());
    args.push_back("--out");
    args.push_back(prefix);
    std::ostringstream sink;
    o.require(run(args, sink, sink) == exit_pass, c.label + ": generate failed");

    const Graph g = parse_graph(read_file(prefix + ".graph"));
    const VertexSet w = parse_terminals(read_file(prefix + ".terminals"), g.vertex_count());
    auto start = Clock::now();
    const bool infeasible = !solve(g, w).has_value();
    const double solve_time = seconds_since(start);
    o.require(infeasible, c.label + ": solve found a system");
    o.require(solve_time < 60.0, c.label + ": solve took " + std::to_string(solve_time) + " s");

    start = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(std::vector<std::string>{"certify", "--graph", prefix + ".graph", "--terminals",
                                                  prefix + ".terminals", "--witness", prefix + ".witness"},
                         out, err);
    const double replay_time = seconds_since(start);
    o.require(code == exit_fail, c.label + ": replay exit " + std::to_string(code) + " " + err.str());
    o.require(parse_witness(out.str()).delta == -2, c.label + ": replay delta is not -2");
    o.require(replay_time < 1.0, c.label + ": replay took " + std::to_string(replay_time) + " s");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s n=%zu solve %.3fs replay %.3fs; ", c.label.c_str(), g.vertex_count(),
                  solve_time, replay_time);
    s << buf;
  }
  std::filesystem::remove_all(dir);
  o.summary = s.str();
  o.summary.resize(o.summary.size() - 2);
  return o;
}

// ---- criterion 7: rule constants ----

Outcome rule_inequalities() {
  Outcome o;
  for (int r = 4; r <= 64; ++r) {
    const RuleConstants c = rule_constants(r);
    const long long rr = r;
    o.require(c.s1_out == Charge(1, rr), "r=" + std::to_string(r) + ": S1 amount");
    o.require(c.s2_to_t == Charge(2 * rr - 1, rr * (rr - 1)), "r=" + std::to_string(r) + ": S2 amount");
    o.require(c.d_to_t == Charge(rr - 1, rr), "r=" + std::to_string(r) + ": component amount");
    o.require(c.s1_out <= c.s2_to_t && c.s2_to_t <= c.d_to_t, "r=" + std::to_string(r) + ": order fails");
    const Charge bound(3 * rr * rr - 5 * rr + 1, rr * (rr - 1));
    o.require(c.claim4_worst_case() == bound, "r=" + std::to_string(r) + ": worst case differs from closed form");
    o.require(bound >= Charge(2), "r=" + std::to_string(r) + ": bound below 2");
  }
  o.summary = "r=4..64: 1/r <= (2r-1)/(r(r-1)) <= (r-1)/r and (3r^2-5r+1)/(r(r-1)) >= 2 (r=4 gives " +
              to_string(rule_constants(4).claim4_worst_case()) + ")";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{duality_suite,  stated_numbers, family_validity,
                                                       end_to_end,     discharging,    infeasibility,
                                                       rule_inequalities};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= 7; ++i) selected.push_back(i);
  }
  bool all = true;
  for (int k : selected) {
    if (k < 1 || k > 7) {
      std::cerr << "unknown criterion " << k << "\n";
      return 2;
    }
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1fs", seconds_since(start));
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.summary << " (" << secs
              << ")\n";
    for (const auto& p : o.problems) std::cout << "  " << p << "\n";
    std::cout.flush();
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
