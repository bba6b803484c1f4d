#include "pcs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "pcs/discharge.hpp"
#include "pcs/factor.hpp"
#include "pcs/families.hpp"
#include "pcs/io.hpp"
#include "pcs/tutte.hpp"
#include "pcs/verify.hpp"

namespace pcs {

namespace {

struct Inputs {
  std::string graph;
  std::string terminals;
};

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

VertexSet load_terminals(const std::string& path, const Graph& g) {
  return parse_terminals(read_file(path), g.vertex_count());
}

void require_in_graph(const Graph& g, const VertexSet& vs, const char* what) {
  for (Vertex v : vs) {
    if (!g.valid(v)) throw GraphError(std::string(what) + " vertex " + std::to_string(v) + " is not in the graph");
  }
}

int cmd_solve(const Inputs& in, std::ostream& out) {
  const Graph g = load_graph(in.graph);
  const VertexSet w = load_terminals(in.terminals, g);
  const auto system = solve(g, w);
  if (system) {
    if (auto defect = validate_system(g, w, *system)) throw std::logic_error("solver produced a bad system: " + *defect);
  }
  out << serialize_system(system);
  return system ? exit_pass : exit_fail;
}

int cmd_oracle(const Inputs& in, std::ostream& out) {
  const Graph g = load_graph(in.graph);
  const VertexSet w = load_terminals(in.terminals, g);
  const DegreeSpec f = degree_spec_from_terminals(g, w);
  std::optional<FFactor> factor;
  try {
    factor = brute_force_f_factor(g, f);
  } catch (const ScaleLimitExceeded& e) {
    out << "UNDECIDED " << e.what() << "\n";
    return exit_undecided;
  }
  std::optional<PathCycleSystem> system;
  if (factor) system = decompose_system(*factor, w);
  out << serialize_system(system);
  return system ? exit_pass : exit_fail;
}

struct VerifyRequest {
  std::optional<std::size_t> regular;
  std::optional<std::size_t> edge_connectivity;
  std::optional<std::size_t> star_free;
  std::string terminals;
  std::string mode;
  bool path_system = false;
};

int cmd_verify(const Inputs& in, const VerifyRequest& req, std::ostream& out) {
  const Graph g = load_graph(in.graph);
  std::vector<PropertyReport> reports;
  if (req.regular) reports.push_back(check_regular(g, *req.regular));
  if (req.edge_connectivity) reports.push_back(check_edge_connectivity(g, *req.edge_connectivity));
  if (req.star_free) reports.push_back(check_star_free(g, *req.star_free));
  if (!req.terminals.empty()) {
    const VertexSet w = load_terminals(req.terminals, g);
    reports.push_back(check_terminal_set(g, w, req.mode == "nbhd1" ? TerminalMode::nbhd1 : TerminalMode::distance3));
  }
  if (req.path_system) reports.push_back(path_system_criterion(g));
  if (reports.empty()) throw CLI::ValidationError("verify needs at least one check");
  bool failed = false;
  bool undecided = false;
  for (const auto& rep : reports) {
    out << rep.to_line() << "\n";
    failed |= rep.fails();
    undecided |= rep.verdict == Verdict::undecided;
  }
  if (failed) return exit_fail;
  return undecided ? exit_undecided : exit_pass;
}

struct CertifyRequest {
  bool exhaustive = false;
  std::string witness;
  std::string s;
  std::string t;
  unsigned jobs = 1;
};

int cmd_certify(const Inputs& in, const CertifyRequest& req, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(in.graph);
  const VertexSet w = load_terminals(in.terminals, g);
  const DegreeSpec f = degree_spec_from_terminals(g, w);
  if (req.exhaustive) {
    const CertificateSearch found = search_certificate(g, f, {.max_vertices = 14, .jobs = req.jobs});
    switch (found.status) {
      case CertificateSearch::Status::found:
        out << serialize_certificate(*found.certificate);
        return exit_fail;
      case CertificateSearch::Status::none:
        out << "NONE\n";
        return exit_pass;
      case CertificateSearch::Status::undecided:
        out << "UNDECIDED " << found.reason << "\n";
        return exit_undecided;
    }
  }
  VertexSet s;
  VertexSet t;
  std::optional<long long> stored;
  if (!req.witness.empty()) {
    const WitnessFile file = parse_witness(read_file(req.witness));
    s = file.s;
    t = file.t;
    stored = file.delta;
  } else {
    s = parse_vertex_list(req.s);
    t = parse_vertex_list(req.t);
  }
  require_in_graph(g, s, "S");
  require_in_graph(g, t, "T");
  const TutteCertificate cert = evaluate_pair(g, f, s, t);
  out << serialize_certificate(cert);
  if (stored && *stored != cert.delta) {
    err << "error: witness states delta " << *stored << " but it evaluates to " << cert.delta << "\n";
    return exit_usage;
  }
  return cert.delta < 0 ? exit_fail : exit_pass;
}

struct GenerateRequest {
  std::string family;
  std::optional<int> r;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int need(const std::optional<int>& v, const std::string& flag, const std::string& family) {
  if (!v) throw CLI::ValidationError("--family " + family + " requires " + flag);
  return *v;
}

int cmd_generate(const GenerateRequest& req, std::ostream& out) {
  const std::string& fam = req.family;
  FamilyInstance inst;
  if (fam == "prop1-odd") {
    inst = gen_prop1_odd(need(req.r, "--r", fam), need(req.k, "--k", fam));
  } else if (fam == "prop1-even") {
    inst = gen_prop1_even(need(req.r, "--r", fam), need(req.k, "--k", fam));
  } else if (fam == "prop1-bipartite") {
    inst = gen_prop1_bipartite(need(req.r, "--r", fam), need(req.n, "--n", fam));
  } else if (fam == "prop2-r4") {
    inst = gen_prop2_r4(need(req.n, "--n", fam));
  } else if (fam == "prop2-general") {
    inst = gen_prop2_general(need(req.r, "--r", fam), need(req.m, "--m", fam));
  } else if (fam == "prop2-r5") {
    inst = gen_prop2_r5(need(req.m, "--m", fam));
  } else if (fam == "random") {
    if (!req.seed) throw CLI::ValidationError("--family random requires --seed");
    const int size = need(req.n, "--n", fam);
    if (size < 1) throw CLI::ValidationError("--n must be positive");
    inst = random_valid_instance(need(req.r, "--r", fam), static_cast<std::size_t>(size), *req.seed);
  } else {
    throw CLI::ValidationError("unknown family '" + fam + "'");
  }

  write_file(req.out + ".graph", serialize_graph(inst.graph));
  write_file(req.out + ".terminals", serialize_terminals(inst.w));
  write_file(req.out + ".names", serialize_names(inst.names));
  if (inst.witness) {
    const DegreeSpec f = degree_spec_from_terminals(inst.graph, inst.w);
    write_file(req.out + ".witness",
               serialize_certificate(evaluate_pair(inst.graph, f, inst.witness->s, inst.witness->t)));
  }
  out << "family: " << inst.family << "\n";
  out << "vertices: " << inst.graph.vertex_count() << "\n";
  out << "edges: " << inst.graph.edge_count() << "\n";
  out << "terminals: " << inst.w.size() << "\n";
  for (const auto& rep : verify_instance(inst)) out << rep.to_line() << "\n";
  for (const auto& note : inst.notes) out << "note: " << note << "\n";
  return exit_pass;
}

struct DischargeRequest {
  std::string s;
  std::string t;
  int r = 0;
};

int cmd_discharge(const Inputs& in, const DischargeRequest& req, std::ostream& out) {
  const Graph g = load_graph(in.graph);
  const VertexSet w = load_terminals(in.terminals, g);
  const VertexSet s = parse_vertex_list(req.s);
  const VertexSet t = parse_vertex_list(req.t);
  require_in_graph(g, s, "S");
  require_in_graph(g, t, "T");
  const DischargeReport rep = discharge(g, w, s, t, req.r);
  out << rep.to_text();
  return rep.violation() ? exit_fail : exit_pass;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning path-cycle systems with prescribed end-vertices", "pcs"};
  app.require_subcommand(1);

  Inputs in;
  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--graph", in.graph, "graph file")->required();
    cmd->add_option("--terminals", in.terminals, "terminal file")->required();
  };

  auto* solve_cmd = app.add_subcommand("solve", "construct a spanning path-cycle system");
  add_inputs(solve_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force factor search");
  add_inputs(oracle_cmd);

  VerifyRequest vr;
  auto* verify_cmd = app.add_subcommand("verify", "check structural hypotheses");
  verify_cmd->add_option("--graph", in.graph, "graph file")->required();
  verify_cmd->add_option("--regular", vr.regular, "degree r");
  verify_cmd->add_option("--edge-connectivity", vr.edge_connectivity, "lower bound k");
  verify_cmd->add_option("--star-free", vr.star_free, "no induced K_{1,m}");
  auto* term_opt = verify_cmd->add_option("--terminals", vr.terminals, "terminal file");
  auto* mode_opt = verify_cmd->add_option("--mode", vr.mode, "distance3 or nbhd1")
                       ->check(CLI::IsMember({"distance3", "nbhd1"}));
  term_opt->needs(mode_opt);
  mode_opt->needs(term_opt);
  verify_cmd->add_flag("--path-system-criterion", vr.path_system, "omega(G-S) <= |S|+1 for all S");

  CertifyRequest cr;
  auto* certify_cmd = app.add_subcommand("certify", "find or replay a Tutte certificate");
  add_inputs(certify_cmd);
  auto* ex_opt = certify_cmd->add_flag("--exhaustive", cr.exhaustive, "search all disjoint (S,T)");
  auto* wit_opt = certify_cmd->add_option("--witness", cr.witness, "witness file to replay");
  auto* s_opt = certify_cmd->add_option("--s", cr.s, "S as comma-separated indices");
  auto* t_opt = certify_cmd->add_option("--t", cr.t, "T as comma-separated indices");
  certify_cmd->add_option("--jobs", cr.jobs, "worker threads for --exhaustive")->check(CLI::Range(1u, 256u));
  ex_opt->excludes(wit_opt)->excludes(s_opt)->excludes(t_opt);
  wit_opt->excludes(s_opt)->excludes(t_opt);
  s_opt->needs(t_opt);
  t_opt->needs(s_opt);

  GenerateRequest gr;
  auto* generate_cmd = app.add_subcommand("generate", "emit a construction with its witness");
  generate_cmd->add_option("--family", gr.family, "family name")
      ->required()
      ->check(CLI::IsMember(
          {"prop1-odd", "prop1-even", "prop1-bipartite", "prop2-r4", "prop2-general", "prop2-r5", "random"}));
  generate_cmd->add_option("--r", gr.r, "degree");
  generate_cmd->add_option("--k", gr.k, "copy size parameter");
  generate_cmd->add_option("--n", gr.n, "size parameter");
  generate_cmd->add_option("--m", gr.m, "size parameter");
  generate_cmd->add_option("--seed", gr.seed, "random seed");
  generate_cmd->add_option("--out", gr.out, "output prefix")->required();

  DischargeRequest dr;
  auto* discharge_cmd = app.add_subcommand("discharge", "run the discharging verifier on (S,T)");
  add_inputs(discharge_cmd);
  discharge_cmd->add_option("--s", dr.s, "S as comma-separated indices")->required();
  discharge_cmd->add_option("--t", dr.t, "T as comma-separated indices")->required();
  discharge_cmd->add_option("--r", dr.r, "degree r >= 4")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(in, out);
    if (oracle_cmd->parsed()) return cmd_oracle(in, out);
    if (verify_cmd->parsed()) return cmd_verify(in, vr, out);
    if (certify_cmd->parsed()) {
      if (!cr.exhaustive && cr.witness.empty() && s_opt->count() == 0) {
        throw CLI::ValidationError("certify needs --exhaustive, --witness or --s/--t");
      }
      return cmd_certify(in, cr, out, err);
    }
    if (generate_cmd->parsed()) return cmd_generate(gr, out);
    if (discharge_cmd->parsed()) return cmd_discharge(in, dr, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  err << "error: no subcommand\n";
  return exit_usage;
}

}  // namespace pcs
