// Command-line front end: generates graph families, builds matchings and
// forcing sets, runs the exact solver, and replays 2-switch traces. All
// file output is canonical JSON so identical invocations produce identical
// bytes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "forcing/brackets.hpp"
#include "forcing/constructions.hpp"
#include "forcing/cycles.hpp"
#include "forcing/generators.hpp"
#include "forcing/graph.hpp"
#include "forcing/matching.hpp"
#include "forcing/serialize.hpp"
#include "forcing/solver.hpp"

namespace {

using forcing::Edge;
using forcing::Graph;
using forcing::Matching;
using nlohmann::json;

// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 bad parameters or malformed input, 3 graph hash mismatch, 4 edge set
// is not a perfect matching, 5 graph has no perfect matching, 6 node
// budget exhausted before a proof.
enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kBadInput = 2,
  kHashMismatch = 3,
  kNotPerfect = 4,
  kNoMatching = 5,
  kInconclusive = 6,
};

struct ExitError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kBadInput, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ExitError{kBadInput, "cannot write " + path};
  out << content;
  if (!out) throw ExitError{kBadInput, "write failed for " + path};
}

Graph load_graph(const std::string& path) {
  return forcing::graph_from_json(read_file(path));
}

Matching load_matching(const Graph& g, const std::string& path) {
  try {
    return forcing::matching_from_json(g, read_file(path));
  } catch (const forcing::HashMismatchError& e) {
    throw ExitError{kHashMismatch, e.what()};
  } catch (const std::invalid_argument& e) {
    throw ExitError{kNotPerfect, e.what()};
  }
}

// Forcing-set files reuse the matching layout: graph_hash plus an edge
// list, without the perfect-matching requirement.
std::vector<Edge> load_edge_set(const Graph& g, const std::string& path) {
  json j = json::parse(read_file(path));
  if (!j.is_object() || !j.contains("graph_hash") || !j.contains("edges"))
    throw ExitError{kBadInput, path + " is not an edge-set file"};
  std::string stored = j["graph_hash"].get<std::string>();
  std::string actual = forcing::graph_hash(g);
  if (stored != actual)
    throw ExitError{kHashMismatch,
                    path + " belongs to graph " + stored + ", not " + actual};
  std::vector<Edge> edges;
  for (const json& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2)
      throw ExitError{kBadInput, path + ": edge must be a pair"};
    Edge e(item[0].get<int>(), item[1].get<int>());
    if (!g.has_edge(e.a, e.b))
      throw ExitError{kBadInput, path + ": edge not in graph"};
    edges.push_back(e);
  }
  return edges;
}

std::string edge_set_to_json(const Graph& g, const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back(json::array({e.a, e.b}));
  json j;
  j["edges"] = arr;
  j["graph_hash"] = forcing::graph_hash(g);
  return j.dump(2) + "\n";
}

std::string format_edges(const std::vector<Edge>& edges) {
  std::ostringstream out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out << " ";
    out << "(" << edges[i].a << "," << edges[i].b << ")";
  }
  return out.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw ExitError{kBadInput, "empty entry in value list"};
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size())
      throw ExitError{kBadInput, "bad integer in value list: " + item};
    values.push_back(v);
  }
  if (values.empty()) throw ExitError{kBadInput, "value list is empty"};
  return values;
}

int cmd_generate(const std::string& family, int m, int n, int k, int d,
                 const std::string& values, const std::string& out,
                 const std::string& dot) {
  std::vector<Edge> annotation;
  Graph g = [&]() -> Graph {
    if (family == "grid") return forcing::make_grid(m, n);
    if (family == "cylinder") return forcing::make_cylinder(m, n);
    if (family == "torus") return forcing::make_torus(m, n);
    if (family == "cycle") return forcing::make_cycle(n);
    if (family == "hypercube") return forcing::make_hypercube(d);
    if (family == "stop-sign") return forcing::make_stop_sign(n, k);
    if (family == "gadget-g") {
      forcing::GadgetGraph gg = forcing::make_gadget_g(n);
      annotation = gg.forcing_edges;
      return gg.graph;
    }
    if (family == "glued") {
      return forcing::make_glued_spectrum_graph(parse_int_list(values));
    }
    throw ExitError{kBadInput, "unknown family " + family};
  }();

  std::string text = forcing::graph_to_json(g);
  if (!annotation.empty()) {
    json j = json::parse(text);
    json arr = json::array();
    for (const Edge& e : annotation) arr.push_back(json::array({e.a, e.b}));
    j["forcing_edges"] = arr;
    text = j.dump(2) + "\n";
  }
  write_file(out, text);
  if (!dot.empty()) {
    write_file(dot, forcing::to_dot(g, nullptr,
                                    annotation.empty() ? nullptr : &annotation));
  }
  std::cout << family << ": " << g.vertex_count() << " vertices, "
            << g.edges().size() << " edges, hash " << forcing::graph_hash(g)
            << "\n";
  return kOk;
}

int cmd_construct(const std::string& pattern, int m, int n, int k, int l,
                  int r, const std::string& graph_in, const std::string& out,
                  const std::string& set_out, const std::string& graph_out) {
  if (pattern == "cacm" || pattern == "ucacm" || pattern == "dcacm") {
    Graph g = forcing::make_grid(m, n);
    Matching match = pattern == "cacm"    ? forcing::cacm_matching(g)
                     : pattern == "ucacm" ? forcing::ucacm_matching(g)
                                          : forcing::dcacm_matching(g);
    write_file(out, forcing::matching_to_json(g, match));
    if (!graph_out.empty()) write_file(graph_out, forcing::graph_to_json(g));
    if (!set_out.empty()) {
      if (pattern != "cacm")
        throw ExitError{kBadInput, "--set-out only applies to cacm"};
      write_file(set_out, edge_set_to_json(g, forcing::cacm_forcing_set(g)));
    }
    std::cout << pattern << " on grid(" << m << "," << n
              << "): " << match.size() << " edges\n";
    return kOk;
  }
  if (pattern == "all-horizontal") {
    if (graph_in.empty())
      throw ExitError{kBadInput, "all-horizontal needs --graph"};
    Graph g = load_graph(graph_in);
    Matching match = forcing::all_horizontal_matching(g);
    write_file(out, forcing::matching_to_json(g, match));
    std::cout << "all-horizontal: " << match.size() << " edges\n";
    return kOk;
  }
  if (pattern == "banded-even" || pattern == "banded-odd") {
    forcing::BandedInstance inst = pattern == "banded-even"
                                       ? forcing::make_banded_even(k, l, r)
                                       : forcing::make_banded_odd(k, l, r);
    int bound = pattern == "banded-even" ? forcing::banded_even_bound(k, l, r)
                                         : forcing::banded_odd_bound(k, l, r);
    if (graph_out.empty() || out.empty() || set_out.empty())
      throw ExitError{kBadInput,
                      pattern + " needs --graph-out, --out and --set-out"};
    write_file(graph_out, forcing::graph_to_json(inst.grid));
    write_file(out, forcing::matching_to_json(inst.grid, inst.matching));
    write_file(set_out, edge_set_to_json(inst.grid, inst.forcing_set));
    std::cout << pattern << "(k=" << k << ", l=" << l << ", r=" << r
              << "): grid " << inst.grid.params().at("rows") << "x"
              << inst.grid.params().at("cols") << ", forcing set size "
              << inst.forcing_set.size() << " (bound " << bound << ")\n";
    return kOk;
  }
  throw ExitError{kBadInput, "unknown pattern " + pattern};
}

int cmd_forcing_number(const std::string& graph_in,
                       const std::string& matching_in, const std::string& out,
                       long long budget, bool packing) {
  Graph g = load_graph(graph_in);
  Matching m = load_matching(g, matching_in);
  forcing::SolveOptions opts;
  opts.node_budget = budget;
  std::optional<forcing::ForcingCertificate> cert =
      forcing::forcing_certificate(g, m, opts);
  if (!cert) {
    std::cerr << "inconclusive: node budget exhausted\n";
    return kInconclusive;
  }
  if (packing) {
    cert->packing_number =
        forcing::max_disjoint_alternating_cycles(g, m).size();
  }
  std::cout << "forcing number: " << cert->forcing_number
            << (cert->verified ? " (verified)" : " (UNVERIFIED)") << "\n";
  std::cout << "forcing set: " << format_edges(cert->forcing_set) << "\n";
  if (packing)
    std::cout << "cycle packing: " << cert->packing_number << "\n";
  if (!out.empty()) write_file(out, forcing::certificate_to_json(g, m, *cert));
  return kOk;
}

int cmd_spectrum(const std::string& graph_in, int jobs, long long budget,
                 const std::string& out) {
  Graph g = load_graph(graph_in);
  forcing::SolveOptions opts;
  opts.jobs = jobs;
  opts.node_budget = budget;
  forcing::SpectrumResult spec;
  try {
    spec = forcing::forcing_spectrum(g, opts);
  } catch (const forcing::BudgetExhaustedError&) {
    std::cerr << "inconclusive: node budget exhausted\n";
    return kInconclusive;
  }
  if (spec.matching_count == 0) {
    std::cerr << "graph has no perfect matching\n";
    return kNoMatching;
  }
  std::cout << "matchings: " << spec.matching_count << "\n";
  std::ostringstream line;
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    if (i) line << ", ";
    line << spec.values[i];
  }
  std::cout << "spectrum: {" << line.str() << "}\n";
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    std::cout << "  f = " << spec.values[i] << ": " << spec.counts[i]
              << " matchings, witness " << format_edges(spec.witnesses[i].edges())
              << "\n";
  }
  std::cout << "min: " << spec.values.front()
            << "  max: " << spec.values.back() << "\n";
  if (!out.empty()) {
    json j;
    j["graph_hash"] = forcing::graph_hash(g);
    j["matching_count"] = spec.matching_count;
    j["values"] = spec.values;
    j["counts"] = spec.counts;
    json wits = json::array();
    for (const Matching& w : spec.witnesses) {
      json arr = json::array();
      for (const Edge& e : w.edges()) arr.push_back(json::array({e.a, e.b}));
      wits.push_back(arr);
    }
    j["witnesses"] = wits;
    j["min"] = spec.values.front();
    j["max"] = spec.values.back();
    write_file(out, j.dump(2) + "\n");
  }
  return kOk;
}

int cmd_verify(const std::string& graph_in, const std::string& matching_in,
               const std::string& set_in) {
  Graph g = load_graph(graph_in);
  Matching m = load_matching(g, matching_in);
  std::vector<Edge> set = load_edge_set(g, set_in);
  for (const Edge& e : set) {
    if (!m.contains(e))
      throw ExitError{kBadInput,
                      "forcing-set edge (" + std::to_string(e.a) + "," +
                          std::to_string(e.b) + ") is not in the matching"};
  }
  std::optional<forcing::AlternatingCycle> cycle =
      forcing::find_alternating_cycle_avoiding(g, m, set);
  if (!cycle) {
    std::cout << "yes: the " << set.size()
              << " edges force this matching\n";
    return kOk;
  }
  std::ostringstream verts;
  for (std::size_t i = 0; i < cycle->vertices().size(); ++i) {
    if (i) verts << " ";
    verts << cycle->vertices()[i];
  }
  std::cout << "no: alternating cycle avoids the set: " << verts.str() << "\n";
  return kVerifyFailed;
}

int cmd_reduce(const std::string& graph_in, const std::string& matching_in,
               const std::string& out, const std::string& map_out) {
  Graph g = load_graph(graph_in);
  Matching m = load_matching(g, matching_in);
  forcing::ReductionH red = forcing::make_reduction_h(g, m);
  write_file(out, forcing::graph_to_json(red.graph));
  if (!map_out.empty()) {
    json j;
    j["source_hash"] = forcing::graph_hash(g);
    j["graph_hash"] = forcing::graph_hash(red.graph);
    json arr = json::array();
    int base = g.vertex_count();
    for (std::size_t s = 0; s < red.gadget_edges.size(); ++s) {
      const Edge& e = red.gadget_edges[s];
      json item;
      item["edge"] = json::array({e.a, e.b});
      item["x"] = base + 2 * static_cast<int>(s);
      item["y"] = base + 2 * static_cast<int>(s) + 1;
      arr.push_back(item);
    }
    j["gadgets"] = arr;
    write_file(map_out, j.dump(2) + "\n");
  }
  std::cout << "reduction graph: " << red.graph.vertex_count()
            << " vertices, " << red.graph.edges().size() << " edges, "
            << red.gadget_edges.size() << " gadget edges\n";
  return kOk;
}

int cmd_eliminate(const std::string& graph_in, const std::string& matching_in,
                  const std::string& trace_out, const std::string& result_out) {
  Graph g = load_graph(graph_in);
  Matching m = load_matching(g, matching_in);
  forcing::BracketElimination elim = forcing::eliminate_brackets(g, m);
  if (!trace_out.empty())
    write_file(trace_out, forcing::switch_trace_to_json(g, m, elim.steps));
  if (!result_out.empty())
    write_file(result_out, forcing::matching_to_json(g, elim.result));
  std::cout << "eliminated brackets in " << elim.steps.size()
            << " switches\n";
  return kOk;
}

int cmd_connect(const std::string& graph_in, const std::string& from_in,
                const std::string& to_in, const std::string& out) {
  Graph g = load_graph(graph_in);
  Matching m1 = load_matching(g, from_in);
  Matching m2 = load_matching(g, to_in);
  std::vector<forcing::TwoSwitchStep> steps =
      forcing::connect_matchings(g, m1, m2);
  write_file(out, forcing::switch_trace_to_json(g, m1, steps));
  std::cout << "connected in " << steps.size() << " switches\n";
  return kOk;
}

int cmd_replay(const std::string& graph_in, const std::string& trace_in,
               const std::string& out) {
  Graph g = load_graph(graph_in);
  forcing::ParsedTrace trace;
  try {
    trace = forcing::switch_trace_from_json(g, read_file(trace_in));
  } catch (const forcing::HashMismatchError& e) {
    throw ExitError{kHashMismatch, e.what()};
  } catch (const std::invalid_argument& e) {
    throw ExitError{kBadInput, e.what()};
  }
  Matching result = forcing::replay_switches(g, trace.start, trace.steps);
  if (!out.empty()) write_file(out, forcing::matching_to_json(g, result));
  std::cout << "replayed " << trace.steps.size() << " switches, result has "
            << result.size() << " edges\n";
  return kOk;
}

int run_command(const std::vector<std::string>& args, bool allow_manifest);

int cmd_run_manifest(const std::string& path) {
  json j = json::parse(read_file(path));
  if (!j.is_object() || !j.contains("runs") || !j["runs"].is_array())
    throw ExitError{kBadInput, path + " lacks a runs array"};
  int index = 0;
  for (const json& run : j["runs"]) {
    if (!run.is_array())
      throw ExitError{kBadInput, "manifest run must be an argument array"};
    std::vector<std::string> args;
    for (const json& item : run) args.push_back(item.get<std::string>());
    int code = run_command(args, false);
    std::cout << "run " << index << ": exit " << code << "\n";
    if (code != kOk) return code;
    ++index;
  }
  return kOk;
}

int run_command(const std::vector<std::string>& args, bool allow_manifest) {
  CLI::App app{"Exact forcing sets of perfect matchings"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Build a graph family");
  std::string gen_family, gen_values, gen_out, gen_dot;
  int gen_m = 0, gen_n = 0, gen_k = 0, gen_d = 0;
  gen->add_option("family", gen_family,
                  "grid|cylinder|torus|cycle|hypercube|stop-sign|gadget-g|glued")
      ->required();
  gen->add_option("--m", gen_m, "rows");
  gen->add_option("--n", gen_n, "columns / cycle length / gadget size");
  gen->add_option("--k", gen_k, "corner cut depth");
  gen->add_option("--d", gen_d, "hypercube dimension");
  gen->add_option("--values", gen_values, "comma-separated spectrum values");
  gen->add_option("--out", gen_out, "graph JSON path")->required();
  gen->add_option("--dot", gen_dot, "also write Graphviz DOT here");

  // construct
  auto* con = app.add_subcommand("construct", "Build a named matching");
  std::string con_pattern, con_graph, con_out, con_set_out, con_graph_out;
  int con_m = 0, con_n = 0, con_k = 0, con_l = 0, con_r = 0;
  con->add_option("pattern", con_pattern,
                  "cacm|ucacm|dcacm|all-horizontal|banded-even|banded-odd")
      ->required();
  con->add_option("--m", con_m, "rows");
  con->add_option("--n", con_n, "columns");
  con->add_option("--k", con_k, "band half-height");
  con->add_option("--l", con_l, "full block count");
  con->add_option("--r", con_r, "leftover columns");
  con->add_option("--graph", con_graph, "input graph JSON");
  con->add_option("--out", con_out, "matching JSON path");
  con->add_option("--set-out", con_set_out, "forcing-set JSON path");
  con->add_option("--graph-out", con_graph_out, "graph JSON path");

  // forcing-number
  auto* num = app.add_subcommand("forcing-number",
                                 "Exact forcing number of a matching");
  std::string num_graph, num_matching, num_out;
  long long num_budget = -1;
  bool num_packing = false;
  num->add_option("--graph", num_graph, "graph JSON")->required();
  num->add_option("--matching", num_matching, "matching JSON")->required();
  num->add_option("--out", num_out, "certificate JSON path");
  num->add_option("--budget", num_budget, "node budget, negative = unlimited");
  num->add_flag("--packing", num_packing,
                "also compute the max disjoint alternating cycle packing");

  // spectrum
  auto* spc = app.add_subcommand("spectrum",
                                 "Forcing numbers over all perfect matchings");
  std::string spc_graph, spc_out;
  int spc_jobs = 1;
  long long spc_budget = -1;
  spc->add_option("--graph", spc_graph, "graph JSON")->required();
  spc->add_option("--jobs", spc_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  spc->add_option("--budget", spc_budget,
                  "per-matching node budget, negative = unlimited");
  spc->add_option("--out", spc_out, "spectrum report JSON path");

  // verify
  auto* ver = app.add_subcommand("verify", "Check a forcing set");
  std::string ver_graph, ver_matching, ver_set;
  ver->add_option("--graph", ver_graph, "graph JSON")->required();
  ver->add_option("--matching", ver_matching, "matching JSON")->required();
  ver->add_option("--set", ver_set, "forcing-set JSON")->required();

  // reduce
  auto* red = app.add_subcommand(
      "reduce", "Forcing-to-minimum-forcing reduction graph");
  std::string red_graph, red_matching, red_out, red_map;
  red->add_option("--graph", red_graph, "graph JSON")->required();
  red->add_option("--matching", red_matching, "matching JSON")->required();
  red->add_option("--out", red_out, "output graph JSON")->required();
  red->add_option("--map-out", red_map, "gadget map JSON");

  // eliminate
  auto* eli = app.add_subcommand("eliminate",
                                 "Remove brackets with 2-switches");
  std::string eli_graph, eli_matching, eli_trace, eli_result;
  eli->add_option("--graph", eli_graph, "graph JSON")->required();
  eli->add_option("--matching", eli_matching, "matching JSON")->required();
  eli->add_option("--trace-out", eli_trace, "switch trace JSON path");
  eli->add_option("--result-out", eli_result, "bracket-free matching path");

  // connect
  auto* cnn = app.add_subcommand("connect",
                                 "2-switch path between two matchings");
  std::string cnn_graph, cnn_from, cnn_to, cnn_out;
  cnn->add_option("--graph", cnn_graph, "graph JSON")->required();
  cnn->add_option("--from", cnn_from, "start matching JSON")->required();
  cnn->add_option("--to", cnn_to, "target matching JSON")->required();
  cnn->add_option("--out", cnn_out, "switch trace JSON path")->required();

  // replay
  auto* rep = app.add_subcommand("replay", "Apply a recorded switch trace");
  std::string rep_graph, rep_trace, rep_out;
  rep->add_option("--graph", rep_graph, "graph JSON")->required();
  rep->add_option("--trace", rep_trace, "switch trace JSON")->required();
  rep->add_option("--out", rep_out, "resulting matching JSON path");

  // run-manifest
  auto* man = app.add_subcommand("run-manifest",
                                 "Execute a batch of commands from JSON");
  std::string man_path;
  man->add_option("manifest", man_path, "manifest JSON path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      return app.exit(e);
    }
    std::cerr << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (gen->parsed())
      return cmd_generate(gen_family, gen_m, gen_n, gen_k, gen_d, gen_values,
                          gen_out, gen_dot);
    if (con->parsed())
      return cmd_construct(con_pattern, con_m, con_n, con_k, con_l, con_r,
                           con_graph, con_out, con_set_out, con_graph_out);
    if (num->parsed())
      return cmd_forcing_number(num_graph, num_matching, num_out, num_budget,
                                num_packing);
    if (spc->parsed()) return cmd_spectrum(spc_graph, spc_jobs, spc_budget, spc_out);
    if (ver->parsed()) return cmd_verify(ver_graph, ver_matching, ver_set);
    if (red->parsed()) return cmd_reduce(red_graph, red_matching, red_out, red_map);
    if (eli->parsed())
      return cmd_eliminate(eli_graph, eli_matching, eli_trace, eli_result);
    if (cnn->parsed()) return cmd_connect(cnn_graph, cnn_from, cnn_to, cnn_out);
    if (rep->parsed()) return cmd_replay(rep_graph, rep_trace, rep_out);
    if (man->parsed()) {
      if (!allow_manifest)
        throw ExitError{kBadInput, "manifests cannot nest"};
      return cmd_run_manifest(man_path);
    }
    std::cerr << "no subcommand\n";
    return kBadInput;
  } catch (const ExitError& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const forcing::HashMismatchError& e) {
    std::cerr << e.what() << "\n";
    return kHashMismatch;
  } catch (const json::parse_error& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, true);
}
