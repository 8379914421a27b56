// End-to-end checks of the command-line binary. Each invocation goes
// through the shell exactly as a user would run it; files are exchanged in
// a scratch directory and compared byte for byte where determinism is
// promised.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "forcing/constructions.hpp"
#include "forcing/generators.hpp"
#include "forcing/matching.hpp"
#include "forcing/serialize.hpp"
#include "forcing/solver.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path;
std::string last_output;
int failures = 0;

int run(const std::string& args) {
  std::string cmd = "\"" + cli_path + "\" " + args + " > capture.txt 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in("capture.txt", std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  last_output = buf.str();
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++failures;
    std::cout << "FAIL: " << what << "\n";
    if (!last_output.empty()) std::cout << "  output: " << last_output;
  }
}

void expect_exit(int got, int want, const std::string& what) {
  if (got != want) {
    last_output += "  (exit " + std::to_string(got) + ", wanted " +
                   std::to_string(want) + ")\n";
  }
  expect(got == want, what);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-cli>\n";
    return 1;
  }
  cli_path = fs::absolute(argv[1]).string();

  fs::path dir = fs::current_path() / "cli_test_tmp";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::current_path(dir);

  using forcing::Edge;
  using forcing::Graph;
  using forcing::Matching;

  // Generation writes canonical bytes.
  expect_exit(run("generate grid --m 4 --n 4 --out g44.json"), 0,
              "generate grid 4x4");
  Graph g44 = forcing::make_grid(4, 4);
  expect(slurp("g44.json") == forcing::graph_to_json(g44),
         "generated grid matches the library bytes");
  expect_exit(run("generate grid --m 4 --n 4 --out g44_again.json"), 0,
              "regenerate grid 4x4");
  expect(slurp("g44_again.json") == slurp("g44.json"),
         "regeneration is byte identical");
  expect(contains(last_output, forcing::graph_hash(g44)),
         "generate prints the graph hash");

  expect_exit(run("generate grid --m 2 --n 2 --out g22.json --dot g22.dot"), 0,
              "generate with dot output");
  expect(slurp("g22.dot").rfind("graph forcing {", 0) == 0,
         "dot output starts with the graph header");

  expect_exit(run("generate gadget-g --n 3 --out gadget.json"), 0,
              "generate gadget");
  {
    std::string text = slurp("gadget.json");
    expect(contains(text, "\"forcing_edges\""),
           "gadget file carries its forcing edges");
    Graph parsed = forcing::graph_from_json(text);
    expect(parsed == forcing::make_gadget_g(3).graph,
           "gadget file parses back to the generated graph");
  }
  expect_exit(run("generate gadget-g --n 2 --out gg2.json --dot gg2.dot"), 0,
              "generate gadget with dot");
  expect(contains(slurp("gg2.dot"), "#d62728"),
         "gadget dot highlights the forcing edges");

  expect_exit(run("generate glued --values 1,2 --out glued.json"), 0,
              "generate glued spectrum graph");
  expect_exit(run("generate glued --values 0,2 --out bad.json"), 2,
              "non-positive spectrum values are rejected");
  expect_exit(run("generate mystery --m 2 --n 2 --out bad.json"), 2,
              "unknown family is rejected");
  expect_exit(run("generate grid --m 2 --n 2"), 2,
              "missing required --out is rejected");
  expect_exit(run("generate grid --out bad.json"), 2,
              "grid without dimensions is rejected");
  expect_exit(run(""), 2, "missing subcommand is rejected");
  expect_exit(run("--help"), 0, "--help exits cleanly");

  // Constructions.
  expect_exit(run("construct cacm --m 4 --n 4 --out cacm.json "
                  "--graph-out cacm_g.json --set-out cacm_set.json"),
              0, "construct cacm with graph and set");
  expect(slurp("cacm_g.json") == slurp("g44.json"),
         "construct emits the same grid bytes as generate");
  {
    Matching m = forcing::matching_from_json(g44, slurp("cacm.json"));
    expect(m == forcing::cacm_matching(g44),
           "cacm matching file parses to the library matching");
  }
  expect_exit(run("construct all-horizontal --graph g44.json --out horiz.json"),
              0, "construct all-horizontal");
  expect_exit(run("construct cacm --m 3 --n 4 --out bad.json"), 2,
              "cacm parity violation is rejected");
  expect_exit(run("construct banded-even --k 1 --l 1 --r 1 --graph-out bg.json "
                  "--out bm.json --set-out bs.json"),
              0, "construct banded-even");
  expect(contains(last_output, "forcing set size 1 (bound 1)"),
         "banded construct reports size and bound");
  expect_exit(run("construct banded-even --k 1 --l 1 --r 1 --out bm.json"), 2,
              "banded without output paths is rejected");
  expect_exit(run("construct nonsense --m 2 --n 2 --out bad.json"), 2,
              "unknown pattern is rejected");

  // Verification.
  expect_exit(run("verify --graph cacm_g.json --matching cacm.json "
                  "--set cacm_set.json"),
              0, "verify accepts the staircase set");
  expect(contains(last_output, "yes"), "verify answers yes");
  std::string hash44 = forcing::graph_hash(g44);
  spit("half_set.json",
       "{\n  \"edges\": [[0, 1]],\n  \"graph_hash\": \"" + hash44 + "\"\n}\n");
  expect_exit(run("verify --graph cacm_g.json --matching cacm.json "
                  "--set half_set.json"),
              1, "verify rejects a non-forcing subset");
  expect(contains(last_output, "no: alternating cycle avoids the set"),
         "verify names an avoiding cycle");
  spit("foreign_set.json",
       "{\n  \"edges\": [[1, 2]],\n  \"graph_hash\": \"" + hash44 + "\"\n}\n");
  expect_exit(run("verify --graph cacm_g.json --matching cacm.json "
                  "--set foreign_set.json"),
              2, "verify rejects a set outside the matching");
  spit("wrong_graph_set.json",
       "{\n  \"edges\": [[0, 1]],\n  \"graph_hash\": \"" +
           forcing::graph_hash(forcing::make_grid(2, 2)) + "\"\n}\n");
  expect_exit(run("verify --graph cacm_g.json --matching cacm.json "
                  "--set wrong_graph_set.json"),
              3, "verify rejects a set bound to another graph");

  // Exit codes for bad matchings and hash mismatches.
  expect_exit(run("forcing-number --graph g22.json --matching cacm.json"), 3,
              "matching file for the wrong graph exits 3");
  spit("not_perfect.json",
       "{\n  \"edges\": [[0, 1]],\n  \"graph_hash\": \"" + hash44 + "\"\n}\n");
  expect_exit(run("forcing-number --graph g44.json --matching not_perfect.json"),
              4, "non-perfect matching exits 4");
  spit("broken.json", "{ this is not json");
  expect_exit(run("forcing-number --graph g44.json --matching broken.json"), 2,
              "malformed JSON exits 2");

  // Solver paths.
  expect_exit(run("forcing-number --graph g44.json --matching horiz.json "
                  "--packing --out cert.json"),
              0, "forcing-number with packing and certificate");
  expect(contains(last_output, "forcing number: 4 (verified)"),
         "horizontal matching needs four edges");
  expect(contains(last_output, "cycle packing: 4"),
         "packing number is reported");
  {
    forcing::ParsedCertificate cert =
        forcing::certificate_from_json(g44, slurp("cert.json"));
    expect(cert.certificate.forcing_number == 4 &&
               cert.certificate.packing_number == 4 &&
               cert.certificate.verified,
           "certificate file carries number, packing and verification");
  }
  expect_exit(run("forcing-number --graph g44.json --matching horiz.json "
                  "--budget 1"),
              6, "tiny budget leaves the search inconclusive");

  expect_exit(run("generate grid --m 2 --n 6 --out g26.json"), 0,
              "generate grid 2x6");
  expect_exit(run("spectrum --graph g26.json --out spec.json"), 0,
              "spectrum of grid 2x6");
  expect(contains(last_output, "spectrum: {2, 3}"),
         "spectrum prints both values");
  expect(contains(last_output, "matchings: 13"),
         "spectrum counts the matchings");
  expect_exit(run("spectrum --graph g26.json --jobs 3 --out spec_jobs.json"), 0,
              "spectrum with three workers");
  expect(slurp("spec_jobs.json") == slurp("spec.json"),
         "worker count does not change the report bytes");
  expect_exit(run("generate grid --m 3 --n 3 --out g33.json"), 0,
              "generate grid 3x3");
  expect_exit(run("spectrum --graph g33.json"), 5,
              "odd grid has no perfect matching");
  expect_exit(run("spectrum --graph g44.json --budget 1"), 6,
              "budgeted spectrum is inconclusive");

  // Bracket elimination, connection, replay.
  expect_exit(run("eliminate --graph cacm_g.json --matching cacm.json "
                  "--trace-out trace.json --result-out elim.json"),
              0, "eliminate brackets from the ring matching");
  expect_exit(run("replay --graph cacm_g.json --trace trace.json "
                  "--out replayed.json"),
              0, "replay the elimination trace");
  expect(slurp("replayed.json") == slurp("elim.json"),
         "replay reproduces the elimination result");
  expect_exit(run("connect --graph cacm_g.json --from cacm.json "
                  "--to horiz.json --out conn.json"),
              0, "connect ring matching to horizontal matching");
  expect_exit(run("replay --graph cacm_g.json --trace conn.json "
                  "--out conn_result.json"),
              0, "replay the connecting trace");
  expect(slurp("conn_result.json") == slurp("horiz.json"),
         "connection lands exactly on the target matching");

  expect_exit(run("generate cylinder --m 2 --n 4 --out cyl.json"), 0,
              "generate cylinder");
  {
    Graph cyl = forcing::make_cylinder(2, 4);
    Matching m = forcing::all_horizontal_matching(cyl);
    spit("cyl_m.json", forcing::matching_to_json(cyl, m));
  }
  expect_exit(run("eliminate --graph cyl.json --matching cyl_m.json"), 2,
              "elimination refuses wrapped columns");

  // Reduction.
  expect_exit(run("generate grid --m 2 --n 3 --out g23.json"), 0,
              "generate grid 2x3");
  {
    Graph g23 = forcing::make_grid(2, 3);
    Matching vertical = Matching::from_edges(
        g23, {Edge(0, 3), Edge(1, 4), Edge(2, 5)});
    spit("g23_m.json", forcing::matching_to_json(g23, vertical));
  }
  expect_exit(run("reduce --graph g23.json --matching g23_m.json "
                  "--out red.json --map-out red_map.json"),
              0, "reduce the vertical matching");
  {
    Graph g23 = forcing::make_grid(2, 3);
    Graph red = forcing::graph_from_json(slurp("red.json"));
    expect(red.vertex_count() == 14 && red.family() == "reduction-h",
           "reduction graph has a path per unmatched edge");
    expect(forcing::min_forcing_number(red) ==
               forcing::forcing_number(
                   g23, Matching::from_edges(
                            g23, {Edge(0, 3), Edge(1, 4), Edge(2, 5)})),
           "reduction preserves the forcing number as its minimum");
    expect(contains(slurp("red_map.json"), "\"source_hash\""),
           "reduction map names the source graph");
  }
  expect_exit(run("reduce --graph g44.json --matching cacm.json "
                  "--out bad.json"),
              2, "reduction refuses degree-4 inputs");

  // Manifests.
  spit("manifest.json", R"({
  "runs": [
    ["generate", "grid", "--m", "2", "--n", "2", "--out", "m_g.json"],
    ["spectrum", "--graph", "m_g.json", "--out", "m_spec.json"]
  ]
}
)");
  expect_exit(run("run-manifest manifest.json"), 0, "manifest runs to the end");
  expect(contains(last_output, "run 0: exit 0") &&
             contains(last_output, "run 1: exit 0"),
         "manifest reports each run");
  expect(slurp("m_g.json") == slurp("g22.json"),
         "manifest output matches direct invocation");

  spit("failing_manifest.json", R"({
  "runs": [
    ["generate", "grid", "--m", "3", "--n", "3", "--out", "f_g.json"],
    ["spectrum", "--graph", "f_g.json"],
    ["generate", "grid", "--m", "2", "--n", "2", "--out", "f_never.json"]
  ]
}
)");
  expect_exit(run("run-manifest failing_manifest.json"), 5,
              "manifest stops at the first failure");
  expect(!fs::exists("f_never.json"), "manifest does not run past a failure");

  spit("nested_manifest.json", R"({
  "runs": [
    ["run-manifest", "manifest.json"]
  ]
}
)");
  expect_exit(run("run-manifest nested_manifest.json"), 2,
              "nested manifests are rejected");

  if (failures == 0) {
    std::cout << "all cli checks passed\n";
  } else {
    std::cout << failures << " cli checks failed\n";
  }
  return failures == 0 ? 0 : 1;
}
