#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "baerlab/io.hpp"

using namespace baerlab;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_fixture_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the installed CLI when BAERLAB_CLI is set; library-level parsing is
// covered regardless.
std::optional<RunResult> run_cli(const std::string& args) {
  const char* bin = std::getenv("BAERLAB_CLI");
  if (!bin) return std::nullopt;
  std::string cmd = std::string(bin) + " " + args + " > cli_out.txt 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in("cli_out.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return RunResult{WEXITSTATUS(rc), ss.str()};
}

const char* kV4Triple =
    "format: 1\n"
    "table:\n"
    "elements: e a b c\n"
    "row: e a b c\n"
    "row: a e c b\n"
    "row: b c e a\n"
    "row: c b a e\n"
    "M = a\n"
    "N = b\n";

const char* kS3Presentation =
    "format: 1\n"
    "presentation:\n"
    "generators: a b\n"
    "a^2\n"
    "b^3\n"
    "(a b)^2\n"
    "N = b\n";

}  // namespace

TEST_CASE("group file: table block with triple") {
  std::string path = write_temp("v4.grp", kV4Triple);
  io::GroupFile gf = io::parse_group_file(path, 64, 100000);
  CHECK(gf.group->order() == 4);
  REQUIRE(gf.m.has_value());
  REQUIRE(gf.n.has_value());
  CHECK(gf.m->size() == 2);
  CHECK(gf.n->size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("group file: presentation block with subgroup words") {
  std::string path = write_temp("s3.grp", kS3Presentation);
  io::GroupFile gf = io::parse_group_file(path, 64, 100000);
  CHECK(gf.group->order() == 6);
  REQUIRE(gf.n.has_value());
  CHECK(gf.n->size() == 3);  // <b> = A3
  std::remove(path.c_str());
}

TEST_CASE("group file: parse errors carry the parse-error code") {
  std::string path = write_temp("bad.grp", "format: 1\ntable:\nelements: e a\nrow: e a\n");
  bool caught = false;
  try {
    io::parse_group_file(path, 64, 100000);
  } catch (const BaerError& e) {
    caught = true;
    CHECK(e.code() == Errc::ParseError);
  }
  CHECK(caught);
  std::remove(path.c_str());

  std::string path2 = write_temp("nohdr.grp", "table:\nelements: e\nrow: e\n");
  CHECK_THROWS_AS(io::parse_group_file(path2, 64, 100000), BaerError);
  std::remove(path2.c_str());
}

TEST_CASE("simplicial JSON round trip") {
  // constant object on Z/2 at T = 1
  std::string path = write_temp("const.json", R"({
    "format": 1, "type": "simplicial-ab", "trunc": 1,
    "levels": [
      {"rows": 1, "cols": 1, "entries": [[2]]},
      {"rows": 1, "cols": 1, "entries": [[2]]}
    ],
    "faces": [
      [{"rows":1,"cols":1,"entries":[[1]]}, {"rows":1,"cols":1,"entries":[[1]]}]
    ],
    "degeneracies": [
      [{"rows":1,"cols":1,"entries":[[1]]}]
    ]
  })");
  simp::TruncSimplicialAb x = io::parse_simplicial_json(path);
  CHECK(x.T == 1);
  CHECK(simp::check_simplicial_identities(x).ok);
  std::remove(path.c_str());
}

TEST_CASE("sequence JSON with unknowns") {
  std::string path = write_temp("seq.json", R"({
    "format": 1, "type": "exact-seq",
    "terms": [
      {"kind": "group", "presentation": {"rows":0,"cols":0,"entries":[]}, "label": "0"},
      {"kind": "group", "presentation": {"rows":1,"cols":1,"entries":[[2]]}, "label": "Z/2"},
      {"kind": "unknown", "label": "X"},
      {"kind": "group", "presentation": {"rows":1,"cols":1,"entries":[[3]]}, "label": "Z/3"},
      {"kind": "group", "presentation": {"rows":0,"cols":0,"entries":[]}, "label": "0"}
    ],
    "maps": [
      {"kind": "hom", "matrix": {"rows":1,"cols":0,"entries":[[]]}},
      {"kind": "symbolic"},
      {"kind": "symbolic"},
      {"kind": "hom", "matrix": {"rows":0,"cols":1,"entries":[]}}
    ]
  })");
  seq::ExactSeqInstance s = io::parse_sequence_json(path);
  auto cons = seq::solve_unknowns(s);
  REQUIRE(cons.size() == 1);
  REQUIRE(cons[0].forced.has_value());
  CHECK(cons[0].forced->factors() == std::vector<Int>{6});
  std::remove(path.c_str());
}

TEST_CASE("abelian system file parses and colimits") {
  std::string path = write_temp("sys.txt",
                                "format: 1\n"
                                "kind: abelian-system\n"
                                "object 0: gens 1 rels [[2]]\n"
                                "object 1: gens 1 rels [[4]]\n"
                                "map 0 -> 1 : [[2]]\n");
  io::SystemFile sf = io::parse_system_file(path, 64, 100000);
  REQUIRE(sf.abelian.has_value());
  CHECK(ab::colimit(*sf.abelian).factors() == std::vector<Int>{4});
  std::remove(path.c_str());
}

TEST_CASE("torsion file parses") {
  std::string path = write_temp("tor.txt",
                                "format: 1\n"
                                "rule: pair\n"
                                "c: 3\n"
                                "hypothesis: M1(G,N) torsion=true provenance=computed\n"
                                "hypothesis: M1(G/N) torsion=true provenance=computed\n"
                                "hypothesis: H3(G/N) torsion=false provenance=asserted\n");
  mult::TorsionRequest req = io::parse_torsion_file(path);
  CHECK(req.rule == mult::TorsionRule::Pair);
  CHECK(req.c_target == 3);
  REQUIRE(req.hypotheses.size() == 3);
  CHECK(!req.hypotheses[2].torsion);
  CHECK(!mult::certify_torsion(req).emitted);
  std::remove(path.c_str());
}

TEST_CASE("TSV flattening renders canonical forms") {
  io::Json j;
  j["value"] = io::canon_json(ab::FgAbGroup::from_invariants(1, {2, 4}));
  std::string tsv = io::to_tsv(j);
  CHECK(tsv == "value\t1:2,4\n");
}

TEST_CASE("CLI end to end: exit codes and determinism") {
  auto probe = run_cli("--help");
  if (!probe) {
    MESSAGE("BAERLAB_CLI not set; skipping binary checks");
    return;
  }
  std::string triple = write_temp("cli_v4.grp", kV4Triple);

  auto r1 = run_cli("multiplier " + triple);
  REQUIRE(r1.has_value());
  CHECK(r1->exit_code == 0);
  CHECK(r1->output.find("\"method\": \"bar-model\"") != std::string::npos);

  // byte-identical across runs
  auto r2 = run_cli("multiplier " + triple);
  CHECK(r1->output == r2->output);

  // parse error -> 4
  std::string bad = write_temp("cli_bad.grp", "nonsense\n");
  auto rb = run_cli("multiplier " + bad);
  CHECK(rb->exit_code == 4);

  // cap exceeded -> 3
  std::string big = write_temp("cli_big.grp",
                               "format: 1\n"
                               "presentation:\n"
                               "generators: a b\n"
                               "N = a\n");
  auto rc = run_cli("multiplier " + big + " --max-cosets 50");
  CHECK(rc->exit_code == 3);

  // inexact sequence -> 2
  std::string seqf = write_temp("cli_seq.json", R"({
    "format": 1, "type": "exact-seq",
    "terms": [
      {"kind":"group","presentation":{"rows":0,"cols":0,"entries":[]},"label":"0"},
      {"kind":"group","presentation":{"rows":1,"cols":1,"entries":[[2]]},"label":"Z/2"},
      {"kind":"group","presentation":{"rows":1,"cols":1,"entries":[[2]]},"label":"Z/2"},
      {"kind":"group","presentation":{"rows":0,"cols":0,"entries":[]},"label":"0"}
    ],
    "maps": [
      {"kind":"hom","matrix":{"rows":1,"cols":0,"entries":[[]]}},
      {"kind":"hom","matrix":{"rows":1,"cols":1,"entries":[[0]]}},
      {"kind":"hom","matrix":{"rows":0,"cols":1,"entries":[]}}
    ]
  })");
  auto rs = run_cli("solve-seq " + seqf);
  CHECK(rs->exit_code == 2);

  // les on the Klein triple: all acceptance varieties exact
  auto rl = run_cli("les " + triple + " --variety burnside-q:2");
  CHECK(rl->exit_code == 0);

  for (const auto& f : {triple, bad, big, seqf}) std::remove(f.c_str());
  std::remove("cli_out.txt");
}
