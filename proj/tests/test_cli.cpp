// JSON serialization round-trips and end-to-end runs of the command-line
// tool.  The binary tests need ALTERNA_BIN in the environment and are
// skipped without it.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "alterna/emitters.hpp"
#include "alterna/io.hpp"
#include "alterna/verify.hpp"

using namespace alterna;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("matrix serialization round-trips", "[cli]") {
  CoxeterMatrix mat = named_matrix("B3");
  Json j = matrix_to_json(mat);
  REQUIRE(j["rank"] == 3);
  CoxeterMatrix back = matrix_from_json(j);
  REQUIRE(back.n == mat.n);
  REQUIRE(back.m == mat.m);

  Json bad = {{"rank", 2}, {"matrix", {{1, 3}, {4, 1}}}};
  REQUIRE_THROWS_WITH(matrix_from_json(bad),
                      ContainsSubstring("(0,1)") &&
                          ContainsSubstring("(1,0)"));
}

TEST_CASE("word serialization collapses runs and round-trips", "[cli]") {
  FreeWord w = gen("R0") * gen("R'1", -2) * gen("R0");
  Json j = word_to_json(w);
  REQUIRE(j.size() == 3);
  REQUIRE(j[1][0] == "R'1");
  REQUIRE(j[1][1] == -2);
  REQUIRE(word_from_json(j) == w);
  REQUIRE(word_from_json(Json::array()).empty());
}

TEST_CASE("group and algebra presentations round-trip", "[cli]") {
  GroupPresentation p = bourbaki_braid(named_matrix("A3"));
  GroupPresentation back = group_from_json(group_to_json(p));
  REQUIRE(back.generators == p.generators);
  REQUIRE(back.relations.size() == p.relations.size());
  for (size_t i = 0; i < p.relations.size(); ++i) {
    REQUIRE(back.relations[i].first == p.relations[i].first);
    REQUIRE(back.relations[i].second == p.relations[i].second);
  }

  AlgebraPresentation h = edge_hecke(named_matrix("B2"));
  AlgebraPresentation hback = algebra_from_json(algebra_to_json(h));
  REQUIRE(hback.generators == h.generators);
  REQUIRE(hback.relations.size() == h.relations.size());
  for (size_t i = 0; i < h.relations.size(); ++i)
    REQUIRE(same_relation(hback.relations[i], h.relations[i]));
}

TEST_CASE("polynomial serialization keeps signs and negative exponents",
          "[cli]") {
  LaurentPoly p = LaurentPoly::var("q", -3) * LaurentPoly(-7) +
                  LaurentPoly::var("b0", 2) * LaurentPoly::var("q", 1) +
                  LaurentPoly(5);
  REQUIRE(poly_from_json(poly_to_json(p)) == p);
  REQUIRE(poly_from_json(poly_to_json(LaurentPoly())) == LaurentPoly());
}

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("ALTERNA_BIN");
  std::string path = "/tmp/alterna_cli_out.txt";
  std::string cmd = std::string(bin) + " " + args + " > " + path + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace

TEST_CASE("command-line tool end to end", "[cli]") {
  if (!std::getenv("ALTERNA_BIN")) SKIP("ALTERNA_BIN not set");

  SECTION("byte-identical output across runs") {
    RunResult a = run_cli("coeffs --m 6 --json");
    RunResult b = run_cli("coeffs --m 6 --json");
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);

    RunResult c = run_cli("dihedral --m 9 --check --eval-mode --seed 5");
    RunResult d = run_cli("dihedral --m 9 --check --eval-mode --seed 5");
    REQUIRE(c.code == 0);
    REQUIRE(c.out == d.out);
  }

  SECTION("usage and validation errors exit with code 2") {
    REQUIRE(run_cli("coeffs").code == 2);
    REQUIRE(run_cli("present --input A2").code == 2);
    REQUIRE(run_cli("present --input A2 --kind nope").code == 2);
    REQUIRE(run_cli("present --input A2 --kind edge-hecke --json --text")
                .code == 2);
    REQUIRE(run_cli("verify --suite nope").code == 2);
    REQUIRE(run_cli("dihedral --m 4").code == 2);

    std::ofstream("/tmp/alterna_bad_matrix.json")
        << "{\"rank\":2,\"matrix\":[[1,3],[3,3]]}";
    RunResult r = run_cli("info --input /tmp/alterna_bad_matrix.json");
    REQUIRE(r.code == 2);
    REQUIRE_THAT(r.out, ContainsSubstring("(1,1)"));
  }

  SECTION("emitted presentation parses back identically") {
    RunResult r = run_cli("present --input A3 --kind bourbaki-braid --json");
    REQUIRE(r.code == 0);
    GroupPresentation back = group_from_json(Json::parse(r.out));
    GroupPresentation direct = bourbaki_braid(named_matrix("A3"));
    REQUIRE(back.generators == direct.generators);
    REQUIRE(back.relations.size() == direct.relations.size());
    for (size_t i = 0; i < direct.relations.size(); ++i) {
      REQUIRE(back.relations[i].first == direct.relations[i].first);
      REQUIRE(back.relations[i].second == direct.relations[i].second);
    }
  }

  SECTION("kernel rewriting through files") {
    std::ofstream("/tmp/alterna_braid_a2.json")
        << "{\"generators\":[\"g0\",\"g1\"],\"relations\":[{\"lhs\":"
           "[[\"g0\",1],[\"g1\",1],[\"g0\",1]],\"rhs\":"
           "[[\"g1\",1],[\"g0\",1],[\"g1\",1]]}]}";
    RunResult r = run_cli("rs --input /tmp/alterna_braid_a2.json");
    REQUIRE(r.code == 0);
    REQUIRE_THAT(r.out, ContainsSubstring("R1 = R'1 R0 R'1"));
    REQUIRE_THAT(r.out, ContainsSubstring("R0 R'1 R0 = R1^2"));
  }

  SECTION("verify suites succeed and report in JSON") {
    RunResult r = run_cli("verify --suite remark-iv --json");
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["suite"] == "remark-iv");
    REQUIRE(j["pass"] == true);
    REQUIRE(j["checks"].is_array());
    REQUIRE(!j["checks"].empty());

    std::ofstream("/tmp/alterna_corpus.json") << "[\"A2\",\"I2(3)\"]";
    RunResult g = run_cli(
        "verify --suite rs --corpus /tmp/alterna_corpus.json");
    REQUIRE(g.code == 0);
  }

  SECTION("matrix description") {
    RunResult r = run_cli("info --input B3");
    REQUIRE(r.code == 0);
    REQUIRE_THAT(r.out, ContainsSubstring("rank: 3"));
    REQUIRE_THAT(r.out, ContainsSubstring("parameter classes: [0] [1 2]"));
    REQUIRE_THAT(r.out, ContainsSubstring("0-1 label 4"));
    REQUIRE_THAT(r.out, ContainsSubstring("cycle basis size: 0"));
  }
}
