#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ehrlat/json_io.hpp"

namespace {

std::string cli_path;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_file = "/tmp/ehrlat_cli_out.txt";
  std::string cmd = cli_path + " " + args + " > " + out_file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

void write_square(const std::string& path) {
  std::ofstream out(path);
  out << R"({"dim": 2, "equations": [], "inequalities": [
    {"b": "0", "a": ["1", "0"]}, {"b": "0", "a": ["0", "1"]},
    {"b": "1", "a": ["-1", "0"]}, {"b": "1", "a": ["0", "-1"]}]})";
}

}  // namespace

using ehrlat::Json;

TEST_CASE("count matches the documented example and is deterministic") {
  write_square("/tmp/ehrlat_square.json");
  auto r = run("count --polytope /tmp/ehrlat_square.json --dilate 2 --method barvinok");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("format") == 1);
  CHECK(j.at("count") == 9);

  auto again = run("count --polytope /tmp/ehrlat_square.json --dilate 2 --method barvinok");
  CHECK(again.out == r.out);

  auto fpp = run("count --polytope /tmp/ehrlat_square.json --dilate 2 --method fpp");
  CHECK(Json::parse(fpp.out).at("count") == 9);
}

TEST_CASE("partitions and gcd examples") {
  auto p = run("partitions --m 2 --eval 4");
  REQUIRE(p.exit_code == 0);
  CHECK(Json::parse(p.out).at("value") == 3);

  auto g = run("gcd --a 7 --b 5");
  REQUIRE(g.exit_code == 0);
  Json gj = Json::parse(g.out);
  CHECK(gj.at("g") == 1);
  CHECK(gj.at("bezout") == Json::array({-2, 3}));
}

TEST_CASE("ehrhart output parses back and both methods agree") {
  write_square("/tmp/ehrlat_square.json");
  auto a = run("ehrhart --polytope /tmp/ehrlat_square.json --method fpp");
  auto b = run("ehrhart --polytope /tmp/ehrlat_square.json --method barvinok");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto qp = ehrlat::quasipoly_from_json(Json::parse(a.out));
  CHECK(qp.degree == 2);
  CHECK(ehrlat::qp_evaluate(qp, 10) == 121);
}

TEST_CASE("genfunc output round-trips and specializes to the point count") {
  write_square("/tmp/ehrlat_square.json");
  auto r = run("genfunc --polytope /tmp/ehrlat_square.json");
  REQUIRE(r.exit_code == 0);
  auto g = ehrlat::genfunc_from_json(Json::parse(r.out));
  CHECK(ehrlat::specialize_count(g) == 4);
}

TEST_CASE("series, hstar and interior counts") {
  write_square("/tmp/ehrlat_square.json");
  auto s = run("series --polytope /tmp/ehrlat_square.json");
  REQUIRE(s.exit_code == 0);
  Json sj = Json::parse(s.out);
  CHECK(sj.at("ell") == 1);

  auto h = run("hstar --polytope /tmp/ehrlat_square.json");
  CHECK(Json::parse(h.out).at("hstar") == Json::array({1, 1, 0}));

  auto rec = run("reciprocity --polytope /tmp/ehrlat_square.json --eval 2");
  CHECK(Json::parse(rec.out).at("value") == 1);  // interior of the 2-dilate

  auto oc = run("oracle-count --polytope /tmp/ehrlat_square.json --dilate 2 --interior");
  CHECK(Json::parse(oc.out).at("count") == 1);
}

TEST_CASE("graph subcommands") {
  std::ofstream("/tmp/ehrlat_k3.json")
      << R"({"vertices": 3, "edges": [[0,1],[1,2],[0,2]], "directed": false})";
  auto c = run("chromatic --graph /tmp/ehrlat_k3.json --eval 3");
  REQUIRE(c.exit_code == 0);
  CHECK(Json::parse(c.out).at("value") == 6);

  std::ofstream("/tmp/ehrlat_digon.json")
      << R"({"vertices": 2, "edges": [[0,1],[1,0]], "directed": true})";
  auto f = run("flow --graph /tmp/ehrlat_digon.json --eval 5");
  CHECK(Json::parse(f.out).at("value") == 4);
}

TEST_CASE("schedule subcommand") {
  // two jobs, x1 < x2
  std::ofstream("/tmp/ehrlat_sched.json") << R"({"jobs": 2, "formula":
    {"op": "atom", "atom": {"coeffs_x": ["1", "-1"], "coeff_k": "0", "rel": "<"}}})";
  auto r = run("schedule --problem /tmp/ehrlat_sched.json --eval 3");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out).at("value") == 3);  // (1,2),(1,3),(2,3)
}

TEST_CASE("plot emission and --out") {
  auto sb = run("sternbrocot --depth 1 --plot /tmp/ehrlat_sbplot");
  REQUIRE(sb.exit_code == 0);
  Json j = Json::parse(sb.out);
  CHECK(j.at("nodes").size() == 3);
  std::ifstream svg("/tmp/ehrlat_sbplot.svg");
  CHECK(svg.good());

  auto st = run("staircase --a 12 --b 7 --out /tmp/ehrlat_stair.json");
  REQUIRE(st.exit_code == 0);
  CHECK(st.out.empty());
  Json stj = ehrlat::load_json("/tmp/ehrlat_stair.json");
  CHECK(stj.at("a") == 12);
  CHECK(stj.at("pieces").size() >= 2);

  for (const char* f : {"/tmp/ehrlat_sbplot.svg", "/tmp/ehrlat_sbplot.csv",
                        "/tmp/ehrlat_stair.json"})
    std::remove(f);
}

TEST_CASE("exit codes") {
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("count").exit_code == 2);  // missing required --polytope
  CHECK(run("count --polytope /tmp/ehrlat_missing.json").exit_code == 1);
  CHECK(run("gcd --a 0 --b 5").exit_code == 2);  // rejected by flag validation

  std::ofstream("/tmp/ehrlat_bad.json") << "{ not json";
  CHECK(run("count --polytope /tmp/ehrlat_bad.json").exit_code == 1);

  std::ofstream("/tmp/ehrlat_unbounded.json")
      << R"({"dim": 1, "equations": [], "inequalities": [{"b": "0", "a": ["1"]}]})";
  CHECK(run("count --polytope /tmp/ehrlat_unbounded.json").exit_code == 1);
}

TEST_CASE("thread cap environment variable is validated") {
  std::string save = cli_path;
  cli_path = "EHRLAT_THREADS=2 " + save;
  CHECK(run("partitions --m 1 --eval 3").exit_code == 0);
  cli_path = "EHRLAT_THREADS=zero " + save;
  CHECK(run("partitions --m 1 --eval 3").exit_code == 1);
  cli_path = save;
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli>\n");
    return 1;
  }
  cli_path = argv[argc - 1];
  doctest::Context ctx(argc - 1, argv);
  return ctx.run();
}
