#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "veronese/report.hpp"

using veronese::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = veronese::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze catalog models") {
  auto klein = run({"analyze", "--catalog", "klein"});
  REQUIRE(klein.code == 0);
  CHECK(klein.json()["total_length"] == 21);
  CHECK(klein.json()["all_nodes"] == "certified");
  CHECK(klein.json()["field"] == "Q");
  auto smooth = run({"analyze", "--catalog", "smooth"});
  CHECK(smooth.code == 0);
  CHECK(smooth.json()["total_length"] == 0);
}

TEST_CASE("report schema keys") {
  auto doc = run({"analyze", "--catalog", "klein"}).json();
  for (const char* key : {"model", "strata", "total_length", "all_nodes", "field", "sigma_checks",
                          "nodal_consistency", "rational_points"})
    CHECK(doc.contains(key));
  CHECK(doc["strata"][0].contains("zero_dimensional"));
}

TEST_CASE("inline forms and --expect-nodes") {
  auto e8 = run({"analyze", "--phi4", "0", "--phi6", "x3*(x1^5+x2^5)"});
  CHECK(e8.code == 0);
  CHECK(e8.json()["all_nodes"] == "refuted");
  CHECK(run({"analyze", "--expect-nodes", "--phi4", "0", "--phi6", "x3*(x1^5+x2^5)"}).code == 1);
  CHECK(run({"--expect-nodes", "analyze", "--catalog", "klein"}).code == 0);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({"analyze", "--phi4", "x1^3", "--phi6", "x2^6"}).code == 2);
  CHECK(run({"analyze", "--phi6", "x1^6 +"}).code == 2);
  CHECK(run({"analyze", "--catalog", "nope"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--catalog", "klein", "--phi6", "x1^6"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "--catalog", "klein", "--field", "fp:7"}).code == 2);
  CHECK(run({"analyze", "--catalog", "klein", "--field", "fp:4294967296"}).code == 2);
  CHECK(run({"analyze", "--catalog", "klein", "--budget", "12"}).code == 2);
  CHECK(run({"point", "--catalog", "klein", "--point", "0,0,0"}).code == 2);
  CHECK(run({"table-row", "20"}).code == 2);
  CHECK(run({"analyze", "--model", "/nonexistent/model.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget exhaustion exits 3") {
  CHECK(run({"analyze", "--catalog", "klein", "--budget", "3,10"}).code == 3);
  setenv("VERONESE_BUDGET", "3,10", 1);
  CHECK(run({"sing", "--catalog", "klein"}).code == 3);
  CHECK(run({"sing", "--catalog", "klein", "--budget", "5000,5000000"}).code == 0);
  unsetenv("VERONESE_BUDGET");
}

TEST_CASE("prime field mode is labelled probabilistic") {
  auto r = run({"analyze", "--catalog", "klein", "--field", "fp"});
  REQUIRE(r.code == 0);
  auto doc = r.json();
  CHECK(doc["field"] == "Fp");
  CHECK(doc["all_nodes"] == "probabilistic");
  CHECK(doc["total_length"] == 21);
  CHECK(doc["notes"].dump().find("probabilistic") != std::string::npos);
  CHECK(run({"sing", "--catalog", "klein", "--field", "fp:2147483659"}).code == 0);
}

TEST_CASE("output is deterministic and text mirrors json") {
  auto a = run({"analyze", "--catalog", "twelve_node", "--seed", "1"});
  auto b = run({"analyze", "--catalog", "twelve_node", "--seed", "1"});
  CHECK(a.out == b.out);
  CHECK(a.json()["seed"] == 1);
  auto text = run({"analyze", "--catalog", "twelve_node", "--seed", "1", "--format", "text"});
  CHECK(text.out == veronese::render_text(a.json()));
  CHECK(text.out.find("total_length: 12\n") != std::string::npos);
}

TEST_CASE("point queries") {
  auto r = run({"point", "--catalog", "ga_family", "--point", "1,0,0", "--y", "0"});
  REQUIRE(r.code == 0);
  auto doc = r.json();
  CHECK(doc["fiber"] == "cuspidal");
  CHECK(doc["j"] == "undefined");
  CHECK(doc["classification"] == "not_cA");
  CHECK(doc["multiplicities"]["lambda4"] == "infinity");
  CHECK(doc["multiplicities"]["lambda6"] == 3);
  auto j = run({"point", "--phi4", "x1^4 - x3^4", "--phi6", "x2^6 + x3^6", "--point", "1,0,0"}).json();
  CHECK(j["j"] == "1728");
  CHECK(j["fiber"] == "smooth");
}

TEST_CASE("curves summary") {
  auto doc = run({"curves", "--catalog", "klein"}).json();
  CHECK(doc["curves"]["lambda4"]["degree"] == 4);
  CHECK(doc["curves"]["discriminant"]["degree"] == 12);
  CHECK(doc["curves"]["common_components"].is_null());
  CHECK(doc["lambda6_singular_locus"]["empty"] == true);
  auto e8 = run({"curves", "--catalog", "e8_cone"}).json();
  CHECK(e8["curves"]["lambda4"]["whole_plane"] == true);
  CHECK(e8["lambda4_singular_locus"].is_null());
}

TEST_CASE("group commands") {
  CHECK(run({"gm-check", "--catalog", "klein", "--weights", "0,1,2,2,3"}).json()["gm_check"] == false);
  CHECK(run({"ga-check", "--catalog", "klein"}).json()["ga_invariant"] == false);
  auto built = run({"ga-build", "--eps", "0", "--lambda", "0,1,2"});
  REQUIRE(built.code == 0);
  CHECK(built.json()["ga_invariant"] == true);
  CHECK(run({"ga-build", "--eps", "0", "--lambda", "0,0,0"}).code == 2);
  CHECK(run({"ga-build", "--eps", "1", "--lambda", "0,1,inf", "--lambda-prime", "3,4"}).code == 0);

  auto row = run({"table-row", "3", "--seed", "7"});
  REQUIRE(row.code == 0);
  CHECK(row.json()["gm_check"] == true);
  CHECK(row.json()["phi6_enumerated"] == row.json()["phi6_support"]);
  std::string path = "table_row_3_seed_7.json";
  {
    std::ofstream f(path);
    f << row.out;
  }
  auto check = run({"gm-check", "--model", path});
  CHECK(check.code == 0);
  CHECK(check.json()["gm_check"] == true);
  CHECK(run({"gm-check", "--model", path, "--weights", "1,0,0,0,0"}).json()["gm_check"] == false);
  std::remove(path.c_str());
}

TEST_CASE("catalog commands") {
  auto list = run({"catalog", "list"}).json();
  CHECK(list["entries"].size() == 7);
  auto twelve = run({"catalog", "run", "twelve_node", "--seed", "1"});
  REQUIRE(twelve.code == 0);
  CHECK(twelve.json()["golden"]["present"] == true);
  CHECK(twelve.json()["total_length"] == 12);
  CHECK(run({"catalog", "run", "klein", "--lambda", "2"}).json()["golden"]["present"] == false);
  CHECK(run({"catalog", "run", "nope"}).code == 2);
  CHECK(run({"catalog"}).code == 2);
}
