#include <doctest.h>

#include "helpers.hpp"
#include "veronese/catalog.hpp"
#include "veronese/report.hpp"

using namespace test;

TEST_CASE("catalog entries resolve") {
  for (const auto& e : catalog_entries()) CHECK_NOTHROW(get_model(e.name));
  CHECK_THROWS_AS(get_model("nonexistent"), UnknownEntry);
  CHECK(to_string(get_model("smooth").phi6()) == "x1^6 + x2^5*x3 + x3^6");
  CHECK(get_model("klein").phi4() == klein_phi4(plane_ring()).scaled(3));
  CatalogParams p;
  p.lambda = 1;
  CHECK(get_model("klein", p).phi4() == klein_phi4(plane_ring()));
}

TEST_CASE("twelve_node is reproducible and has the expected shape") {
  auto a = get_model("twelve_node");
  auto b = get_model("twelve_node");
  CHECK(a.phi6() == b.phi6());
  auto q = ProjPoint::make(0, 0, 1);
  CHECK(evaluate_at(a.phi4(), q) == 0);
  CHECK(evaluate_at(a.phi6(), q) == 0);
  CatalogParams other;
  other.seed = 2;
  CHECK_FALSE(get_model("twelve_node", other).phi6() == a.phi6());
}

TEST_CASE("class group table") {
  CHECK(class_group_table().size() == 14);
  auto e7 = class_group_row("E7");
  CHECK(e7.r == 2);
  CHECK(e7.delta_type == "A1");
  CHECK(e7.delta_rank == 1);
  CHECK(e7.delta_size == 2);
  auto a1 = class_group_row("A1");
  CHECK(a1.r == 8);
  CHECK(a1.delta_type == "E7");
  CHECK(a1.delta_size == 126);
  CHECK(a1.theta2 == 756);
  CHECK(a1.theta3 == 4032);
  CHECK(class_group_row("E8").delta_type.empty());
  CHECK_THROWS_AS(class_group_row("B2"), UnknownType);
  for (const auto& row : class_group_table()) {
    CAPTURE(row.dynkin);
    CHECK(row.delta_rank <= row.r - 1);
    CHECK(row.delta_size % 2 == 0);
  }
}

TEST_CASE("duval s") {
  CHECK(duval_s(DuValType::parse("E8")) == 8);
  CHECK(duval_s(DuValType::parse("E7")) == 7);
  CHECK(duval_s(DuValType::parse("E6")) == 4);
  CHECK(duval_s(DuValType::parse("D4")) == 2);
  CHECK(duval_s(DuValType::parse("D9")) == 8);
  CHECK(duval_s(DuValType::parse("A5")) == 3);
  CHECK(duval_s(DuValType::parse("A1")) == 1);
  CHECK_THROWS_AS(DuValType::parse("E9"), UnknownType);
  CHECK_THROWS_AS(DuValType::parse("D3"), UnknownType);
  CHECK_THROWS_AS(DuValType::parse("A0"), UnknownType);
  for (char f : {'A', 'D'}) {
    int lo = f == 'A' ? 1 : 4;
    for (int n = lo; n < 20; ++n)
      CHECK(duval_s({f, n}) <= duval_s({f, n + 1}));
  }
}

TEST_CASE("Klein invariant identity") {
  // Sign fixed by tests/oracle/transcript.txt, "Klein invariants".
  auto id = klein_invariant_identity();
  CHECK(id.holds);
  CHECK(id.sign == 1);
  auto r = plane_ring();
  CHECK_FALSE(hessian_determinant(P("x1^4", r)).scaled(Rational(1, 54)) == klein_phi6(r));
  auto phi4 = klein_phi4(r);
  CHECK(hessian_determinant(phi4.scaled(5)) == hessian_determinant(phi4).scaled(125));
}

TEST_CASE("goldens carry provenance for every value") {
  CHECK(golden_files().size() >= 3);
  for (const auto& [file, text] : golden_files()) {
    CAPTURE(file);
    auto doc = Json::parse(text);
    REQUIRE(doc.contains("expected"));
    REQUIRE(doc.contains("provenance"));
    for (const auto& [key, value] : doc["expected"].items()) {
      CAPTURE(key);
      REQUIRE(doc["provenance"].contains(key));
      CHECK_FALSE(doc["provenance"][key].get<std::string>().empty());
    }
  }
}

TEST_CASE("entries run against their goldens") {
  for (const auto& name : {"klein", "smooth", "twelve_node", "e8_cone", "ga_family"}) {
    CAPTURE(name);
    auto run = run_entry(name);
    CHECK(run.has_golden);
    CHECK(run.diffs.empty());
    CHECK_FALSE(run.provenance.empty());
  }
  CatalogParams other;
  other.seed = 5;
  CHECK_FALSE(run_entry("twelve_node", other).has_golden);
}

TEST_CASE("json diff reports field paths") {
  Json expected = Json::parse(R"({"a": 1, "b": {"c": "x"}, "d": [1, 2]})");
  Json actual = Json::parse(R"({"a": 2, "b": {"c": "x"}, "d": [1, 3], "e": 0})");
  auto diffs = json_diff(expected, actual);
  REQUIRE(diffs.size() == 2);
  CHECK(diffs[0] == "a: expected 1, got 2");
  CHECK(diffs[1] == "d[1]: expected 2, got 3");
  CHECK(json_diff(Json::parse(R"({"z": 1})"), actual) == std::vector<std::string>{"z: missing"});
}
