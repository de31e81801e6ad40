#include <doctest.h>

#include "helpers.hpp"
#include "veronese/errors.hpp"

using namespace test;

TEST_CASE("parse and print round trip") {
  auto r = xyz();
  CHECK(to_string(P("x^2 - 2*x*y + y^2", r)) == "x^2 - 2*x*y + y^2");
  CHECK(to_string(P("(x - y)^2", r)) == "x^2 - 2*x*y + y^2");
  CHECK(to_string(P("-x + 1/2", r)) == "-x + 1/2");
  CHECK(to_string(P("2/4*z", r)) == "1/2*z");
  CHECK(to_string(P("0", r)) == "0");
  CHECK(to_string(P("x*y - y*x", r)) == "0");
  CHECK(to_string(P("3 - -x", r)) == "x + 3");
}

TEST_CASE("parse errors carry positions") {
  auto r = xyz();
  CHECK_THROWS_AS(P("x +* y", r), ParseError);
  CHECK_THROWS_AS(P("x^", r), ParseError);
  CHECK_THROWS_AS(P("(x + y", r), ParseError);
  CHECK_THROWS_AS(P("w + 1", r), UnknownVariable);
  CHECK_THROWS_AS(P("1/0", r), ParseError);
  try {
    P("x + ) ", r);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("arithmetic identities") {
  auto r = xyz();
  auto a = P("x^2 + 3*y - 1/3", r);
  auto b = P("x*y*z - 2", r);
  CHECK(a * b == b * a);
  CHECK((a + b) - b == a);
  CHECK((a - a).is_zero());
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(0) == Polynomial::constant(r, 1));
  CHECK(divide_exact(a * b, b).value() == a);
  CHECK_FALSE(divide_exact(a * b + Polynomial::constant(r, 1), b).has_value());
}

TEST_CASE("ring mismatch is rejected") {
  auto a = P("x", xyz());
  auto b = P("x", RingContext::make({"x", "w"}));
  CHECK_THROWS_AS(a + b, RingMismatch);
}

TEST_CASE("derivatives, evaluation, weights") {
  auto r = RingContext::make({"x", "y"}, {1, 2});
  auto p = P("x^4 + 3*x^2*y + y^2", r);
  CHECK(differentiate(p, "x") == P("4*x^3 + 6*x*y", r));
  CHECK(weighted_degree(p).value() == 4);
  CHECK(is_weighted_homogeneous(p, 4));
  CHECK_FALSE(weighted_degree(P("x + y", r)).has_value());
  std::vector<Rational> pt{2, -1};
  CHECK(p.evaluate(pt) == 16 - 12 + 1);
}

TEST_CASE("substitute, embed, specialize") {
  auto r = xyz();
  auto p = P("x^2*z + y", r);
  auto s = substitute(p, r, {{"x", P("y + z", r)}});
  CHECK(s == P("(y + z)^2*z + y", r));
  auto big = r->extended("t");
  CHECK(to_string(embed(p, big)) == to_string(p));
  auto sp = specialize(p, {{"z", Rational(1)}});
  CHECK(sp.ring()->size() == 2);
  CHECK(to_string(sp) == "x^2 + y");
}

TEST_CASE("prime field coefficients are reduced") {
  auto r = RingContext::make({"x"}, CoefficientField::prime_field(7));
  CHECK(P("8*x + 1/2", r) == P("x + 4", r));
  CHECK((P("3*x", r) * P("5", r)) == P("x", r));
}

TEST_CASE("gcd and squarefree") {
  auto r = xyz();
  auto f = P("(x + y)^2*(x - z)", r);
  auto g = P("(x + y)*(y - z)", r);
  CHECK(gcd_poly(f, g) == P("x + y", r));
  CHECK(gcd_poly(P("2*x + 4", r), P("3*x + 6", r)) == P("x + 2", r));
  CHECK(gcd_poly(P("x^2 + 1", r), P("y", r)).is_constant());
  CHECK_FALSE(is_squarefree(f));
  CHECK(is_squarefree(P("x^3 + y^3 + z^3", r)));
  CHECK(normalize_associate(P("-6*x + 4*y", r)) == P("3*x - 2*y", r));
}
