#include <doctest.h>

#include "helpers.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("torus weights of polynomials") {
  auto r = plane_ring();
  WeightAssignment w{{0, 1, 2}, 2, 3};
  CHECK(gm_weight_of(P("x1^3*x3^3 + x2^6", r), w) == 6);
  CHECK(gm_weight_of(P("x1*x2", r), WeightAssignment{{1, 1, 0}, 0, 0}) == 2);
  CHECK_FALSE(gm_weight_of(P("x1 + x3", r), w).has_value());
  CHECK_THROWS_AS(gm_weight_of(Polynomial(r), w), Error);
  CHECK(WeightAssignment::parse("0,1,2,2,3") == w);
  CHECK_THROWS_AS(WeightAssignment::parse("0,1,2"), InputError);
  CHECK_THROWS_AS(WeightAssignment::parse("0,a,2,2,3"), InputError);
}

TEST_CASE("torus check on catalog models") {
  auto klein = get_model("klein");
  CHECK_FALSE(gm_check_model(klein, WeightAssignment{{0, 1, 2}, 2, 3}));
  CHECK(gm_check_model(klein, WeightAssignment{}));
}

TEST_CASE("enumerator examples") {
  using E = std::vector<std::array<unsigned, 3>>;
  CHECK(enumerate_weighted_monomials(6, 1, 2, 6) == E{{3, 0, 3}, {2, 2, 2}, {1, 4, 1}, {0, 6, 0}});
  CHECK(enumerate_weighted_monomials(4, 1, 2, 4) == E{{2, 0, 2}, {1, 2, 1}, {0, 4, 0}});
  CHECK(enumerate_weighted_monomials(6, 1, 5, 0) == E{{6, 0, 0}});
}

TEST_CASE("every table row: supports, weights and seeded members") {
  CHECK(gm_table().size() == 19);
  for (const auto& row : gm_table()) {
    CAPTURE(row.index);
    auto red = reduce_weights(row);
    CHECK(enumerate_weighted_monomials(6, red.m_sharp, red.n_sharp, red.w6) == row.phi6_support);
    if (red.w4) CHECK(enumerate_weighted_monomials(4, red.m_sharp, red.n_sharp, *red.w4) == row.phi4_support);
    CHECK(row.phi6_weight == 3 * row.weights.wy);
    for (std::uint64_t seed : {0, 7}) {
      auto member = table_gm_family(row.index, seed);
      CHECK(gm_check_model(member.model, member.weights));
      WeightAssignment doubled{{2 * row.weights.wx[0], 2 * row.weights.wx[1], 2 * row.weights.wx[2]},
                               2 * row.weights.wy, 2 * row.weights.wz};
      CHECK(gm_check_model(member.model, doubled));
      CHECK(member.model.phi6().size() == row.phi6_support.size());
    }
  }
  CHECK_THROWS_AS(gm_table_row(0), InputError);
  CHECK_THROWS_AS(gm_table_row(20), InputError);
}

TEST_CASE("table rows 1 and 19") {
  auto first = table_gm_family(1, 3);
  CHECK(first.model.phi4().is_zero());
  CHECK(first.model.phi6().size() == 6);
  CHECK(first.model.phi6().degree_in(2) == 1);
  auto last = table_gm_family(19, 3);
  CHECK(last.model.phi6().size() == 1);
  CHECK(last.model.phi4().size() == 1);
  CHECK(last.weights == WeightAssignment{{0, 6, 20}, 10, 15});
}

TEST_CASE("additive action") {
  auto r = plane_ring();
  for (const auto& l : {PencilParameter(Rational(0)), PencilParameter(Rational(-5, 2)), PencilParameter()}) {
    auto p = psi(l, r);
    auto moved = ga_apply(p);
    CHECK(moved == embed(p, moved.ring()));
  }
  auto moved = ga_apply(P("x1", r));
  CHECK(to_string(moved) == "1/2*x3*t^2 + x2*t + x1");
  CHECK(to_string(psi(std::nullopt, r)) == "x3^2");
}

TEST_CASE("additive group law") {
  auto r = plane_ring();
  RingPtr big = r->extended("t")->extended("s");
  Polynomial t = Polynomial::variable(big, "t");
  Polynomial s = Polynomial::variable(big, "s");
  CoefficientSampler sampler(11);
  for (int k = 0; k < 5; ++k) {
    Polynomial p = random_form(r, 1 + sampler.below(4), sampler);
    Polynomial twice = ga_apply(ga_apply(p, big, t), big, s);
    CHECK(twice == ga_apply(p, big, t + s));
  }
}

TEST_CASE("additive family models") {
  CHECK_FALSE(ga_check_invariance(get_model("klein")));
  GaParameters p;
  auto m = build_ga_model(p);
  CHECK(ga_check_invariance(m));
  p.epsilon = Rational(-2, 3);
  p.lambda_prime = {Rational(5), std::nullopt};
  CHECK(ga_check_invariance(build_ga_model(p)));
  GaParameters cube;
  cube.lambda = {Rational(0), Rational(0), Rational(0)};
  try {
    build_ga_model(cube);
    FAIL("accepted");
  } catch (const ModelError& e) {
    CHECK(e.kind() == ModelError::Kind::NonIsolated);
  }
  GaParameters with_inf;
  with_inf.lambda = {Rational(0), Rational(1), std::nullopt};
  CHECK_THROWS_AS(build_ga_model(with_inf), ModelError);
}

TEST_CASE("singularities of invariant models lie over (1,0,0)") {
  std::vector<GaParameters> params(3);
  params[1].lambda = {Rational(-1), Rational(3), Rational(7, 2)};
  params[2].epsilon = 1;
  params[2].lambda_prime = {Rational(3), Rational(4)};
  for (const auto& p : params) {
    auto m = build_ga_model(p);
    auto len = count_singular_length(m);
    CHECK(len.strata[0].length == 0);
    CHECK(len.strata[1].length == 0);
    for (const auto& pt : rational_singular_points(m)) CHECK(pt.point == ProjPoint::make(1, 0, 0));
  }
}
