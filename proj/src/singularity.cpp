#include "veronese/singularity.hpp"

#include <algorithm>

namespace veronese {

namespace {

// (x1, x2, x3, y) over the model's field.
// y comes first: with y as the last grevlex variable the chart bases swell
// badly over Q (twelve_node seed 1 drops from seconds to a fraction of one).
RingPtr ternary_y_ring(const CoefficientField& field) { return RingContext::make({"y", "x1", "x2", "x3"}, {2, 1, 1, 1}, field); }

Polynomial weierstrass_form(const SexticModel& m) {
  RingPtr ring = ternary_y_ring(m.field());
  Polynomial y = Polynomial::variable(ring, "y");
  return y.pow(3) + y * embed(m.phi4(), ring) + embed(m.phi6(), ring);
}

std::vector<std::string> chart_x_vars(int s) {
  std::vector<std::string> out;
  for (const char* v : {"x1", "x2", "x3"})
    if (stratum(s).unit_var != v) out.push_back(v);
  return out;
}

Polynomial to_stratum(const Polynomial& chart_poly, int s) {
  std::map<std::string, Rational> zeros;
  for (const auto& v : stratum(s).zero_vars) zeros[v] = 0;
  if (zeros.empty()) return chart_poly;
  return specialize(chart_poly, zeros);
}

Polynomial determinant3(const std::array<std::array<Polynomial, 3>, 3>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Polynomial hessian_determinant(const Polynomial& g, const std::vector<std::string>& vars) {
  const auto& ring = g.ring();
  std::array<std::array<Polynomial, 3>, 3> h{{{Polynomial(ring), Polynomial(ring), Polynomial(ring)},
                                               {Polynomial(ring), Polynomial(ring), Polynomial(ring)},
                                               {Polynomial(ring), Polynomial(ring), Polynomial(ring)}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = differentiate(differentiate(g, vars[i]), vars[j]);
  return determinant3(h);
}

// Generators of the projective singular locus of the discriminant, restricted.
Ideal discriminant_singular_ideal(const SexticModel& m, int s) {
  Polynomial d = discriminant_curve(m).form;
  std::vector<Polynomial> gens{restrict_to_stratum(d, s)};
  for (const auto& u : chart_x_vars(s)) gens.push_back(restrict_to_stratum(differentiate(d, u), s));
  RingPtr ring = gens.front().ring();
  return Ideal(ring, std::move(gens));
}

// Grevlex basis of a chart ideal cut out by plane forms. The homogeneous
// basis is computed first and dehomogenized: the unit variable is the last
// one left after dropping the zero variables, so leading monomials survive.
// The affine computation swells far more over Q.
GroebnerBasis chart_basis(const Ideal& chart_ideal, const std::vector<Polynomial>& forms, int s,
                          const GroebnerBudget& budget) {
  std::map<std::string, Rational> zeros;
  for (const auto& v : stratum(s).zero_vars) zeros[v] = 0;
  std::vector<Polynomial> local;
  for (const auto& f : forms) local.push_back(zeros.empty() ? f : specialize(f, zeros));
  RingPtr ring = local.front().ring();
  if (ring->name(ring->size() - 1) != stratum(s).unit_var) throw InvariantViolation("chart_basis: unit variable");
  auto homogeneous = groebner_basis(Ideal(ring, local), MonomialOrder::grevlex(), budget);
  std::vector<Polynomial> gens;
  for (const auto& g : homogeneous.basis)
    gens.push_back(embed(specialize(g, {{stratum(s).unit_var, Rational(1)}}), chart_ideal.ring()));
  GroebnerBasis out = groebner_basis(Ideal(chart_ideal.ring(), std::move(gens)), MonomialOrder::grevlex(), budget);
  out.ideal = chart_ideal;
  return out;
}

}  // namespace

Polynomial chart_function(const SexticModel& m, int s) {
  return specialize(weierstrass_form(m), {{stratum(s).unit_var, Rational(1)}});
}

Ideal singular_scheme(const SexticModel& m, int s) {
  Polynomial g = chart_function(m, s);
  std::vector<Polynomial> gens{g};
  for (const auto& u : chart_x_vars(s)) gens.push_back(differentiate(g, u));
  gens.push_back(differentiate(g, "y"));
  std::vector<Polynomial> restricted;
  for (const auto& p : gens) restricted.push_back(to_stratum(p, s));
  RingPtr ring = restricted.front().ring();
  return Ideal(ring, std::move(restricted));
}

LengthSummary count_singular_length(const SexticModel& m, const AnalysisOptions& opts) {
  LengthSummary out;
  std::size_t total = 0, points = 0;
  bool finite = true, counted = m.field().is_rational();
  for (int s : kStrata) {
    Ideal scheme = singular_scheme(m, s);
    auto gb = groebner_basis(scheme, MonomialOrder::grevlex(), opts.budget);
    StratumLength entry{s, true, 0, std::nullopt};
    if (missing_pure_power(gb)) {
      entry.zero_dimensional = false;
      finite = false;
    } else {
      entry.length = quotient_degree(gb);
      total += entry.length;
      if (counted) {
        entry.points = point_count(scheme, opts.budget);
        points += *entry.points;
      }
    }
    out.strata.push_back(entry);
  }
  if (finite) out.total_length = total;
  if (finite && counted) out.point_count = points;
  return out;
}

std::string AllNodes::to_string() const {
  switch (kind) {
    case Kind::Certified:
      return "certified";
    case Kind::Refuted:
      return "refuted";
    case Kind::Probabilistic:
      return "probabilistic";
  }
  return "?";
}

AllNodes all_nodes(const SexticModel& m, const AnalysisOptions& opts) {
  bool modular = !m.field().is_rational();
  for (int s : kStrata) {
    Polynomial g = chart_function(m, s);
    auto vars = chart_x_vars(s);
    vars.push_back("y");
    Polynomial det = to_stratum(hessian_determinant(g, vars), s);
    Ideal test = singular_scheme(m, s).with(det);
    if (!is_unit_ideal(test, opts.budget)) {
      if (modular) return {AllNodes::Kind::Probabilistic, s, m.field().prime, false};
      return {AllNodes::Kind::Refuted, s, 0, false};
    }
  }
  if (modular) return {AllNodes::Kind::Probabilistic, 0, m.field().prime, true};
  return {AllNodes::Kind::Certified, 0, 0, true};
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::Node:
      return "node";
    case PointClass::TypeCA:
      return "cA";
    case PointClass::NotCA:
      return "not_cA";
    case PointClass::SmoothPoint:
      return "smooth";
  }
  return "?";
}

namespace {

// g translated so that (Q, y0) sits at the origin of the chart of Q.
Polynomial local_chart_function(const SexticModel& m, const ProjPoint& q, const Rational& y0) {
  Polynomial g = weierstrass_form(m);
  int s = q.stratum();
  auto vars = chart_x_vars(s);
  vars.push_back("y");
  RingPtr chart = RingContext::make(vars, {1, 1, 2}, m.field());
  std::map<std::string, Polynomial> images;
  images.emplace(stratum(s).unit_var, Polynomial::constant(chart, 1));
  for (int i = 0; i < 3; ++i) {
    const std::string name = "x" + std::to_string(i + 1);
    if (name == stratum(s).unit_var) continue;
    images.emplace(name, Polynomial::variable(chart, name) + Polynomial::constant(chart, q[i]));
  }
  images.emplace("y", Polynomial::variable(chart, "y") + Polynomial::constant(chart, y0));
  return substitute(g, chart, images);
}

PointClass curve_path(const SexticModel& m, const ProjPoint& q, const GroebnerBudget& budget) {
  Quartic l4 = lambda4(m);
  PlaneCurve l6 = lambda6(m);
  bool proper = std::holds_alternative<PlaneCurve>(l4);
  unsigned m4 = multiplicity_at(l4, q);
  unsigned m6 = multiplicity_at(l6, q);
  bool node = false;
  if (proper && m4 == 1 && m6 == 2) {
    try {
      node = local_intersection(std::get<PlaneCurve>(l4), l6, q, budget) == 2;
    } catch (const IntersectionError&) {
      node = false;
    }
  }
  if (node) return PointClass::Node;
  if ((proper && m4 == 1) || m6 == 2) return PointClass::TypeCA;
  return PointClass::NotCA;
}

}  // namespace

PointClassification classify_rational_point_detailed(const SexticModel& m, const ProjPoint& q, const Rational& y0,
                                                     const GroebnerBudget& budget) {
  Polynomial h = local_chart_function(m, q, y0);
  for (const auto& t : h.terms())
    if (t.mono.degree() <= 1) return {PointClass::SmoothPoint, std::nullopt};

  std::array<std::array<Polynomial, 3>, 3> quad{{{Polynomial(h.ring()), Polynomial(h.ring()), Polynomial(h.ring())},
                                                  {Polynomial(h.ring()), Polynomial(h.ring()), Polynomial(h.ring())},
                                                  {Polynomial(h.ring()), Polynomial(h.ring()), Polynomial(h.ring())}}};
  bool nonzero = false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Monomial mono = Monomial::variable(i) * Monomial::variable(j);
      Rational c = h.coefficient(mono);
      if (i == j) c *= 2;
      quad[i][j] = Polynomial::constant(h.ring(), c);
      nonzero = nonzero || c != 0;
    }
  Rational det = determinant3(quad).constant_term();
  PointClass hessian = det != 0 ? PointClass::Node : nonzero ? PointClass::TypeCA : PointClass::NotCA;

  PointClassification out{hessian, std::nullopt};
  if (evaluate_at(m.phi4(), q) == 0 && evaluate_at(m.phi6(), q) == 0) {
    out.curve = curve_path(m, q, budget);
    if (*out.curve != hessian)
      throw InvariantViolation("ClassifierMismatch at " + q.to_string() + ": Hessian path says " +
                               to_string(hessian) + ", curve path says " + to_string(*out.curve));
  }
  return out;
}

PointClass classify_rational_point(const SexticModel& m, const ProjPoint& q, const Rational& y0,
                                   const GroebnerBudget& budget) {
  return classify_rational_point_detailed(m, q, y0, budget).verdict();
}

std::vector<SingularPoint> rational_singular_points(const SexticModel& m, const AnalysisOptions& opts) {
  std::vector<SingularPoint> out;
  if (!m.field().is_rational()) return out;
  for (int s : kStrata) {
    Ideal scheme = singular_scheme(m, s);
    auto gb = groebner_basis(scheme, MonomialOrder::grevlex(), opts.budget);
    if (gb.is_unit() || missing_pure_power(gb)) continue;
    const auto& ring = *scheme.ring();
    std::vector<SingularPoint> found;
    for (const auto& sol : rational_points(scheme, opts.budget)) {
      auto value = [&](const char* v) { return sol[ring.require(v)]; };
      Rational y = value("y");
      ProjPoint q = s == 3 ? ProjPoint::make(value("x1"), value("x2"), 1)
                  : s == 2 ? ProjPoint::make(value("x1"), 1, 0)
                           : ProjPoint::make(1, 0, 0);
      found.push_back({q, y, classify_rational_point_detailed(m, q, y, opts.budget)});
    }
    std::sort(found.begin(), found.end(), [](const SingularPoint& a, const SingularPoint& b) {
      return a.point == b.point ? a.y < b.y : a.point < b.point;
    });
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

Ideal sigma_ideal(const SexticModel& m, int s, const GroebnerBudget& budget) {
  return eliminate(singular_scheme(m, s), {"y"}, budget);
}

bool sigma_outside_lambda6_check(const SexticModel& m, const GroebnerBudget& budget) {
  for (int s : kStrata) {
    Polynomial f = restrict_to_stratum(m.phi6(), s);
    // The whole stratum lies on Lambda6: nothing outside it to compare.
    if (f.is_zero()) continue;
    Ideal sigma = sigma_ideal(m, s, budget);
    Ideal sing_d = discriminant_singular_ideal(m, s);
    Polynomial d = discriminant_curve(m).form;
    std::vector<Polynomial> forms;
    for (const char* u : {"x1", "x2", "x3"}) forms.push_back(differentiate(d, u));
    auto sing_gb = chart_basis(sing_d, forms, s, budget);
    auto sigma_gb = groebner_basis(sigma, MonomialOrder::grevlex(), budget);
    if (!equal_radicals_outside(sigma_gb, sing_gb, f, budget)) return false;
  }
  return true;
}

bool sigma_on_lambda6_check(const SexticModel& m, const GroebnerBudget& budget) {
  for (int s : kStrata) {
    Polynomial f = restrict_to_stratum(m.phi6(), s);
    Ideal sigma = sigma_ideal(m, s, budget).with(f);
    std::vector<Polynomial> gens{restrict_to_stratum(m.phi4(), s), f};
    for (const auto& u : chart_x_vars(s)) gens.push_back(restrict_to_stratum(differentiate(m.phi6(), u), s));
    RingPtr ring = f.ring();
    if (!equal_radicals(sigma, Ideal(ring, std::move(gens)), budget)) return false;
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "not_applicable";
  }
  return "?";
}

std::map<std::string, Verdict> nodal_consistency(const SexticModel& m, const GroebnerBudget& budget) {
  auto verdict = [](bool ok) { return ok ? Verdict::Pass : Verdict::Fail; };
  std::map<std::string, Verdict> out;
  bool whole = m.phi4().is_zero();
  out["c1"] = verdict(!whole);
  if (whole) {
    out["c2"] = out["c3"] = out["c4"] = Verdict::NotApplicable;
  } else {
    out["c2"] = verdict(gcd_poly(m.phi4(), m.phi6()).is_constant());
    // Sing(Lambda4) n Lambda6 is empty on every stratum.
    bool disjoint = true;
    for (int s : kStrata) {
      std::vector<Polynomial> gens{restrict_to_stratum(m.phi4(), s), restrict_to_stratum(m.phi6(), s)};
      for (std::size_t v = 0; v < 3; ++v) gens.push_back(restrict_to_stratum(differentiate(m.phi4(), v), s));
      RingPtr ring = gens.front().ring();
      if (!is_unit_ideal(Ideal(ring, std::move(gens)), budget)) disjoint = false;
    }
    out["c3"] = verdict(disjoint);
    out["c4"] = verdict(is_squarefree(m.phi4()));
  }
  // gcd(phi6, grad phi6) is the product of psi^(k-1) over components psi^k;
  // it is squarefree exactly when no multiplicity exceeds 2.
  Polynomial repeated = m.phi6();
  for (std::size_t v = 0; v < 3; ++v) {
    Polynomial d = differentiate(m.phi6(), v);
    if (!d.is_zero()) repeated = gcd_poly(repeated, d);
  }
  out["c5"] = verdict(repeated.is_constant() || is_squarefree(repeated));
  return out;
}

SingularityReport analyze(const SexticModel& m, const AnalysisOptions& opts) {
  SingularityReport r;
  r.model = m.name();
  r.field = m.field().is_rational() ? "Q" : "Fp";
  r.lengths = count_singular_length(m, opts);
  r.nodes = all_nodes(m, opts);
  if (opts.rational_points) r.points = rational_singular_points(m, opts);
  if (opts.sigma_checks) {
    r.sigma_outside_lambda6 = sigma_outside_lambda6_check(m, opts.budget);
    r.sigma_on_lambda6 = sigma_on_lambda6_check(m, opts.budget);
  }
  r.nodal = nodal_consistency(m, opts.budget);
  r.notes.push_back("discriminant normalized as 4*phi4^3 + 27*phi6^2");
  if (r.nodes.kind == AllNodes::Kind::Certified) {
    r.notes.push_back("all singular points are nodes: total_length is the number of singular points");
  } else {
    r.notes.push_back("total_length is the length of the singular scheme, not a point count");
  }
  if (!m.field().is_rational())
    r.notes.push_back("probabilistic: computed modulo " + std::to_string(m.field().prime) +
                      "; not a certificate over Q");
  return r;
}

}  // namespace veronese
