#include "veronese/model.hpp"

#include <sstream>

namespace veronese {

RingPtr plane_ring(CoefficientField field) { return RingContext::make({"x1", "x2", "x3"}, field); }

RingPtr model_ring(CoefficientField field) {
  return RingContext::make({"x1", "x2", "x3", "y", "z"}, {1, 1, 1, 2, 3}, field);
}

const Stratum& stratum(int index) {
  static const std::array<Stratum, 3> strata = {
      Stratum{1, "x1", {"x2", "x3"}, {}},
      Stratum{2, "x2", {"x3"}, {"x1"}},
      Stratum{3, "x3", {}, {"x1", "x2"}},
  };
  if (index < 1 || index > 3) throw Error("stratum index must be 1, 2 or 3");
  return strata[index - 1];
}

Polynomial restrict_to_stratum(const Polynomial& p, int index) {
  const auto& s = stratum(index);
  std::map<std::string, Rational> values{{s.unit_var, 1}};
  for (const auto& v : s.zero_vars) values[v] = 0;
  return specialize(p, values);
}

// ------------------------------------------------------------------- model

ModelError::ModelError(Kind kind, const std::string& detail)
    : InputError(kind_name(kind) + ": " + detail), kind_(kind) {}

std::string ModelError::kind_name(Kind kind) {
  switch (kind) {
    case Kind::WrongDegree:
      return "WrongDegree";
    case Kind::Phi6Zero:
      return "Phi6Zero";
    case Kind::NonIsolated:
      return "NonIsolated";
    case Kind::CoprimalityViolation:
      return "CoprimalityViolation";
  }
  return "?";
}

SexticModel build_model(const Polynomial& phi4, const Polynomial& phi6, std::string name) {
  using K = ModelError::Kind;
  RingPtr ring = plane_ring(phi6.ring()->field());
  if (!same_ring(phi4.ring(), ring) || !same_ring(phi6.ring(), ring))
    throw RingMismatch("model forms must live in the ring (x1, x2, x3)");
  if (!phi4.is_zero() && !is_weighted_homogeneous(phi4, 4))
    throw ModelError(K::WrongDegree, "phi4 is not a quartic form");
  if (phi6.is_zero()) throw ModelError(K::Phi6Zero, "phi6 is zero");
  if (!is_weighted_homogeneous(phi6, 6)) throw ModelError(K::WrongDegree, "phi6 is not a sextic form");

  // A nonconstant psi with psi | phi4 and psi^2 | phi6 divides phi4, phi6 and
  // every partial of phi6. With phi4 = 0 this is the squarefree test.
  Polynomial g = gcd_poly(phi4, phi6);
  for (std::size_t v = 0; v < 3 && !g.is_constant(); ++v) {
    Polynomial d = differentiate(phi6, v);
    if (!d.is_zero()) g = gcd_poly(g, d);
  }
  if (!g.is_constant())
    throw ModelError(K::NonIsolated, "psi = " + to_string(g) + " divides phi4 and psi^2 divides phi6");

  if (!phi4.is_zero()) {
    Polynomial common = gcd_poly(phi4, phi6);
    Polynomial rest = *divide_exact(phi6, common);
    Polynomial h = gcd_poly(phi4, rest);
    if (!h.is_constant())
      throw ModelError(K::CoprimalityViolation, "phi4 and phi6/gcd(phi4, phi6) share " + to_string(h));
  }
  return SexticModel(phi4, phi6, std::move(name));
}

SexticModel build_model(std::string_view phi4, std::string_view phi6, std::string name, CoefficientField field) {
  RingPtr ring = plane_ring(field);
  return build_model(parse_poly(phi4, ring), parse_poly(phi6, ring), std::move(name));
}

SexticModel SexticModel::over(CoefficientField field) const {
  RingPtr ring = plane_ring(field);
  auto move = [&](const Polynomial& p) {
    std::vector<Polynomial::Term> terms(p.terms().begin(), p.terms().end());
    return Polynomial::from_terms(ring, std::move(terms));
  };
  return build_model(move(phi4_), move(phi6_), name_);
}

Polynomial defining_polynomial(const SexticModel& m) {
  RingPtr ring = model_ring(m.field());
  Polynomial y = Polynomial::variable(ring, "y");
  Polynomial z = Polynomial::variable(ring, "z");
  return z.pow(2) + y.pow(3) + y * embed(m.phi4(), ring) + embed(m.phi6(), ring);
}

// ------------------------------------------------------------------ curves

PlaneCurve make_curve(const Polynomial& form) {
  if (form.is_zero()) throw Error("a plane curve needs a nonzero form");
  auto d = weighted_degree(form);
  if (!d || *d <= 0) throw Error("a plane curve needs a homogeneous form of positive degree");
  return {form, static_cast<unsigned>(*d)};
}

Quartic lambda4(const SexticModel& m) {
  if (m.phi4().is_zero()) return WholePlane{};
  return make_curve(m.phi4());
}

PlaneCurve lambda6(const SexticModel& m) { return make_curve(m.phi6()); }

PlaneCurve discriminant_curve(const SexticModel& m) {
  Polynomial d = m.phi4().pow(3).scaled(4) + m.phi6().pow(2).scaled(27);
  return make_curve(d);
}

ProjPoint ProjPoint::make(Rational x1, Rational x2, Rational x3) {
  ProjPoint p;
  p.c_ = {x1, x2, x3};
  int last = -1;
  for (int i = 0; i < 3; ++i)
    if (p.c_[i] != 0) last = i;
  if (last < 0) throw InputError("the point (0,0,0) is not in P^2");
  Rational s = p.c_[last];
  for (auto& c : p.c_) {
    c /= s;
    c.canonicalize();
  }
  return p;
}

int ProjPoint::stratum() const {
  if (c_[2] != 0) return 3;
  if (c_[1] != 0) return 2;
  return 1;
}

std::string ProjPoint::to_string() const {
  return "(" + veronese::to_string(c_[0]) + "," + veronese::to_string(c_[1]) + "," + veronese::to_string(c_[2]) +
         ")";
}

ProjPoint parse_point(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') s += ch;
  std::vector<Rational> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("malformed point '" + std::string(text) + "'");
    parts.push_back(parse_rational(item));
  }
  if (parts.size() != 3) throw InputError("a point needs three coordinates: '" + std::string(text) + "'");
  return ProjPoint::make(parts[0], parts[1], parts[2]);
}

Rational evaluate_at(const Polynomial& ternary, const ProjPoint& q) {
  std::vector<Rational> pt(q.coords().begin(), q.coords().end());
  if (ternary.ring()->size() != 3) throw RingMismatch("evaluate_at: expects a ternary form");
  return ternary.evaluate(pt);
}

Polynomial localize_at(const Polynomial& ternary, const ProjPoint& q) {
  const auto& src = ternary.ring();
  int s = q.stratum();
  std::vector<std::string> chart_vars;
  for (int i = 0; i < 3; ++i)
    if (i != s - 1) chart_vars.push_back(src->name(i));
  RingPtr chart = RingContext::make(chart_vars, src->field());
  std::map<std::string, Polynomial> images;
  for (int i = 0; i < 3; ++i) {
    const auto& name = src->name(i);
    if (i == s - 1) {
      images.emplace(name, Polynomial::constant(chart, 1));
    } else {
      images.emplace(name, Polynomial::variable(chart, name) + Polynomial::constant(chart, q[i]));
    }
  }
  return substitute(ternary, chart, images);
}

unsigned multiplicity_at(const PlaneCurve& c, const ProjPoint& q) {
  Polynomial f = localize_at(c.form, q);
  if (f.constant_term() != 0) return 0;
  unsigned low = UINT_MAX;
  for (const auto& t : f.terms()) low = std::min(low, t.mono.degree());
  return low;
}

unsigned multiplicity_at(const Quartic& c, const ProjPoint& q) {
  if (std::holds_alternative<WholePlane>(c)) return kInfiniteMultiplicity;
  return multiplicity_at(std::get<PlaneCurve>(c), q);
}

namespace {

ProjPoint point_from_stratum(int index, const std::vector<Rational>& values) {
  switch (index) {
    case 3:
      return ProjPoint::make(values.at(0), values.at(1), 1);
    case 2:
      return ProjPoint::make(values.at(0), 1, 0);
    default:
      return ProjPoint::make(1, 0, 0);
  }
}

}  // namespace

CurveSingularLocus curve_singular_locus(const PlaneCurve& c, const GroebnerBudget& budget) {
  std::vector<Polynomial> gens{c.form};
  for (std::size_t v = 0; v < 3; ++v) gens.push_back(differentiate(c.form, v));
  CurveSingularLocus out{Ideal(c.form.ring(), gens), true, true, {}};
  for (int s : kStrata) {
    std::vector<Polynomial> local;
    for (const auto& g : gens) local.push_back(restrict_to_stratum(g, s));
    RingPtr ring = restrict_to_stratum(c.form, s).ring();
    Ideal piece(ring, std::move(local));
    auto gb = groebner_basis(piece, MonomialOrder::grevlex(), budget);
    if (gb.is_unit()) continue;
    out.empty = false;
    if (missing_pure_power(gb)) {
      out.finite = false;
      continue;
    }
    if (!ring->field().is_rational()) continue;
    for (const auto& pt : rational_points(piece, budget)) out.rational_points.push_back(point_from_stratum(s, pt));
  }
  std::sort(out.rational_points.begin(), out.rational_points.end());
  return out;
}

std::optional<PlaneCurve> common_components(const PlaneCurve& a, const PlaneCurve& b) {
  Polynomial g = gcd_poly(a.form, b.form);
  if (g.is_constant()) return std::nullopt;
  return make_curve(g);
}

unsigned local_intersection(const PlaneCurve& a, const PlaneCurve& b, const ProjPoint& q,
                            const GroebnerBudget& budget) {
  using K = IntersectionError::Kind;
  Polynomial f = localize_at(a.form, q);
  Polynomial g = localize_at(b.form, q);
  if (f.constant_term() != 0 || g.constant_term() != 0) return 0;
  // A common factor not through q is a unit in the local ring at q; divide it
  // out so the remaining ideal is zero-dimensional.
  Polynomial h = gcd_poly(f, g);
  if (!h.is_constant()) {
    if (h.constant_term() == 0)
      throw IntersectionError(K::CommonComponentThroughPoint,
                              "the curves share the component " + to_string(h) + " through " + q.to_string());
    f = *divide_exact(f, h);
    g = *divide_exact(g, h);
  }
  Ideal j(f.ring(), {f, g});
  try {
    std::size_t total = quotient_degree(j, budget);
    const auto& ring = f.ring();
    Polynomial u = Polynomial::variable(ring, ring->name(0));
    Polynomial v = Polynomial::variable(ring, ring->name(1));
    Ideal away = ideal_intersection(saturate(j, u, budget), saturate(j, v, budget), budget);
    std::size_t rest = quotient_degree(away, budget);
    return static_cast<unsigned>(total - rest);
  } catch (const NotZeroDimensional&) {
    throw IntersectionError(K::NotIsolated, "the intersection is not isolated at " + q.to_string());
  }
}

// ------------------------------------------------------------ fibers and j

std::string JValue::to_string() const { return value ? veronese::to_string(*value) : "infinity"; }

JValue j_value(const SexticModel& m, const ProjPoint& q) {
  Rational a = evaluate_at(m.phi4(), q);
  Rational b = evaluate_at(m.phi6(), q);
  if (a == 0 && b == 0) throw CuspidalPoint("j is undefined at " + q.to_string() + ": phi4 and phi6 both vanish");
  Rational den = 4 * a * a * a + 27 * b * b;
  if (den == 0) return {};
  Rational j = 6912 * a * a * a / den;
  j.canonicalize();
  return {j};
}

std::string to_string(FiberType t) {
  switch (t) {
    case FiberType::Smooth:
      return "smooth";
    case FiberType::Nodal:
      return "nodal";
    case FiberType::Cuspidal:
      return "cuspidal";
  }
  return "?";
}

FiberType fiber_type(const SexticModel& m, const ProjPoint& q) {
  Rational a = evaluate_at(m.phi4(), q);
  Rational b = evaluate_at(m.phi6(), q);
  if (a == 0 && b == 0) return FiberType::Cuspidal;
  if (4 * a * a * a + 27 * b * b == 0) return FiberType::Nodal;
  return FiberType::Smooth;
}

bool w_blowup_check(const SexticModel& m, const ProjPoint& q) {
  return multiplicity_at(lambda4(m), q) < 4 || multiplicity_at(lambda6(m), q) < 6;
}

}  // namespace veronese
