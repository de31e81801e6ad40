#include <algorithm>
#include <functional>

#include "veronese/groebner.hpp"
#include "veronese/univariate.hpp"

namespace veronese {

bool is_member(const Polynomial& p, const Ideal& ideal, const GroebnerBudget& budget) {
  if (p.is_zero()) return true;
  return normal_form(p, groebner_basis(ideal, MonomialOrder::grevlex(), budget)).is_zero();
}

bool is_unit_ideal(const Ideal& ideal, const GroebnerBudget& budget) {
  return groebner_basis(ideal, MonomialOrder::grevlex(), budget).is_unit();
}

namespace {

struct Extended {
  RingPtr ring;
  std::string tag;
  Ideal ideal;
};

Extended extend_with_tag(const Ideal& ideal, std::string_view stem) {
  std::string tag = ideal.ring()->fresh_name(stem);
  RingPtr ring = ideal.ring()->extended(tag);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, ring));
  return {ring, tag, Ideal(ring, std::move(gens))};
}

}  // namespace

bool radical_member(const Polynomial& p, const GroebnerBasis& gb, const GroebnerBudget& budget) {
  if (!same_ring(p.ring(), gb.ring())) throw RingMismatch("radical_member: ring mismatch");
  if (p.is_zero() || gb.is_unit()) return true;
  if (gb.order.kind() == MonomialOrder::Kind::GrevLex && !missing_pure_power(gb)) {
    // In an algebra of dimension L every nilpotent has p^L = 0.
    std::size_t length = quotient_degree(gb);
    Polynomial r = normal_form(p, gb);
    for (std::size_t k = 1; k <= length && !r.is_zero(); ++k) r = normal_form(r * p, gb);
    return r.is_zero();
  }
  const Ideal& ideal = gb.ideal;
  auto ext = extend_with_tag(ideal, "t");
  Polynomial t = Polynomial::variable(ext.ring, ext.tag);
  Polynomial one = Polynomial::constant(ext.ring, 1);
  return is_unit_ideal(ext.ideal.with(one - t * embed(p, ext.ring)), budget);
}

bool radical_member(const Polynomial& p, const Ideal& ideal, const GroebnerBudget& budget) {
  if (!same_ring(p.ring(), ideal.ring())) throw RingMismatch("radical_member: ring mismatch");
  if (p.is_zero()) return true;
  return radical_member(p, groebner_basis(ideal, MonomialOrder::grevlex(), budget), budget);
}

namespace {

// Every generator of `small` lies in the radical of the ideal of `big`.
bool radical_contains(const GroebnerBasis& big, const std::vector<Polynomial>& small, const Polynomial& factor,
                      const GroebnerBudget& budget) {
  for (const auto& g : small) {
    Polynomial p = g * factor;
    if (normal_form(p, big).is_zero()) continue;
    if (!radical_member(p, big, budget)) return false;
  }
  return true;
}

}  // namespace

bool equal_radicals(const Ideal& a, const Ideal& b, const GroebnerBudget& budget) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("equal_radicals: ring mismatch");
  Polynomial one = Polynomial::constant(a.ring(), 1);
  auto gb_a = groebner_basis(a, MonomialOrder::grevlex(), budget);
  auto gb_b = groebner_basis(b, MonomialOrder::grevlex(), budget);
  return radical_contains(gb_b, a.generators(), one, budget) && radical_contains(gb_a, b.generators(), one, budget);
}

bool equal_radicals_outside(const GroebnerBasis& a, const GroebnerBasis& b, const Polynomial& f,
                            const GroebnerBudget& budget) {
  if (!same_ring(a.ring(), b.ring()) || !same_ring(a.ring(), f.ring()))
    throw RingMismatch("equal_radicals_outside: ring mismatch");
  // V(a) minus V(f) lies in V(h) iff h*f vanishes on V(a).
  return radical_contains(b, a.ideal.generators(), f, budget) && radical_contains(a, b.ideal.generators(), f, budget);
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& vars, const GroebnerBudget& budget) {
  RingPtr sub = ideal.ring()->without(vars);
  auto order = MonomialOrder::elimination(*ideal.ring(), vars);
  auto gb = groebner_basis(ideal, order, budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis) {
    bool free = true;
    for (const auto& v : vars) free = free && !g.involves(ideal.ring()->require(v));
    if (free) kept.push_back(embed(g, sub));
  }
  return Ideal(sub, std::move(kept));
}

Ideal saturate(const Ideal& ideal, const Polynomial& g, const GroebnerBudget& budget) {
  if (g.is_zero()) throw Error("saturate: saturating element is zero");
  if (!same_ring(g.ring(), ideal.ring())) throw RingMismatch("saturate: ring mismatch");
  auto ext = extend_with_tag(ideal, "t");
  Polynomial t = Polynomial::variable(ext.ring, ext.tag);
  Polynomial one = Polynomial::constant(ext.ring, 1);
  Ideal sat = eliminate(ext.ideal.with(one - t * embed(g, ext.ring)), {ext.tag}, budget);
  std::vector<Polynomial> gens;
  for (const auto& h : sat.generators()) gens.push_back(embed(h, ideal.ring()));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GroebnerBudget& budget) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("intersection: ring mismatch");
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  auto ext = extend_with_tag(a, "t");
  Polynomial t = Polynomial::variable(ext.ring, ext.tag);
  Polynomial one_minus_t = Polynomial::constant(ext.ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * embed(g, ext.ring));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, ext.ring));
  Ideal both = eliminate(Ideal(ext.ring, std::move(gens)), {ext.tag}, budget);
  std::vector<Polynomial> out;
  for (const auto& h : both.generators()) out.push_back(embed(h, a.ring()));
  return Ideal(a.ring(), std::move(out));
}

std::optional<std::string> missing_pure_power(const GroebnerBasis& gb) {
  const auto& ring = *gb.ring();
  if (gb.is_unit()) return std::nullopt;
  for (std::size_t v = 0; v < ring.size(); ++v) {
    bool found = false;
    for (const auto& m : gb.leads)
      if (m.degree() == m[v] && m[v] > 0) found = true;
    if (!found) return ring.name(v);
  }
  return std::nullopt;
}

std::size_t quotient_degree(const GroebnerBasis& gb) {
  if (gb.is_unit()) return 0;
  const auto& ring = *gb.ring();
  if (ring.size() == 0) return gb.basis.empty() ? 1 : 0;
  if (auto v = missing_pure_power(gb)) throw NotZeroDimensional(*v);
  std::vector<unsigned> bound(ring.size(), 0);
  for (const auto& m : gb.leads)
    for (std::size_t v = 0; v < ring.size(); ++v)
      if (m.degree() == m[v] && m[v] > 0 && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
  auto standard = [&](const Monomial& m) {
    for (const auto& l : gb.leads)
      if (l.divides(m)) return false;
    return true;
  };
  std::size_t count = 0;
  Monomial m;
  // Staircase walk: once a monomial is non-standard, raising the current
  // exponent further keeps it non-standard.
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == ring.size()) {
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[v]; ++e) {
      m.set(v, e);
      if (!standard(m)) break;
      walk(v + 1);
    }
    m.set(v, 0);
  };
  walk(0);
  return count;
}

std::size_t quotient_degree(const Ideal& ideal, const GroebnerBudget& budget) {
  return quotient_degree(groebner_basis(ideal, MonomialOrder::grevlex(), budget));
}

namespace {

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  const auto& ring = *gb.ring();
  std::vector<Monomial> out;
  if (gb.is_unit()) return out;
  if (auto v = missing_pure_power(gb)) throw NotZeroDimensional(*v);
  std::vector<unsigned> bound(ring.size(), 0);
  for (const auto& m : gb.leads)
    for (std::size_t v = 0; v < ring.size(); ++v)
      if (m.degree() == m[v] && m[v] > 0 && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
  Monomial m;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == ring.size()) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e < bound[v]; ++e) {
      m.set(v, e);
      bool standard = true;
      for (const auto& l : gb.leads) standard = standard && !l.divides(m);
      if (!standard) break;
      walk(v + 1);
    }
    m.set(v, 0);
  };
  walk(0);
  return out;
}

}  // namespace

Polynomial univariate_eliminant(const GroebnerBasis& gb, std::size_t var) {
  const auto& ring = gb.ring();
  if (gb.is_unit()) return Polynomial::constant(ring, 1);
  auto basis = standard_monomials(gb);
  const auto& field = ring->field();
  auto coordinates = [&](const Polynomial& p) {
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& t : p.terms()) {
      auto it = std::find(basis.begin(), basis.end(), t.mono);
      if (it == basis.end()) throw InvariantViolation("normal form has a non-standard monomial");
      v[it - basis.begin()] = t.coeff;
    }
    return v;
  };
  // Row-reduced images of 1, v, v^2, ... ; `combo[k]` records each row as a
  // combination of the powers so a dependency yields the minimal polynomial.
  std::vector<std::vector<Rational>> rows;
  std::vector<std::vector<Rational>> combos;
  std::vector<std::size_t> pivots;
  Polynomial x = Polynomial::variable(ring, ring->name(var));
  Polynomial power = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k <= basis.size(); ++k) {
    auto row = coordinates(normal_form(power, gb));
    std::vector<Rational> combo(k + 1, Rational(0));
    combo[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational c = row[pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = normalize_coefficient(field, row[j] - c * rows[r][j]);
      for (std::size_t j = 0; j < combos[r].size(); ++j)
        combo[j] = normalize_coefficient(field, combo[j] - c * combos[r][j]);
    }
    auto pivot = std::find_if(row.begin(), row.end(), [](const Rational& c) { return c != 0; });
    if (pivot == row.end()) {
      std::vector<Polynomial::Term> terms;
      for (std::size_t j = 0; j < combo.size(); ++j)
        if (combo[j] != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(j)), combo[j]});
      return normalize_associate(Polynomial::from_terms(ring, std::move(terms)));
    }
    Rational inv = normalize_coefficient(field, 1 / *pivot);
    for (auto& c : row) c = normalize_coefficient(field, c * inv);
    for (auto& c : combo) c = normalize_coefficient(field, c * inv);
    pivots.push_back(static_cast<std::size_t>(pivot - row.begin()));
    rows.push_back(std::move(row));
    combos.push_back(std::move(combo));
    power = power * x;
  }
  throw InvariantViolation("no linear dependency among powers in a finite-dimensional quotient");
}

std::size_t point_count(const Ideal& ideal, const GroebnerBudget& budget) {
  auto gb = groebner_basis(ideal, MonomialOrder::grevlex(), budget);
  if (gb.is_unit()) return 0;
  const auto& ring = ideal.ring();
  if (ring->size() == 0) return 1;
  if (auto v = missing_pure_power(gb)) throw NotZeroDimensional(*v);
  if (!ring->field().is_rational()) throw Error("point_count: exact radicals need rational coefficients");
  // Seidenberg: adding the squarefree parts of the eliminants gives the radical.
  Ideal radical = ideal;
  for (std::size_t v = 0; v < ring->size(); ++v) {
    Polynomial f = univariate_eliminant(gb, v);
    radical = radical.with(from_dense(squarefree_part(to_dense(f, v)), ring, v));
  }
  return quotient_degree(radical, budget);
}

std::vector<std::vector<Rational>> rational_points(const Ideal& ideal, const GroebnerBudget& budget) {
  const auto& ring = ideal.ring();
  if (!ring->field().is_rational()) throw Error("rational_points: requires rational coefficients");
  auto gb = groebner_basis(ideal, MonomialOrder::grevlex(), budget);
  if (gb.is_unit()) return {};
  if (ring->size() == 0) return {{}};
  if (auto v = missing_pure_power(gb)) throw NotZeroDimensional(*v);
  std::size_t v = 0;
  Polynomial f = univariate_eliminant(gb, v);
  std::vector<std::vector<Rational>> out;
  for (const auto& root : rational_roots(to_dense(f, v))) {
    std::vector<Polynomial> gens;
    for (const auto& g : gb.basis) gens.push_back(specialize(g, {{ring->name(v), root}}));
    RingPtr rest = ring->without({ring->name(v)});
    for (auto& tail : rational_points(Ideal(rest, std::move(gens)), budget)) {
      tail.insert(tail.begin(), root);
      out.push_back(std::move(tail));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace veronese
