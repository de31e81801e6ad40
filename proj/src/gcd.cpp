#include <algorithm>

#include "veronese/polynomial.hpp"

namespace veronese {

namespace {

// Coefficients of p as a polynomial in `var`, indexed by degree.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::vector<std::vector<Polynomial::Term>> buckets(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.ring(), std::move(b)));
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) {
  unsigned d = p.degree_in(var);
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono[var] != d) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial exact_quotient(const Polynomial& p, const Polynomial& d) {
  auto q = divide_exact(p, d);
  if (!q) throw InvariantViolation("gcd: expected exact division failed");
  return *q;
}

// lc(b)^(deg a - deg b + 1) * a reduced modulo b, all degrees in `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  unsigned db = b.degree_in(var);
  Polynomial lcb = leading_coefficient_in(b, var);
  int pending = int(a.degree_in(var)) - int(db) + 1;
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    unsigned dr = r.degree_in(var);
    Polynomial lcr = leading_coefficient_in(r, var);
    r = lcb * r - lcr.times_monomial(Monomial::variable(var, dr - db), 1) * b;
    --pending;
  }
  if (pending > 0) r = lcb.pow(static_cast<unsigned>(pending)) * r;
  return r;
}

std::optional<std::size_t> some_variable(const Polynomial& p, const Polynomial& q) {
  for (std::size_t v = p.ring()->size(); v-- > 0;)
    if (p.involves(v) || q.involves(v)) return v;
  return std::nullopt;
}

Polynomial gcd_rec(const Polynomial& p, const Polynomial& q);

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.ring());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_gcd(Polynomial a, Polynomial b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  Polynomial g = Polynomial::constant(a.ring(), 1);
  Polynomial h = Polynomial::constant(a.ring(), 1);
  for (;;) {
    unsigned delta = a.degree_in(var) - b.degree_in(var);
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return b;
    if (r.degree_in(var) == 0) return Polynomial::constant(a.ring(), 1);
    a = b;
    b = exact_quotient(r, g * h.pow(delta));
    g = leading_coefficient_in(a, var);
    if (delta == 0) {
      // h stays put: h^(1-0) * g^0 = h.
    } else {
      h = exact_quotient(g.pow(delta), h.pow(delta - 1));
    }
  }
}

Polynomial gcd_rec(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return normalize_associate(q);
  if (q.is_zero()) return normalize_associate(p);
  auto var = some_variable(p, q);
  if (!var) return Polynomial::constant(p.ring(), 1);
  std::size_t v = *var;
  if (!p.involves(v)) return gcd_rec(p, content_in(q, v));
  if (!q.involves(v)) return gcd_rec(content_in(p, v), q);
  Polynomial cp = content_in(p, v);
  Polynomial cq = content_in(q, v);
  Polynomial pp = exact_quotient(p, cp);
  Polynomial qq = exact_quotient(q, cq);
  Polynomial g = primitive_gcd(pp, qq, v);
  g = exact_quotient(g, content_in(g, v));
  return normalize_associate(gcd_rec(cp, cq) * g);
}

}  // namespace

Polynomial normalize_associate(const Polynomial& p) {
  if (p.is_zero()) return p;
  const auto& field = p.ring()->field();
  if (!field.is_rational()) {
    Rational inv = normalize_coefficient(field, 1 / p.leading().coeff);
    return p.scaled(inv);
  }
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading().coeff < 0) scale = -scale;
  return p.scaled(scale);
}

Polynomial gcd_poly(const Polynomial& p, const Polynomial& q) {
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch("gcd: ring mismatch");
  if (p.is_zero() && q.is_zero()) throw Error("gcd: both arguments are zero");
  return gcd_rec(p, q);
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  Polynomial g = p;
  for (std::size_t v = 0; v < p.ring()->size() && !g.is_constant(); ++v) {
    Polynomial d = differentiate(p, v);
    if (!d.is_zero()) g = gcd_poly(g, d);
  }
  return g.is_constant();
}

}  // namespace veronese
