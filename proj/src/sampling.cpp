#include "veronese/sampling.hpp"

namespace veronese {

Rational CoefficientSampler::nonzero(unsigned max_numerator, unsigned max_denominator) {
  long n = static_cast<long>(below(max_numerator)) + 1;
  if (below(2)) n = -n;
  long d = static_cast<long>(below(max_denominator)) + 1;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::vector<Monomial> ternary_monomials(unsigned degree) {
  std::vector<Monomial> out;
  for (unsigned a = degree + 1; a-- > 0;)
    for (unsigned b = degree - a + 1; b-- > 0;) {
      Monomial m;
      m.set(0, a);
      m.set(1, b);
      m.set(2, degree - a - b);
      out.push_back(m);
    }
  return out;
}

Polynomial random_form(const RingPtr& ring, unsigned degree, CoefficientSampler& sampler, unsigned density) {
  std::vector<Polynomial::Term> terms;
  for (const auto& m : ternary_monomials(degree)) {
    bool keep = sampler.below(100) < density;
    Rational c = sampler.nonzero();
    if (keep) terms.push_back({m, c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

void monomials_upto(std::size_t var, std::size_t nvars, unsigned budget, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = budget + 1; e-- > 0;) {
    cur.set(var, e);
    monomials_upto(var + 1, nvars, budget - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

Polynomial random_polynomial(const RingPtr& ring, unsigned max_degree, CoefficientSampler& sampler,
                             unsigned density) {
  std::vector<Monomial> monos;
  Monomial cur;
  monomials_upto(0, ring->size(), max_degree, cur, monos);
  std::vector<Polynomial::Term> terms;
  for (const auto& m : monos) {
    bool keep = sampler.below(100) < density;
    Rational c = sampler.nonzero();
    if (keep) terms.push_back({m, c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

SexticModel random_model(std::uint64_t seed, unsigned density) {
  CoefficientSampler sampler(seed);
  RingPtr ring = plane_ring();
  for (int attempt = 0;; ++attempt) {
    Polynomial phi4 = random_form(ring, 4, sampler, density);
    Polynomial phi6 = random_form(ring, 6, sampler, density);
    try {
      return build_model(phi4, phi6, "random_" + std::to_string(seed));
    } catch (const ModelError&) {
      if (attempt > 1000) throw;
    }
  }
}

}  // namespace veronese
