#include "support.hpp"

namespace support {

Ideal random_ideal(std::uint64_t seed) {
  static const std::vector<std::string> names{"x", "y", "z"};
  CoefficientSampler sampler(seed);
  std::size_t nvars = 1 + sampler.below(3);
  RingPtr ring = RingContext::make({names.begin(), names.begin() + nvars});
  std::size_t ngens = 2 + sampler.below(2);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ngens; ++i) {
    unsigned degree = 1 + sampler.below(4);
    gens.push_back(random_polynomial(ring, degree, sampler, 35));
  }
  return Ideal(ring, gens);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  auto lf = leading_term(f, order);
  auto lg = leading_term(g, order);
  Monomial l = Monomial::lcm(lf.mono, lg.mono);
  Rational one = 1;
  return f.times_monomial(l / lf.mono, one / lf.coeff) - g.times_monomial(l / lg.mono, one / lg.coeff);
}

std::string groebner_property_failure(std::uint64_t seed, const MonomialOrder& order) {
  Ideal ideal = random_ideal(seed);
  GroebnerBasis gb = groebner_basis(ideal, order);
  std::string tag = "seed " + std::to_string(seed) + ": ";
  for (const auto& g : ideal.generators())
    if (!normal_form(g, gb).is_zero()) return tag + "generator does not reduce to zero";
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      if (!normal_form(s_polynomial(gb.basis[i], gb.basis[j], order), gb).is_zero())
        return tag + "S-polynomial does not reduce to zero";
  GroebnerBasis again = groebner_basis(Ideal(ideal.ring(), gb.basis), order);
  if (again.basis.size() != gb.basis.size()) return tag + "basis of the basis differs in size";
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    if (!(again.basis[i] == gb.basis[i])) return tag + "basis of the basis differs";
  CoefficientSampler sampler(seed ^ 0x5eedULL);
  for (int k = 0; k < 3; ++k) {
    Polynomial p = random_polynomial(ideal.ring(), 5, sampler, 40);
    Polynomial r = normal_form(p, gb);
    if (!(normal_form(r, gb) == r)) return tag + "normal form is not idempotent";
    if (!normal_form(p - r, gb).is_zero()) return tag + "p - NF(p) is not in the ideal";
    for (const auto& t : r.terms())
      for (const auto& lead : gb.leads)
        if (lead.divides(t.mono)) return tag + "normal form has a reducible term";
  }
  return "";
}

std::pair<Polynomial, Polynomial> bezout_pair(unsigned d1, unsigned d2, std::uint64_t seed) {
  RingPtr ring = RingContext::make({"x", "y"});
  CoefficientSampler sampler(seed);
  Polynomial f = random_polynomial(ring, d1, sampler);
  Polynomial g = random_polynomial(ring, d2, sampler);
  return {f, g};
}

std::vector<SexticModel> seeded_models(std::size_t count) {
  std::vector<SexticModel> out;
  for (std::uint64_t seed = 1; seed <= count; ++seed) out.push_back(random_model(seed));
  return out;
}

std::vector<SexticModel> catalog_models() {
  std::vector<SexticModel> out;
  for (const auto& e : catalog_entries()) out.push_back(get_model(e.name));
  return out;
}

}  // namespace support
