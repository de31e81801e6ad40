#include "veronese/groebner.hpp"

#include <algorithm>

namespace veronese {

// ------------------------------------------------------------------ orders

MonomialOrder MonomialOrder::elimination(const RingContext& ring, const std::vector<std::string>& block) {
  std::uint32_t mask = 0;
  for (const auto& name : block) mask |= 1u << ring.require(name);
  return elimination(mask);
}

namespace {

int grevlex_masked(const Monomial& a, const Monomial& b, std::uint32_t mask) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (!(mask >> i & 1u)) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (!(mask >> i & 1u)) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::GrevLex:
      return grevlex_compare(a, b);
    case Kind::Lex:
      for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::Elimination: {
      int c = grevlex_masked(a, b, block_);
      if (c) return c;
      return grevlex_masked(a, b, ~block_);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

// ------------------------------------------------------------------- ideals

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator lives in another ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("ideal sum: ring mismatch");
  auto gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const Polynomial& p) const {
  auto gens = gens_;
  gens.push_back(p);
  return Ideal(ring_, std::move(gens));
}

Polynomial::Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  const auto& terms = p.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (order.compare(terms[i].mono, terms[best].mono) > 0) best = i;
  return terms.at(best);
}

// ------------------------------------------------------------------ engine

namespace {

template <class C>
struct ITerm {
  Monomial m;
  C c;
};

template <class C>
using IPoly = std::vector<ITerm<C>>;

// Fraction-free arithmetic over Z standing in for Q: every polynomial is
// kept primitive with a positive leading coefficient.
struct IntegerArith {
  using C = Integer;
  static bool is_one(const C& c) { return c == 1; }
  // f' = fa*f - fb*m*g cancels the term cf*lm(f) against cg*lm(g).
  void multipliers(const C& cf, const C& cg, C& fa, C& fb) const {
    C g;
    mpz_gcd(g.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    fa = cg / g;
    fb = cf / g;
    if (fa < 0) {
      fa = -fa;
      fb = -fb;
    }
  }
  C mul(const C& a, const C& b) const { return a * b; }
  C sub(const C& a, const C& b) const { return a - b; }
  C neg(const C& a) const { return -a; }
  bool zero(const C& a) const { return a == 0; }
  void normalize(IPoly<C>& p) const {
    if (p.empty()) return;
    C g = 0;
    for (const auto& t : p) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    if (p.front().c < 0) g = -g;
    if (g != 1)
      for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
  // Shrinks a partially reduced pair (remainder, rest) by their joint content.
  void shrink(IPoly<C>& r, IPoly<C>& f) const {
    C g = 0;
    for (const auto* p : {&r, &f})
      for (const auto& t : *p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
    if (g == 0) return;
    for (auto* p : {&r, &f})
      for (auto& t : *p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
  C from_rational(const Rational& q) const { return q.get_num(); }
  Rational to_rational(const C& c) const { return Rational(c); }
};

// Rational arithmetic against a monic basis; used for exact normal forms.
struct RationalArith {
  using C = Rational;
  static bool is_one(const C& c) { return c == 1; }
  void multipliers(const C& cf, const C& cg, C& fa, C& fb) const {
    fa = 1;
    fb = cf / cg;
  }
  C mul(const C& a, const C& b) const { return a * b; }
  C sub(const C& a, const C& b) const { return a - b; }
  C neg(const C& a) const { return -a; }
  bool zero(const C& a) const { return a == 0; }
  void normalize(IPoly<C>& p) const {
    if (p.empty()) return;
    C inv = 1 / p.front().c;
    for (auto& t : p) t.c *= inv;
  }
  void shrink(IPoly<C>&, IPoly<C>&) const {}
  C from_rational(const Rational& q) const { return q; }
  Rational to_rational(const C& c) const { return c; }
};

struct ModArith {
  using C = std::uint64_t;
  std::uint64_t p;
  static bool is_one(const C& c) { return c == 1; }
  C mul(C a, C b) const { return static_cast<C>((unsigned __int128)a * b % p); }
  C sub(C a, C b) const { return a >= b ? a - b : a + (p - b); }
  C neg(C a) const { return a == 0 ? 0 : p - a; }
  bool zero(C a) const { return a == 0; }
  C inverse(C a) const {
    // Fermat: a^(p-2).
    C result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  void multipliers(const C& cf, const C& cg, C& fa, C& fb) const {
    fa = 1;
    fb = mul(cf, inverse(cg));
  }
  void normalize(IPoly<C>& poly) const {
    if (poly.empty()) return;
    C inv = inverse(poly.front().c);
    for (auto& t : poly) t.c = mul(t.c, inv);
  }
  void shrink(IPoly<C>&, IPoly<C>&) const {}
  C from_rational(const Rational& q) const {
    Rational r = normalize_coefficient(CoefficientField::prime_field(p), q);
    return r.get_num().get_ui();
  }
  Rational to_rational(const C& c) const { return Rational(Integer(std::to_string(c))); }
};

template <class Arith>
class Engine {
 public:
  using C = typename Arith::C;
  using Poly = IPoly<C>;

  Engine(Arith arith, MonomialOrder order, GroebnerBudget budget)
      : arith_(std::move(arith)), order_(order), budget_(budget) {}

  Poly import(const Polynomial& p) const {
    Poly out;
    out.reserve(p.size());
    if constexpr (std::is_same_v<Arith, IntegerArith>) {
      Integer den = 1;
      for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      for (const auto& t : p.terms()) {
        Rational scaled = t.coeff * den;
        out.push_back({t.mono, scaled.get_num()});
      }
    } else {
      for (const auto& t : p.terms()) out.push_back({t.mono, arith_.from_rational(t.coeff)});
    }
    sort(out);
    return out;
  }

  Polynomial export_poly(const Poly& p, const RingPtr& ring) const {
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.push_back({t.m, arith_.to_rational(t.c)});
    return Polynomial::from_terms(ring, std::move(terms));
  }

  void sort(Poly& p) const {
    std::sort(p.begin(), p.end(), [&](const ITerm<C>& a, const ITerm<C>& b) { return order_.compare(a.m, b.m) > 0; });
  }

  // fa*f - fb*m*g
  Poly combine(const C& fa, const Poly& f, std::size_t f_start, const C& fb, const Monomial& m, const Poly& g,
               std::size_t g_start) const {
    Poly out;
    out.reserve(f.size() - f_start + g.size() - g_start);
    bool scale_f = !Arith::is_one(fa);
    std::size_t i = f_start, j = g_start;
    while (i < f.size() || j < g.size()) {
      int c;
      Monomial gm;
      if (j < g.size()) gm = g[j].m * m;
      if (i == f.size()) {
        c = -1;
      } else if (j == g.size()) {
        c = 1;
      } else {
        c = order_.compare(f[i].m, gm);
      }
      if (c > 0) {
        out.push_back({f[i].m, scale_f ? arith_.mul(fa, f[i].c) : f[i].c});
        ++i;
      } else if (c < 0) {
        out.push_back({gm, arith_.neg(arith_.mul(fb, g[j].c))});
        ++j;
      } else {
        C v = arith_.sub(scale_f ? arith_.mul(fa, f[i].c) : f[i].c, arith_.mul(fb, g[j].c));
        if (!arith_.zero(v)) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  const Poly* find_reducer(const Monomial& m, const std::vector<const Poly*>& basis) const {
    for (const Poly* g : basis)
      if ((*g)[0].m.divides(m)) return g;
    return nullptr;
  }

  // Full reduction; the result is normalized.
  Poly reduce(Poly f, const std::vector<const Poly*>& basis) {
    Poly r = reduce_tail_only({}, std::move(f), basis);
    arith_.normalize(r);
    return r;
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  std::vector<Poly> buchberger(std::vector<Poly> input) {
    std::vector<Poly> polys;
    std::vector<bool> active;
    std::vector<Pair> pairs;
    auto active_basis = [&] {
      std::vector<const Poly*> out;
      for (std::size_t k = 0; k < polys.size(); ++k)
        if (active[k]) out.push_back(&polys[k]);
      return out;
    };
    auto add = [&](Poly h) {
      std::size_t hi = polys.size();
      const Monomial hm = h[0].m;
      polys.push_back(std::move(h));
      active.push_back(true);
      if (polys.size() > budget_.max_basis_size)
        throw BudgetExceeded("Groebner basis size budget of " + std::to_string(budget_.max_basis_size) +
                             " exceeded");
      // Gebauer-Moeller update.
      std::vector<Pair> fresh;
      for (std::size_t k = 0; k < hi; ++k)
        if (active[k]) fresh.push_back({k, hi, Monomial::lcm(polys[k][0].m, hm)});
      std::vector<bool> keep(fresh.size(), false);
      std::vector<bool> is_coprime(fresh.size());
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        is_coprime[a] = polys[fresh[a].i][0].m.coprime(hm);
        bool covered = false;
        if (!is_coprime[a]) {
          for (std::size_t b = 0; b < fresh.size() && !covered; ++b) {
            if (b == a || (b < a && !keep[b])) continue;
            covered = fresh[b].lcm.divides(fresh[a].lcm);
          }
        }
        keep[a] = !covered;
      }
      std::vector<Pair> accepted;
      for (std::size_t a = 0; a < fresh.size(); ++a)
        if (keep[a] && !is_coprime[a]) accepted.push_back(fresh[a]);
      std::vector<Pair> kept_old;
      for (const auto& p : pairs) {
        const Monomial& li = polys[p.i][0].m;
        const Monomial& lj = polys[p.j][0].m;
        if (hm.divides(p.lcm) && !(Monomial::lcm(li, hm) == p.lcm) && !(Monomial::lcm(lj, hm) == p.lcm)) continue;
        kept_old.push_back(p);
      }
      pairs = std::move(kept_old);
      pairs.insert(pairs.end(), accepted.begin(), accepted.end());
      for (std::size_t k = 0; k < hi; ++k)
        if (active[k] && hm.divides(polys[k][0].m)) active[k] = false;
    };

    // Seed with the inputs, reduced against what is already there.
    std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
      int c = order_.compare(a[0].m, b[0].m);
      return c != 0 ? c < 0 : a.size() < b.size();
    });
    for (auto& f : input) {
      Poly h = reduce(std::move(f), active_basis());
      if (h.empty()) continue;
      if (h[0].m.is_one()) return {h};
      add(std::move(h));
    }

    while (!pairs.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        int c = order_.compare(pairs[k].lcm, pairs[best].lcm);
        if (c < 0 || (c == 0 && (pairs[k].j < pairs[best].j ||
                                 (pairs[k].j == pairs[best].j && pairs[k].i < pairs[best].i))))
          best = k;
      }
      Pair pr = pairs[best];
      pairs.erase(pairs.begin() + best);
      Poly s = spoly(polys[pr.i], polys[pr.j], pr.lcm);
      Poly h = reduce(std::move(s), active_basis());
      if (h.empty()) continue;
      if (h[0].m.is_one()) return {h};
      add(std::move(h));
    }

    std::vector<Poly> minimal;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) minimal.push_back(polys[k]);
    return interreduce(std::move(minimal));
  }

  Poly spoly(const Poly& f, const Poly& g, const Monomial& lcm) {
    C fa, fb;
    arith_.multipliers(f[0].c, g[0].c, fa, fb);
    // fa*(lcm/lm f)*f - fb*(lcm/lm g)*g with the leading terms cancelling.
    Poly shifted_f;
    shifted_f.reserve(f.size() - 1);
    Monomial mf = lcm / f[0].m;
    for (std::size_t k = 1; k < f.size(); ++k) shifted_f.push_back({f[k].m * mf, f[k].c});
    return combine(fa, shifted_f, 0, fb, lcm / g[0].m, g, 1);
  }

  std::vector<Poly> interreduce(std::vector<Poly> basis) {
    std::sort(basis.begin(), basis.end(),
              [&](const Poly& a, const Poly& b) { return order_.compare(a[0].m, b[0].m) < 0; });
    std::vector<Poly> out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Poly*> others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.push_back(&basis[l]);
      // Leading terms are mutually irredundant, so only tails change.
      Poly head{basis[k][0]};
      Poly tail(basis[k].begin() + 1, basis[k].end());
      Poly reduced_tail = reduce_tail_only(std::move(head), std::move(tail), others);
      out.push_back(std::move(reduced_tail));
    }
    for (auto& p : out) arith_.normalize(p);
    return out;
  }

  // Moves irreducible terms of `tail` behind `head`; `head` is only rescaled.
  Poly reduce_tail_only(Poly head, Poly tail, const std::vector<const Poly*>& basis) {
    Poly r = std::move(head);
    Poly f = std::move(tail);
    std::size_t fi = 0;
    std::size_t since_shrink = 0;
    while (fi < f.size()) {
      const Poly* g = find_reducer(f[fi].m, basis);
      if (!g) {
        r.push_back(f[fi]);
        ++fi;
        continue;
      }
      if (++steps_ > budget_.max_steps)
        throw BudgetExceeded("Groebner step budget of " + std::to_string(budget_.max_steps) + " exceeded");
      C fa, fb;
      arith_.multipliers(f[fi].c, (*g)[0].c, fa, fb);
      Monomial m = f[fi].m / (*g)[0].m;
      f = combine(fa, f, fi + 1, fb, m, *g, 1);
      fi = 0;
      if (!Arith::is_one(fa))
        for (auto& t : r) t.c = arith_.mul(fa, t.c);
      if (++since_shrink >= 8) {
        arith_.shrink(r, f);
        since_shrink = 0;
      }
    }
    return r;
  }

 private:
  Arith arith_;
  MonomialOrder order_;
  GroebnerBudget budget_;
  std::size_t steps_ = 0;
};

template <class Arith>
std::vector<Polynomial> run_buchberger(Arith arith, const Ideal& ideal, const MonomialOrder& order,
                                       const GroebnerBudget& budget) {
  Engine<Arith> engine(std::move(arith), order, budget);
  std::vector<IPoly<typename Arith::C>> input;
  for (const auto& g : ideal.generators()) input.push_back(engine.import(g));
  auto basis = engine.buchberger(std::move(input));
  std::vector<Polynomial> out;
  for (const auto& b : basis) {
    Polynomial p = engine.export_poly(b, ideal.ring());
    Rational lc = leading_term(p, order).coeff;
    out.push_back(p.scaled(normalize_coefficient(ideal.ring()->field(), 1 / lc)));
  }
  return out;
}

}  // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order, const GroebnerBudget& budget) {
  GroebnerBasis gb{ideal, order, {}, {}};
  if (ideal.is_zero()) return gb;
  const auto& field = ideal.ring()->field();
  if (field.is_rational()) {
    gb.basis = run_buchberger(IntegerArith{}, ideal, order, budget);
  } else {
    gb.basis = run_buchberger(ModArith{field.prime}, ideal, order, budget);
  }
  std::sort(gb.basis.begin(), gb.basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(leading_term(a, order).mono, leading_term(b, order).mono) < 0;
  });
  for (const auto& b : gb.basis) gb.leads.push_back(leading_term(b, order).mono);
  return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!same_ring(p.ring(), gb.ring())) throw RingMismatch("normal_form: ring mismatch");
  if (gb.basis.empty() || p.is_zero()) return p;
  auto run = [&](auto arith) {
    using A = decltype(arith);
    Engine<A> engine(arith, gb.order, GroebnerBudget{SIZE_MAX, SIZE_MAX});
    std::vector<IPoly<typename A::C>> basis;
    for (const auto& b : gb.basis) basis.push_back(engine.import(b));
    std::vector<const IPoly<typename A::C>*> ptrs;
    for (const auto& b : basis) ptrs.push_back(&b);
    auto f = engine.import(p);
    auto r = engine.reduce_tail_only({}, std::move(f), ptrs);
    return engine.export_poly(r, p.ring());
  };
  const auto& field = p.ring()->field();
  if (field.is_rational()) return run(RationalArith{});
  return run(ModArith{field.prime});
}

}  // namespace veronese
