#include "veronese/polynomial.hpp"

#include <algorithm>
#include <limits>

namespace veronese {

// ---------------------------------------------------------------- Monomial

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<Exponent>::max()) throw Error("monomial exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw Error("monomial exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// -------------------------------------------------------------- Polynomial

Rational normalize_coefficient(const CoefficientField& field, const Rational& c) {
  if (field.is_rational()) return c;
  Integer p(std::to_string(field.prime));
  Integer num = c.get_num() % p;
  if (num < 0) num += p;
  Integer den = c.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw Error("coefficient denominator vanishes modulo " + std::to_string(field.prime));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = (num * inv) % p;
  return Rational(r);
}

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return grevlex_compare(a.mono, b.mono) > 0;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->require(name);
  return monomial(std::move(ring), Monomial::variable(i), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  Rational cc = normalize_coefficient(p.ring_->field(), c);
  if (cc != 0) p.terms_.push_back({m, cc});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(merged.size());
  for (auto& t : merged) {
    if (!field.is_rational()) t.coeff = normalize_coefficient(field, t.coeff);
    if (t.coeff != 0) out.push_back(std::move(t));
  }
  terms_ = std::move(out);
}

void Polynomial::check_ring(const Polynomial& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) throw RingMismatch("polynomials belong to different rings");
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  check_ring(rhs);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& field = ring_->field();
  while (i < terms_.size() || j < rhs.terms_.size()) {
    int c = i == terms_.size()       ? -1
            : j == rhs.terms_.size() ? 1
                                     : grevlex_compare(terms_[i].mono, rhs.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(rhs.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + rhs.terms_[j].coeff;
      if (!field.is_rational()) s = normalize_coefficient(field, s);
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  check_ring(rhs);
  if (is_zero() || rhs.is_zero()) return Polynomial(ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Rational cc = normalize_coefficient(ring_->field(), c);
  if (cc == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * cc});
  if (!ring_->field().is_rational())
    for (auto& t : r.terms_) t.coeff = normalize_coefficient(ring_->field(), t.coeff);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r = scaled(c);
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == rhs.terms_[i].mono) || terms_[i].coeff != rhs.terms_[i].coeff) return false;
  return true;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw Error("evaluate: point has the wrong arity");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return normalize_coefficient(ring_->field(), sum);
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

// ------------------------------------------------------------- free functions

Polynomial differentiate(const Polynomial& p, std::string_view var) {
  return differentiate(p, p.ring()->require(var));
}

Polynomial differentiate(const Polynomial& p, std::size_t var) {
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

namespace {

long term_weight(const Monomial& m, const RingContext& ring) {
  long w = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) w += long(ring.weight(i)) * m[i];
  return w;
}

}  // namespace

WeightedDegree weighted_degree(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  long w = term_weight(p.terms().front().mono, *p.ring());
  for (const auto& t : p.terms())
    if (term_weight(t.mono, *p.ring()) != w) return std::nullopt;
  return w;
}

bool is_weighted_homogeneous(const Polynomial& p, long degree) {
  auto d = weighted_degree(p);
  return d && *d == degree;
}

Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      const std::map<std::string, Polynomial>& images) {
  const auto& src = *p.ring();
  std::vector<Polynomial> image_of;
  image_of.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = images.find(src.name(i));
    if (it != images.end()) {
      if (!same_ring(it->second.ring(), target))
        throw RingMismatch("substitute: image of '" + src.name(i) + "' is not in the target ring");
      image_of.push_back(it->second);
    } else if (target->has(src.name(i))) {
      image_of.push_back(Polynomial::variable(target, src.name(i)));
    } else if (p.involves(i)) {
      throw RingMismatch("substitute: variable '" + src.name(i) + "' has no image in the target ring");
    } else {
      image_of.push_back(Polynomial(target));
    }
  }
  // Cache powers of each image; exponents are small at this scale.
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * image_of[i]);
    return cache[e];
  };
  std::vector<Polynomial::Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (t.mono[i]) term = term * power(i, t.mono[i]);
    for (const auto& tt : term.terms()) acc.push_back(tt);
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial embed(const Polynomial& p, const RingPtr& target) {
  const auto& src = *p.ring();
  std::vector<std::optional<std::size_t>> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) where[i] = target->index_of(src.name(i));
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!where[i]) throw RingMismatch("embed: variable '" + src.name(i) + "' missing from target ring");
      m.set(*where[i], t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial specialize(const Polynomial& p, const std::map<std::string, Rational>& values) {
  std::vector<std::string> names;
  for (const auto& [name, value] : values) {
    p.ring()->require(name);
    names.push_back(name);
  }
  RingPtr target = p.ring()->without(names);
  std::map<std::string, Polynomial> images;
  for (const auto& [name, value] : values) images.emplace(name, Polynomial::constant(target, value));
  return substitute(p, target, images);
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  if (!same_ring(p.ring(), divisor.ring())) throw RingMismatch("divide_exact: ring mismatch");
  const auto& field = p.ring()->field();
  Polynomial rem = p;
  std::vector<Polynomial::Term> quotient;
  const auto& lead = divisor.leading();
  Rational inv_lc = normalize_coefficient(field, 1 / lead.coeff);
  while (!rem.is_zero()) {
    const auto& t = rem.leading();
    if (!lead.mono.divides(t.mono)) return std::nullopt;
    Monomial q = t.mono / lead.mono;
    Rational c = normalize_coefficient(field, t.coeff * inv_lc);
    quotient.push_back({q, c});
    rem = rem - divisor.times_monomial(q, c);
  }
  return Polynomial::from_terms(p.ring(), std::move(quotient));
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) throw InputError("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace veronese
