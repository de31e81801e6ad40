#include "veronese/univariate.hpp"

#include <algorithm>

namespace veronese {

DenseUnivariate to_dense(const Polynomial& p, std::size_t var) {
  DenseUnivariate f(p.degree_in(var) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono[var]) throw Error("to_dense: polynomial is not univariate");
    f[t.mono[var]] += t.coeff;
  }
  return f;
}

Polynomial from_dense(const DenseUnivariate& f, const RingPtr& ring, std::size_t var) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(i)), f[i]});
  return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

void trim(DenseUnivariate& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

DenseUnivariate rem(DenseUnivariate a, const DenseUnivariate& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    trim(a);
  }
  return a;
}

DenseUnivariate quotient(DenseUnivariate a, const DenseUnivariate& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  DenseUnivariate q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return q;
}

DenseUnivariate monic(DenseUnivariate f) {
  trim(f);
  if (f.empty()) return f;
  Rational lc = f.back();
  for (auto& c : f) c /= lc;
  return f;
}

DenseUnivariate gcd(DenseUnivariate a, DenseUnivariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

DenseUnivariate derivative(const DenseUnivariate& f) {
  DenseUnivariate d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

std::vector<Integer> primitive_integer(const DenseUnivariate& f) {
  Integer den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : f) {
    Rational s = c * den;
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

Integer eval_mod(const std::vector<Integer>& f, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = (acc * x + f[i]) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

std::vector<Integer> derivative(const std::vector<Integer>& f) {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

// Squarefree modulo p: gcd(f mod p, f' mod p) is a unit.
bool squarefree_mod(const std::vector<Integer>& f, unsigned long p) {
  auto reduce = [&](const std::vector<Integer>& g) {
    std::vector<long long> out;
    for (const auto& c : g) {
      Integer r = c % p;
      if (r < 0) r += p;
      out.push_back(r.get_si());
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  auto inv = [&](long long a) {
    long long result = 1, base = a, e = static_cast<long long>(p) - 2;
    while (e) {
      if (e & 1) result = result * base % static_cast<long long>(p);
      base = base * base % static_cast<long long>(p);
      e >>= 1;
    }
    return result;
  };
  auto a = reduce(f);
  auto b = reduce(derivative(f));
  long long P = static_cast<long long>(p);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      long long q = a.back() * inv(b.back()) % P;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = ((a[i + shift] - q * b[i]) % P + P) % P;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// a/b with a = b*r (mod m), |a|, |b| <= sqrt(m/2).
std::optional<Rational> reconstruct(const Integer& r, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = r;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  Integer abs_t = abs(t1);
  if (abs_t > bound) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

}  // namespace

DenseUnivariate squarefree_part(const DenseUnivariate& f) {
  DenseUnivariate g = f;
  trim(g);
  if (g.size() <= 1) return monic(g);
  return monic(quotient(g, gcd(g, derivative(g))));
}

std::vector<Rational> rational_roots(const DenseUnivariate& input) {
  DenseUnivariate f = squarefree_part(input);
  std::vector<Rational> roots;
  if (f.size() <= 1) return roots;
  if (f[0] == 0) {
    roots.push_back(0);
    f.erase(f.begin());
  }
  if (f.size() <= 1) return roots;
  auto z = primitive_integer(f);
  const Integer& lc = z.back();
  const Integer& c0 = z.front();

  unsigned long p = 3;
  for (;; ++p) {
    if (!is_prime(p)) continue;
    if (lc % p == 0) continue;
    if (squarefree_mod(z, p)) break;
  }

  // A root a/b has |a| <= |c0| and |b| <= |lc|; reconstruction needs m > 2*max^2.
  Integer largest = std::max<Integer>(abs(lc), abs(c0));
  Integer need = 2 * largest * largest;
  auto dz = derivative(z);
  Integer P(p);
  for (unsigned long r = 0; r < p; ++r) {
    Integer x(r);
    if (eval_mod(z, x, P) != 0) continue;
    Integer m = P;
    while (m <= need) {
      Integer m2 = m * m;
      Integer fx = eval_mod(z, x, m2);
      Integer dfx = eval_mod(dz, x, m2);
      Integer inv;
      if (!mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m2.get_mpz_t())) break;
      x = (x - fx * inv) % m2;
      if (x < 0) x += m2;
      m = m2;
    }
    auto cand = reconstruct(x, m);
    if (!cand) continue;
    Rational value = 0;
    for (std::size_t i = f.size(); i-- > 0;) value = value * *cand + f[i];
    if (value == 0) roots.push_back(*cand);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace veronese
