#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "veronese/errors.hpp"
#include "veronese/monomial.hpp"
#include "veronese/ring.hpp"

namespace veronese {

using Rational = mpq_class;
using Integer = mpz_class;

/// Weighted degree of a polynomial; empty when it is not weighted-homogeneous
/// (and, by convention, for the zero polynomial).
using WeightedDegree = std::optional<long>;

/// Sparse polynomial with exact coefficients over a RingContext.
///
/// Terms are kept sorted by descending grevlex order with no zero
/// coefficients, so equal polynomials have identical term lists. Over a prime
/// field coefficients are stored as integers in [0, p).
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  /// Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Grevlex-leading term; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
  Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& rhs) const;

  /// Evaluates at a point given one value per ring variable.
  Rational evaluate(std::span<const Rational> point) const;

 private:
  void canonicalize();
  void check_ring(const Polynomial& rhs) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Reduces a rational into the ring's coefficient field (identity over Q).
Rational normalize_coefficient(const CoefficientField& field, const Rational& c);

Polynomial differentiate(const Polynomial& p, std::string_view var);
Polynomial differentiate(const Polynomial& p, std::size_t var);

WeightedDegree weighted_degree(const Polynomial& p);
bool is_weighted_homogeneous(const Polynomial& p, long degree);

/// Composes p with a substitution. Variables absent from `images` map to the
/// same-named variable of `target`; every image must live in `target`.
Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      const std::map<std::string, Polynomial>& images);
/// Moves p into another ring matching variables by name.
Polynomial embed(const Polynomial& p, const RingPtr& target);
/// Substitutes constants for some variables and drops them from the ring.
Polynomial specialize(const Polynomial& p, const std::map<std::string, Rational>& values);

/// Multivariate quotient when `divisor` divides `p` exactly; empty otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& divisor);

/// Greatest common divisor normalized to content 1 with positive leading
/// coefficient (monic over a prime field). gcd(p, 0) = normalize(p).
Polynomial gcd_poly(const Polynomial& p, const Polynomial& q);
/// Primitive, sign-normalized associate of p (monic over a prime field).
Polynomial normalize_associate(const Polynomial& p);
/// Content 1 and no repeated factors: p / gcd(p, all partial derivatives).
bool is_squarefree(const Polynomial& p);

/// Canonical text form: grevlex-descending terms, reduced fractions,
/// explicit '*' and '^'.
std::string to_string(const Polynomial& p);
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace veronese
