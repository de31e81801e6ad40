#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "veronese/polynomial.hpp"

namespace veronese {

/// Monomial order. Elimination(block) is the product order: grevlex on the
/// block variables first, ties broken by grevlex on the remaining ones.
class MonomialOrder {
 public:
  enum class Kind { GrevLex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder elimination(std::uint32_t block_mask) { return MonomialOrder(Kind::Elimination, block_mask); }
  static MonomialOrder elimination(const RingContext& ring, const std::vector<std::string>& block);

  Kind kind() const { return kind_; }
  std::uint32_t block() const { return block_; }
  /// Positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder&) const = default;
  std::string to_string() const;

 private:
  MonomialOrder(Kind kind, std::uint32_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::uint32_t block_;
};

/// Caps on a single basis computation. Exceeding either raises BudgetExceeded.
struct GroebnerBudget {
  std::size_t max_basis_size = 5000;
  std::size_t max_steps = 5'000'000;
};

/// Generators of an ideal; zero generators are dropped on construction.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  Ideal operator+(const Ideal& other) const;
  Ideal with(const Polynomial& p) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerBasis {
  Ideal ideal;
  MonomialOrder order;
  /// Reduced basis, monic, sorted by increasing leading monomial.
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;

  const RingPtr& ring() const { return ideal.ring(); }
  bool is_unit() const { return leads.size() == 1 && leads[0].is_one(); }
};

Polynomial::Term leading_term(const Polynomial& p, const MonomialOrder& order);

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
                             const GroebnerBudget& budget = {});
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool is_member(const Polynomial& p, const Ideal& ideal, const GroebnerBudget& budget = {});
bool is_unit_ideal(const Ideal& ideal, const GroebnerBudget& budget = {});
/// p^k in I for some k, via 1 in I + (1 - t*p).
bool radical_member(const Polynomial& p, const Ideal& ideal, const GroebnerBudget& budget = {});
/// Radical membership against a basis; zero-dimensional grevlex bases use
/// p^L in I with L the quotient length, anything else the test above.
bool radical_member(const Polynomial& p, const GroebnerBasis& gb, const GroebnerBudget& budget = {});
/// Every generator of each ideal lies in the radical of the other.
bool equal_radicals(const Ideal& a, const Ideal& b, const GroebnerBudget& budget = {});
/// sqrt(a : f^inf) == sqrt(b : f^inf), decided without saturating: each
/// generator of one ideal times f lies in the radical of the other.
bool equal_radicals_outside(const GroebnerBasis& a, const GroebnerBasis& b, const Polynomial& f,
                            const GroebnerBudget& budget = {});

/// I intersected with the subring without `vars`; the result lives in
/// ring().without(vars).
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& vars, const GroebnerBudget& budget = {});
/// I : g^infinity.
Ideal saturate(const Ideal& ideal, const Polynomial& g, const GroebnerBudget& budget = {});
Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GroebnerBudget& budget = {});

/// Name of a variable with no pure power among the leading monomials, if any.
std::optional<std::string> missing_pure_power(const GroebnerBasis& gb);
/// Number of standard monomials; throws NotZeroDimensional.
std::size_t quotient_degree(const GroebnerBasis& gb);
std::size_t quotient_degree(const Ideal& ideal, const GroebnerBudget& budget = {});

/// Minimal polynomial of a variable modulo a zero-dimensional ideal, as a
/// polynomial in that variable only.
Polynomial univariate_eliminant(const GroebnerBasis& gb, std::size_t var);
/// Number of distinct points over the algebraic closure (length of the
/// quotient by the radical). Zero-dimensional input only.
std::size_t point_count(const Ideal& ideal, const GroebnerBudget& budget = {});
/// All rational solutions of a zero-dimensional ideal over Q, one value per
/// ring variable, sorted lexicographically.
std::vector<std::vector<Rational>> rational_points(const Ideal& ideal, const GroebnerBudget& budget = {});

}  // namespace veronese
