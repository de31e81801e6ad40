#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "veronese/model.hpp"
#include "veronese/sampling.hpp"

namespace veronese {

// --------------------------------------------------------------- torus (Gm)

/// Weights of (x1, x2, x3, y, z) under a one-dimensional torus.
struct WeightAssignment {
  std::array<long, 3> wx{};
  long wy = 0;
  long wz = 0;

  static WeightAssignment parse(std::string_view text);  // "a,b,c,d,e"
  std::string to_string() const;
  bool operator==(const WeightAssignment&) const = default;
};

/// Common weight of all terms; empty when p is not semi-invariant. Variables
/// are matched by name (x1, x2, x3, y, z). Throws on the zero polynomial.
std::optional<long> gm_weight_of(const Polynomial& p, const WeightAssignment& w);

/// wt(phi6) = 3 wt(y) = 2 wt(z), and phi4 = 0 or wt(phi4) = 2 wt(y) with
/// 2 wt(phi6) = 3 wt(phi4).
bool gm_check_model(const SexticModel& m, const WeightAssignment& w);

/// Exponent triples (k1, k2, k3) with k1 + k2 + k3 = total_degree and
/// m_sharp*k2 + n_sharp*k3 = target, in descending lexicographic order.
std::vector<std::array<unsigned, 3>> enumerate_weighted_monomials(unsigned total_degree, long m_sharp, long n_sharp,
                                                                   long target);

/// One row of the classification of torus-symmetric models.
struct GmTableRow {
  int index;
  WeightAssignment weights;
  long phi6_weight;
  std::vector<std::array<unsigned, 3>> phi6_support;
  std::optional<long> phi4_weight;  // empty: phi4 = 0
  std::vector<std::array<unsigned, 3>> phi4_support;
};

const std::vector<GmTableRow>& gm_table();
const GmTableRow& gm_table_row(int index);

/// Derived quantities of a row: d = gcd(m, n), m#, n#, w6, w4.
struct GmReduced {
  long d, m_sharp, n_sharp, w6;
  std::optional<long> w4;
};
GmReduced reduce_weights(const GmTableRow& row);

/// The row's forms with seeded nonzero coefficients on every support
/// monomial, paired with the row's weights.
struct GmFamilyMember {
  SexticModel model;
  WeightAssignment weights;
  std::uint64_t seed;
};
GmFamilyMember table_gm_family(int row, std::uint64_t seed);

// --------------------------------------------------------------- additive (Ga)

/// A member of the pencil psi_lambda = x2^2 - 2 x1 x3 + lambda x3^2; empty
/// means lambda = infinity, psi = x3^2.
using PencilParameter = std::optional<Rational>;
PencilParameter parse_pencil_parameter(std::string_view text);
std::string to_string(const PencilParameter& p);

Polynomial psi(const PencilParameter& lambda, const RingPtr& ring);

struct GaParameters {
  Rational epsilon = 0;
  std::array<PencilParameter, 2> lambda_prime{Rational(0), Rational(1)};
  std::array<PencilParameter, 3> lambda{Rational(0), Rational(1), Rational(2)};
};

/// p composed with x1 -> x1 + x2 t + x3 t^2/2, x2 -> x2 + x3 t; `t` must be
/// a polynomial of `target`, which must contain p's variables.
Polynomial ga_apply(const Polynomial& p, const RingPtr& target, const Polynomial& t);
/// Same with a fresh formal variable t appended to p's ring.
Polynomial ga_apply(const Polynomial& p);

/// ga_apply(F) = F identically in t.
bool ga_check_invariance(const SexticModel& m);

/// phi4 = eps * psi(l'1) psi(l'2), phi6 = psi(l1) psi(l2) psi(l3).
SexticModel build_ga_model(const GaParameters& params, std::string name = "ga_family");

}  // namespace veronese
