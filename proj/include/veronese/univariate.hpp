#pragma once

#include <vector>

#include "veronese/polynomial.hpp"

namespace veronese {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
using DenseUnivariate = std::vector<Rational>;

DenseUnivariate to_dense(const Polynomial& p, std::size_t var);
Polynomial from_dense(const DenseUnivariate& f, const RingPtr& ring, std::size_t var);

/// Distinct rational roots in increasing order. Roots are found p-adically:
/// simple roots modulo a good prime are Newton-lifted and rationally
/// reconstructed, and every candidate is verified exactly.
std::vector<Rational> rational_roots(const DenseUnivariate& f);

/// f / gcd(f, f') over Q, monic.
DenseUnivariate squarefree_part(const DenseUnivariate& f);

}  // namespace veronese
