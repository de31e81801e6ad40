#pragma once

#include <cstdint>
#include <random>

#include "veronese/model.hpp"

namespace veronese {

/// Deterministic source of small nonzero rationals. Raw engine outputs are
/// mapped by hand so the stream is identical on every platform.
class CoefficientSampler {
 public:
  explicit CoefficientSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  /// n/d with 1 <= |n| <= max_numerator and 1 <= d <= max_denominator.
  Rational nonzero(unsigned max_numerator = 7, unsigned max_denominator = 3);
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// All exponent triples of total degree d, in descending lexicographic order.
std::vector<Monomial> ternary_monomials(unsigned degree);

/// Ternary form of the given degree with a sampled coefficient on every
/// monomial whose `keep` draw succeeds (density in percent).
Polynomial random_form(const RingPtr& ring, unsigned degree, CoefficientSampler& sampler, unsigned density = 100);

/// Polynomial in all variables of `ring` with total degree <= max_degree;
/// monomials kept with the given density (percent), constant term included.
Polynomial random_polynomial(const RingPtr& ring, unsigned max_degree, CoefficientSampler& sampler,
                             unsigned density = 100);

/// A valid model with sparse random forms; redraws until build_model accepts.
SexticModel random_model(std::uint64_t seed, unsigned density = 40);

}  // namespace veronese
