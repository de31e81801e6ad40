#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "veronese/catalog.hpp"

namespace support {

using namespace veronese;

/// Seeded ideal in 1..3 variables with 2..3 generators of degree <= 4.
Ideal random_ideal(std::uint64_t seed);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Checks NF idempotence, GB idempotence, generator membership and
/// reduction of every S-polynomial to zero. Returns the first failure, or ""
/// when all hold.
std::string groebner_property_failure(std::uint64_t seed, const MonomialOrder& order);

/// Dense pair of degrees (d1, d2) in x, y drawn from one sampler.
std::pair<Polynomial, Polynomial> bezout_pair(unsigned d1, unsigned d2, std::uint64_t seed);
inline constexpr std::uint64_t kBezoutSeed23 = 23;
inline constexpr std::uint64_t kBezoutSeed34 = 34;

/// Seeded valid models used by the property suites.
std::vector<SexticModel> seeded_models(std::size_t count);

/// The catalog models with default parameters.
std::vector<SexticModel> catalog_models();

}  // namespace support
