#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace veronese {

inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector with a cached total degree. Slots beyond the ring's
/// variable count stay zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  static Monomial variable(std::size_t i, unsigned e = 1) {
    Monomial m;
    m.set(i, e);
    return m;
  }

  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  unsigned degree_ = 0;
};

/// Graded reverse lexicographic comparison with x_1 > x_2 > ... ; returns
/// a positive value when a > b.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace veronese
