#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace veronese {

/// Default modulus of --field fp: the least prime above 2^31.
inline constexpr std::uint64_t kDefaultPrime = 2147483659ULL;

/// Coefficient field of a ring: the rationals, or Z/p for a prime p.
struct CoefficientField {
  std::uint64_t prime = 0;  // 0 means Q

  static CoefficientField rationals() { return {}; }
  static CoefficientField prime_field(std::uint64_t p) { return {p}; }
  bool is_rational() const { return prime == 0; }
  bool operator==(const CoefficientField&) const = default;
  std::string to_string() const;
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Ordered named variables with positive integer weights over a coefficient
/// field. Immutable; compared by value.
class RingContext {
 public:
  static RingPtr make(std::vector<std::string> names, std::vector<int> weights,
                      CoefficientField field = CoefficientField::rationals());
  /// Standard grading: every weight is 1.
  static RingPtr make(std::vector<std::string> names,
                      CoefficientField field = CoefficientField::rationals());

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const CoefficientField& field() const { return field_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Index of a variable, throwing UnknownVariable when absent.
  std::size_t require(std::string_view name) const;
  bool has(std::string_view name) const { return index_of(name).has_value(); }

  /// This ring with one more variable appended.
  RingPtr extended(const std::string& name, int weight = 1) const;
  /// This ring with the named variables removed.
  RingPtr without(const std::vector<std::string>& names) const;
  RingPtr with_field(CoefficientField field) const;
  /// A variable name not yet used in this ring, derived from `stem`.
  std::string fresh_name(std::string_view stem) const;

  bool operator==(const RingContext& other) const;

 private:
  RingContext(std::vector<std::string> names, std::vector<int> weights, CoefficientField field);

  std::vector<std::string> names_;
  std::vector<int> weights_;
  CoefficientField field_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace veronese
