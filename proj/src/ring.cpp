#include "veronese/ring.hpp"

#include <algorithm>
#include <set>

#include "veronese/errors.hpp"
#include "veronese/monomial.hpp"

namespace veronese {

std::string CoefficientField::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(prime);
}

RingContext::RingContext(std::vector<std::string> names, std::vector<int> weights,
                         CoefficientField field)
    : names_(std::move(names)), weights_(std::move(weights)), field_(field) {}

RingPtr RingContext::make(std::vector<std::string> names, std::vector<int> weights,
                          CoefficientField field) {
  if (names.size() != weights.size()) throw Error("ring: one weight per variable is required");
  if (names.size() > kMaxVariables)
    throw Error("ring: at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("ring: variable names must be nonempty");
    if (!seen.insert(n).second) throw Error("ring: duplicate variable name '" + n + "'");
  }
  for (int w : weights)
    if (w < 1) throw Error("ring: weights must be positive");
  if (!field.is_rational() && field.prime < 2) throw Error("ring: invalid prime");
  return RingPtr(new RingContext(std::move(names), std::move(weights), field));
}

RingPtr RingContext::make(std::vector<std::string> names, CoefficientField field) {
  std::vector<int> weights(names.size(), 1);
  return make(std::move(names), std::move(weights), field);
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t RingContext::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw UnknownVariable(std::string(name));
  return *i;
}

RingPtr RingContext::extended(const std::string& name, int weight) const {
  auto names = names_;
  auto weights = weights_;
  names.push_back(name);
  weights.push_back(weight);
  return make(std::move(names), std::move(weights), field_);
}

RingPtr RingContext::without(const std::vector<std::string>& drop) const {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (std::find(drop.begin(), drop.end(), names_[i]) != drop.end()) continue;
    names.push_back(names_[i]);
    weights.push_back(weights_[i]);
  }
  return make(std::move(names), std::move(weights), field_);
}

RingPtr RingContext::with_field(CoefficientField field) const {
  return make(names_, weights_, field);
}

std::string RingContext::fresh_name(std::string_view stem) const {
  std::string candidate(stem);
  for (int k = 0; has(candidate); ++k) candidate = std::string(stem) + "_" + std::to_string(k);
  return candidate;
}

bool RingContext::operator==(const RingContext& other) const {
  return names_ == other.names_ && weights_ == other.weights_ && field_ == other.field_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace veronese
