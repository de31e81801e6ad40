#pragma once

#include "veronese/polynomial.hpp"

namespace test {

using namespace veronese;

inline RingPtr xyz() { return RingContext::make({"x", "y", "z"}); }
inline RingPtr xy() { return RingContext::make({"x", "y"}); }
inline Polynomial P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

}  // namespace test
