#pragma once

#include <array>
#include <climits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "veronese/groebner.hpp"

namespace veronese {

/// (x1, x2, x3) with standard grading.
RingPtr plane_ring(CoefficientField field = CoefficientField::rationals());
/// (x1, x2, x3, y, z) with weights (1, 1, 1, 2, 3).
RingPtr model_ring(CoefficientField field = CoefficientField::rationals());

// ------------------------------------------------------------------ strata

/// Piece of the partition of P^2 used for affine computations:
/// 3: x3 = 1;  2: x3 = 0, x2 = 1;  1: x2 = x3 = 0, x1 = 1.
struct Stratum {
  int index;
  std::string unit_var;
  std::vector<std::string> zero_vars;
  std::vector<std::string> free_vars;
};

const Stratum& stratum(int index);
inline constexpr std::array<int, 3> kStrata = {3, 2, 1};

/// Sets the stratum's unit variable to 1 and its zero variables to 0,
/// dropping them from the ring. Works for any ring containing x1, x2, x3.
Polynomial restrict_to_stratum(const Polynomial& p, int index);

// ------------------------------------------------------------------- model

class ModelError : public InputError {
 public:
  enum class Kind { WrongDegree, Phi6Zero, NonIsolated, CoprimalityViolation };
  ModelError(Kind kind, const std::string& detail);
  Kind kind() const noexcept { return kind_; }
  static std::string kind_name(Kind kind);

 private:
  Kind kind_;
};

/// A validated pair (phi4, phi6) of ternary forms.
class SexticModel {
 public:
  const Polynomial& phi4() const { return phi4_; }
  const Polynomial& phi6() const { return phi6_; }
  const std::string& name() const { return name_; }
  const RingPtr& ring() const { return phi6_.ring(); }
  const CoefficientField& field() const { return ring()->field(); }
  /// The same forms read over another coefficient field (validated again).
  SexticModel over(CoefficientField field) const;

 private:
  friend SexticModel build_model(const Polynomial&, const Polynomial&, std::string);
  SexticModel(Polynomial phi4, Polynomial phi6, std::string name)
      : phi4_(std::move(phi4)), phi6_(std::move(phi6)), name_(std::move(name)) {}
  Polynomial phi4_;
  Polynomial phi6_;
  std::string name_;
};

/// Validates and wraps the pair; throws ModelError naming the violated
/// condition. Inputs must live in a plane_ring.
SexticModel build_model(const Polynomial& phi4, const Polynomial& phi6, std::string name = "");
SexticModel build_model(std::string_view phi4, std::string_view phi6, std::string name = "",
                        CoefficientField field = CoefficientField::rationals());

/// F = z^2 + y^3 + y*phi4 + phi6 in model_ring().
Polynomial defining_polynomial(const SexticModel& m);

// ------------------------------------------------------------------ curves

struct PlaneCurve {
  Polynomial form;
  unsigned degree;
};
/// Lambda_4 when phi4 = 0.
struct WholePlane {};
using Quartic = std::variant<PlaneCurve, WholePlane>;

PlaneCurve make_curve(const Polynomial& form);
Quartic lambda4(const SexticModel& m);
PlaneCurve lambda6(const SexticModel& m);
/// 4*phi4^3 + 27*phi6^2.
PlaneCurve discriminant_curve(const SexticModel& m);

/// Point of P^2 scaled so the last nonzero coordinate is 1.
class ProjPoint {
 public:
  static ProjPoint make(Rational x1, Rational x2, Rational x3);
  const std::array<Rational, 3>& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  /// Index (1..3) of the stratum containing the point.
  int stratum() const;
  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator<(const ProjPoint& o) const { return c_ < o.c_; }
  std::string to_string() const;

 private:
  std::array<Rational, 3> c_;
};

/// Parses "a,b,c" (optionally parenthesized).
ProjPoint parse_point(std::string_view text);
Rational evaluate_at(const Polynomial& ternary, const ProjPoint& q);

inline constexpr unsigned kInfiniteMultiplicity = UINT_MAX;

/// Order of vanishing at q; 0 off the curve.
unsigned multiplicity_at(const PlaneCurve& c, const ProjPoint& q);
/// kInfiniteMultiplicity for WholePlane.
unsigned multiplicity_at(const Quartic& c, const ProjPoint& q);

/// Ternary form translated to the affine chart of q with q at the origin, in
/// variables named after the two chart coordinates.
Polynomial localize_at(const Polynomial& ternary, const ProjPoint& q);

struct CurveSingularLocus {
  Ideal ideal;                        // (c, dc/dx1, dc/dx2, dc/dx3)
  bool empty = false;                 // no singular points at all
  bool finite = true;                 // every stratum piece is zero-dimensional
  std::vector<ProjPoint> rational_points;
};
CurveSingularLocus curve_singular_locus(const PlaneCurve& c, const GroebnerBudget& budget = {});

/// Normalized gcd of the forms when nonconstant.
std::optional<PlaneCurve> common_components(const PlaneCurve& a, const PlaneCurve& b);

class IntersectionError : public Error {
 public:
  enum class Kind { CommonComponentThroughPoint, NotIsolated };
  IntersectionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Intersection multiplicity (a . b)_q.
unsigned local_intersection(const PlaneCurve& a, const PlaneCurve& b, const ProjPoint& q,
                            const GroebnerBudget& budget = {});

// ------------------------------------------------------------ fibers and j

class CuspidalPoint : public Error {
 public:
  using Error::Error;
};

/// j as an exact rational, or infinity.
struct JValue {
  std::optional<Rational> value;
  bool infinite() const { return !value.has_value(); }
  std::string to_string() const;
};

JValue j_value(const SexticModel& m, const ProjPoint& q);

enum class FiberType { Smooth, Nodal, Cuspidal };
std::string to_string(FiberType t);
FiberType fiber_type(const SexticModel& m, const ProjPoint& q);

/// mult_q(Lambda_4) < 4 or mult_q(Lambda_6) < 6.
bool w_blowup_check(const SexticModel& m, const ProjPoint& q);

}  // namespace veronese
