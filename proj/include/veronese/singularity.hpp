#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veronese/model.hpp"

namespace veronese {

struct AnalysisOptions {
  GroebnerBudget budget;
  /// Extract and classify rational singular points (exact field only).
  bool rational_points = true;
  /// Run the Sigma identity checks.
  bool sigma_checks = true;
};

/// g = y^3 + y*phi4 + phi6 on the chart of the stratum (unit variable set to
/// 1), before the stratum's zero variables are imposed. Ring: the two chart
/// x-variables and y.
Polynomial chart_function(const SexticModel& m, int stratum);

/// (g, dg/du for every x-variable u other than the unit one, dg/dy),
/// restricted to the stratum. z is absent: dF/dz = 2z forces z = 0.
Ideal singular_scheme(const SexticModel& m, int stratum);

struct StratumLength {
  int stratum;
  bool zero_dimensional;
  std::size_t length;       // meaningful when zero_dimensional
  std::optional<std::size_t> points;  // distinct points over the closure (exact field only)
};

struct LengthSummary {
  std::vector<StratumLength> strata;
  std::optional<std::size_t> total_length;  // empty: not finite
  std::optional<std::size_t> point_count;
};

LengthSummary count_singular_length(const SexticModel& m, const AnalysisOptions& opts = {});

struct AllNodes {
  enum class Kind { Certified, Refuted, Probabilistic };
  Kind kind;
  int stratum = 0;            // first failing stratum when refuted
  std::uint64_t prime = 0;    // for Probabilistic
  /// Over a prime field, whether the modular test passed.
  bool holds = true;
  std::string to_string() const;
};

AllNodes all_nodes(const SexticModel& m, const AnalysisOptions& opts = {});

enum class PointClass { Node, TypeCA, NotCA, SmoothPoint };
std::string to_string(PointClass c);

struct PointClassification {
  PointClass hessian;
  std::optional<PointClass> curve;  // present when phi4(Q) = phi6(Q) = 0
  PointClass verdict() const { return hessian; }
};

/// Classifies (Q, y0, z = 0) by the Hessian of g and, on Lambda4 n Lambda6,
/// independently through the curves. A disagreement raises InvariantViolation.
PointClassification classify_rational_point_detailed(const SexticModel& m, const ProjPoint& q, const Rational& y0,
                                                     const GroebnerBudget& budget = {});
PointClass classify_rational_point(const SexticModel& m, const ProjPoint& q, const Rational& y0,
                                   const GroebnerBudget& budget = {});

struct SingularPoint {
  ProjPoint point;
  Rational y;
  PointClassification classification;
};

/// Rational singular points stratum by stratum. Strata that are not
/// zero-dimensional are skipped.
std::vector<SingularPoint> rational_singular_points(const SexticModel& m, const AnalysisOptions& opts = {});

/// Sigma outside Lambda6 equals Sing(D) outside Lambda6.
bool sigma_outside_lambda6_check(const SexticModel& m, const GroebnerBudget& budget = {});
/// Sigma on Lambda6 equals {phi4 = phi6 = dphi6 = 0}.
bool sigma_on_lambda6_check(const SexticModel& m, const GroebnerBudget& budget = {});

/// Eliminates y from the singular scheme of a stratum.
Ideal sigma_ideal(const SexticModel& m, int stratum, const GroebnerBudget& budget = {});

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

/// Necessary conditions for a nodal model, keyed c1..c5.
std::map<std::string, Verdict> nodal_consistency(const SexticModel& m, const GroebnerBudget& budget = {});

/// The full pipeline.
struct SingularityReport {
  std::string model;
  std::string field;
  LengthSummary lengths;
  AllNodes nodes;
  std::vector<SingularPoint> points;
  std::optional<bool> sigma_outside_lambda6;
  std::optional<bool> sigma_on_lambda6;
  std::map<std::string, Verdict> nodal;
  std::vector<std::string> notes;
};

SingularityReport analyze(const SexticModel& m, const AnalysisOptions& opts = {});

}  // namespace veronese
