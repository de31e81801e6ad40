#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "veronese/group_actions.hpp"
#include "veronese/singularity.hpp"

namespace veronese {

class UnknownEntry : public InputError {
 public:
  explicit UnknownEntry(const std::string& name) : InputError("unknown catalog entry '" + name + "'") {}
};

/// Report disagrees with the stored golden values.
class GoldenMismatch : public InvariantViolation {
 public:
  GoldenMismatch(const std::string& entry, std::vector<std::string> diffs);
  const std::vector<std::string>& diffs() const noexcept { return diffs_; }

 private:
  std::vector<std::string> diffs_;
};

struct CatalogParams {
  std::uint64_t seed = 1;
  Rational lambda = 3;  // klein: coefficient of y*phi4
  GaParameters ga;
  int row = 3;  // gm_row
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> notes;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);

SexticModel get_model(const std::string& name, const CatalogParams& params = {},
                      CoefficientField field = CoefficientField::rationals());

/// The Klein quartic and sextic invariants of PSL(2,7).
Polynomial klein_phi4(const RingPtr& ring);
Polynomial klein_phi6(const RingPtr& ring);

/// det Hess(phi4) / 54 = sign * phi6 for the Klein invariants.
struct KleinIdentity {
  bool holds;
  int sign;  // +1 or -1 when holds
};
KleinIdentity klein_invariant_identity();
/// det of the 3x3 Hessian of a ternary form.
Polynomial hessian_determinant(const Polynomial& form);

// ------------------------------------------------------------ lookup tables

struct ClassGroupRow {
  std::string dynkin;
  int r;
  std::string delta_type;
  int delta_rank;
  int delta_size;
  int theta2;
  int theta3;
};

class UnknownType : public InputError {
 public:
  explicit UnknownType(const std::string& name) : InputError("unknown Du Val type '" + name + "'") {}
};

const std::vector<ClassGroupRow>& class_group_table();
const ClassGroupRow& class_group_row(const std::string& dynkin);

struct DuValType {
  char family;  // 'A', 'D' or 'E'
  int index;
  static DuValType parse(std::string_view text);  // "A5", "D4", "E8"
};
int duval_s(const DuValType& t);

// ----------------------------------------------------------------- running

inline constexpr std::size_t kNodalQFactorialBound = 21;
inline constexpr std::size_t kNodalMaximum = 28;

struct EntryRun {
  SexticModel model;
  SingularityReport report;
  bool has_golden = false;
  std::vector<std::string> diffs;
  std::vector<std::string> provenance;
};

/// Analyzes the entry and compares with its golden when one exists for the
/// parameters. Throws GoldenMismatch on any difference.
EntryRun run_entry(const std::string& name, const CatalogParams& params = {}, const AnalysisOptions& opts = {});

/// Parsed golden files: name -> JSON text.
const std::vector<std::pair<std::string_view, std::string_view>>& golden_files();

}  // namespace veronese
