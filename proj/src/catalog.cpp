#include "veronese/catalog.hpp"

#include <algorithm>

#include "veronese/report.hpp"

namespace veronese::detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_goldens();
}

namespace veronese {

GoldenMismatch::GoldenMismatch(const std::string& entry, std::vector<std::string> diffs)
    : InvariantViolation("GoldenMismatch in '" + entry + "': " + (diffs.empty() ? "" : diffs.front()) +
                         (diffs.size() > 1 ? " (+" + std::to_string(diffs.size() - 1) + " more)" : "")),
      diffs_(std::move(diffs)) {}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"klein", "z^2 + y^3 + lambda*y*phi4 + phi6 with the Klein invariants (lambda = 3 by default)", {}},
      {"smooth", "z^2 + y^3 + x1^6 + x2^5*x3 + x3^6", {}},
      {"e8_cone",
       "z^2 + y^3 + x3*(x1^5 + x2^5)",
       {"the gradient equations vanish at (0,0,1) and also at the five points x3 = 0, x1^5 + x2^5 = 0; "
        "the report lists what the ideals give rather than a single point"}},
      {"twelve_node", "z^2 + y^3 + y*phi4 - phi3^2 with seeded phi4, phi3 through (0,0,1)", {}},
      {"ga_family",
       "z^2 + y^3 + eps*y*psi(l'1)*psi(l'2) + psi(l1)*psi(l2)*psi(l3), invariant under the additive group",
       {"for eps = 0 the singular scheme is supported at the single point (1,0,0) with y = 0 "
        "but has length 2 there"}},
      {"gm_row", "seeded member of a row of the torus-symmetric classification (--row, --seed)", {}},
      {"random", "seeded sparse random valid model", {}},
  };
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw UnknownEntry(name);
}

Polynomial klein_phi4(const RingPtr& ring) { return parse_poly("x1^3*x3 + x2^3*x1 + x3^3*x2", ring); }

Polynomial klein_phi6(const RingPtr& ring) {
  return parse_poly("5*x1^2*x2^2*x3^2 - x1^5*x2 - x2^5*x3 - x3^5*x1", ring);
}

namespace {

SexticModel twelve_node_model(std::uint64_t seed) {
  CoefficientSampler sampler(seed);
  RingPtr ring = plane_ring();
  Monomial x3_4 = Monomial::variable(2, 4);
  Monomial x3_3 = Monomial::variable(2, 3);
  for (int attempt = 0;; ++attempt) {
    Polynomial phi4 = random_form(ring, 4, sampler);
    Polynomial phi3 = random_form(ring, 3, sampler);
    phi4 -= Polynomial::monomial(ring, x3_4, phi4.coefficient(x3_4));
    phi3 -= Polynomial::monomial(ring, x3_3, phi3.coefficient(x3_3));
    try {
      return build_model(phi4, -(phi3 * phi3), "twelve_node");
    } catch (const ModelError&) {
      if (attempt > 100) throw;
    }
  }
}

Json entry_params(const std::string& name, const CatalogParams& p) {
  Json j = Json::object();
  if (name == "klein") {
    j["lambda"] = to_string(p.lambda);
  } else if (name == "twelve_node" || name == "random") {
    j["seed"] = p.seed;
  } else if (name == "gm_row") {
    j["row"] = p.row;
    j["seed"] = p.seed;
  } else if (name == "ga_family") {
    j["epsilon"] = to_string(p.ga.epsilon);
    j["lambda_prime"] = {to_string(p.ga.lambda_prime[0]), to_string(p.ga.lambda_prime[1])};
    j["lambda"] = {to_string(p.ga.lambda[0]), to_string(p.ga.lambda[1]), to_string(p.ga.lambda[2])};
  }
  return j;
}

}  // namespace

SexticModel get_model(const std::string& name, const CatalogParams& params, CoefficientField field) {
  catalog_entry(name);
  RingPtr ring = plane_ring();
  auto model = [&]() -> SexticModel {
    if (name == "klein")
      return build_model(klein_phi4(ring).scaled(params.lambda), klein_phi6(ring), "klein");
    if (name == "smooth") return build_model(Polynomial(ring), parse_poly("x1^6 + x2^5*x3 + x3^6", ring), "smooth");
    if (name == "e8_cone") return build_model(Polynomial(ring), parse_poly("x3*(x1^5 + x2^5)", ring), "e8_cone");
    if (name == "twelve_node") return twelve_node_model(params.seed);
    if (name == "ga_family") return build_ga_model(params.ga);
    if (name == "gm_row") return table_gm_family(params.row, params.seed).model;
    return random_model(params.seed);
  }();
  return field.is_rational() ? model : model.over(field);
}

Polynomial hessian_determinant(const Polynomial& form) {
  std::array<std::array<Polynomial, 3>, 3> h{{{form, form, form}, {form, form, form}, {form, form, form}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h[i][j] = differentiate(differentiate(form, i), j);
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

KleinIdentity klein_invariant_identity() {
  RingPtr ring = plane_ring();
  Polynomial scaled = hessian_determinant(klein_phi4(ring)).scaled(Rational(1, 54));
  Polynomial phi6 = klein_phi6(ring);
  if (scaled == phi6) return {true, 1};
  if (scaled == -phi6) return {true, -1};
  return {false, 0};
}

const std::vector<ClassGroupRow>& class_group_table() {
  static const std::vector<ClassGroupRow> rows = {
      {"E8", 1, "", 0, 0, 0, 0},         {"E7", 2, "A1", 1, 2, 0, 0},
      {"D7", 2, "", 0, 0, 2, 0},         {"A7", 2, "", 0, 0, 0, 2},
      {"E6", 3, "A2", 2, 6, 0, 0},       {"D6", 3, "A1xA1", 2, 4, 4, 0},
      {"A6", 3, "A1", 1, 2, 4, 4},       {"D5", 4, "A3", 3, 12, 6, 0},
      {"A5", 4, "A1xA2", 3, 8, 12, 12},  {"D4", 5, "D4", 4, 24, 24, 0},
      {"A4", 5, "A4", 4, 20, 30, 40},    {"A3", 6, "D5", 5, 40, 90, 160},
      {"A2", 7, "E6", 6, 72, 270, 864},  {"A1", 8, "E7", 7, 126, 756, 4032},
  };
  return rows;
}

const ClassGroupRow& class_group_row(const std::string& dynkin) {
  for (const auto& r : class_group_table())
    if (r.dynkin == dynkin) return r;
  throw UnknownType(dynkin);
}

DuValType DuValType::parse(std::string_view text) {
  if (text.size() < 2) throw UnknownType(std::string(text));
  char family = text[0];
  int index = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9' || index > 1000) throw UnknownType(std::string(text));
    index = index * 10 + (c - '0');
  }
  bool ok = (family == 'A' && index >= 1) || (family == 'D' && index >= 4) ||
            (family == 'E' && index >= 6 && index <= 8);
  if (!ok) throw UnknownType(std::string(text));
  return {family, index};
}

int duval_s(const DuValType& t) {
  switch (t.family) {
    case 'E':
      return t.index == 6 ? 4 : t.index;
    case 'D':
      return t.index == 4 ? 2 : t.index - 1;
    default:
      return (t.index + 1) / 2;
  }
}

const std::vector<std::pair<std::string_view, std::string_view>>& golden_files() {
  return detail::embedded_goldens();
}

EntryRun run_entry(const std::string& name, const CatalogParams& params, const AnalysisOptions& opts) {
  SexticModel model = get_model(name, params);
  EntryRun run{model, analyze(model, opts), false, {}, {}};
  for (const auto& note : catalog_entry(name).notes) run.report.notes.push_back(note);
  if (name == "klein") {
    auto count = run.report.lengths.total_length;
    if (!count || *count > kNodalQFactorialBound || kNodalQFactorialBound > kNodalMaximum)
      run.diffs.push_back("total_length: exceeds the nodal bound " + std::to_string(kNodalQFactorialBound));
  }
  Json actual = report_json(run.report);
  Json wanted = entry_params(name, params);
  for (const auto& [file, text] : golden_files()) {
    Json golden = Json::parse(text);
    if (golden.at("entry") != name || golden.at("params") != wanted) continue;
    run.has_golden = true;
    auto diffs = json_diff(golden.at("expected"), actual);
    run.diffs.insert(run.diffs.end(), diffs.begin(), diffs.end());
    for (const auto& [key, source] : golden.at("provenance").items())
      run.provenance.push_back(key + ": " + source.get<std::string>());
  }
  if (!run.diffs.empty()) throw GoldenMismatch(name, run.diffs);
  return run;
}

}  // namespace veronese
