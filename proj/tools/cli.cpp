#include "cli.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "veronese/catalog.hpp"
#include "veronese/report.hpp"

namespace veronese::cli {

namespace {

struct Options {
  std::string field = "q";
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string budget;
  bool expect_nodes = false;

  std::string catalog;
  std::string model_file;
  std::optional<std::string> phi4;
  std::optional<std::string> phi6;

  std::optional<std::string> lambda;
  std::optional<std::string> lambda_prime;
  std::optional<std::string> eps;
  std::optional<int> row;

  std::vector<std::string> points;
  std::optional<std::string> y;
  std::optional<std::string> weights;
  int table_row = 0;
  std::string entry;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

CoefficientField parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return CoefficientField::rationals();
  if (text == "fp") return CoefficientField::prime_field(kDefaultPrime);
  if (text.rfind("fp:", 0) == 0) {
    std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 19 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw InputError("malformed prime '" + digits + "'");
    std::uint64_t p = std::stoull(digits);
    mpz_class z(digits);
    if (p < (std::uint64_t{1} << 31) || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
      throw InputError("--field fp:<prime> needs a prime >= 2^31, got " + digits);
    return CoefficientField::prime_field(p);
  }
  throw InputError("--field must be q, fp or fp:<prime>");
}

GroebnerBudget parse_budget(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw InputError("budget must be <size>,<steps>");
  try {
    std::size_t used0 = 0, used1 = 0;
    GroebnerBudget b;
    b.max_basis_size = std::stoull(parts[0], &used0);
    b.max_steps = std::stoull(parts[1], &used1);
    if (used0 != parts[0].size() || used1 != parts[1].size()) throw InputError("");
    return b;
  } catch (const std::exception&) {
    throw InputError("budget must be <size>,<steps>, got '" + text + "'");
  }
}

GroebnerBudget resolve_budget(const Options& o) {
  GroebnerBudget b;
  if (const char* env = std::getenv("VERONESE_BUDGET"); env && *env) b = parse_budget(env);
  if (!o.budget.empty()) b = parse_budget(o.budget);
  return b;
}

template <std::size_t N>
std::array<PencilParameter, N> parse_pencil_list(const std::string& text, const char* flag) {
  auto parts = split(text, ',');
  if (parts.size() != N) throw InputError(std::string(flag) + " needs " + std::to_string(N) + " values");
  std::array<PencilParameter, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = parse_pencil_parameter(parts[i]);
  return out;
}

GaParameters ga_parameters(const Options& o) {
  GaParameters p;
  if (o.eps) p.epsilon = parse_rational(*o.eps);
  if (o.lambda) p.lambda = parse_pencil_list<3>(*o.lambda, "--lambda");
  if (o.lambda_prime) p.lambda_prime = parse_pencil_list<2>(*o.lambda_prime, "--lambda-prime");
  return p;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("model file '" + path + "' is not valid JSON: " + e.what());
  }
}

struct ResolvedModel {
  SexticModel model;
  std::optional<std::uint64_t> seed;
  Json file;  // model file contents when read from --model
};

CatalogParams catalog_params(const Options& o, const std::string& name) {
  CatalogParams p;
  if (o.seed) p.seed = *o.seed;
  if (o.row) p.row = *o.row;
  if (name == "klein" && o.lambda) p.lambda = parse_rational(*o.lambda);
  if (name == "ga_family") p.ga = ga_parameters(o);
  return p;
}

bool seeded_entry(const std::string& name) { return name == "twelve_node" || name == "gm_row" || name == "random"; }

ResolvedModel resolve_model(const Options& o) {
  CoefficientField field = parse_field(o.field);
  int sources = !o.catalog.empty() + !o.model_file.empty() + (o.phi4 || o.phi6);
  if (sources != 1) throw InputError("give exactly one of --catalog, --model, or --phi4/--phi6");
  if (!o.catalog.empty()) {
    CatalogParams p = catalog_params(o, o.catalog);
    std::optional<std::uint64_t> seed;
    if (seeded_entry(o.catalog)) seed = p.seed;
    return {get_model(o.catalog, p, field), seed, {}};
  }
  if (!o.model_file.empty()) {
    Json doc = read_json_file(o.model_file);
    if (!doc.is_object() || !doc.contains("phi6") || !doc["phi6"].is_string())
      throw InputError("model file needs a string field \"phi6\"");
    std::string phi4 = doc.contains("phi4") ? doc["phi4"].get<std::string>() : "0";
    std::string name = doc.contains("name") ? doc["name"].get<std::string>() : "model";
    return {build_model(phi4, doc["phi6"].get<std::string>(), name, field), std::nullopt, doc};
  }
  if (!o.phi6) throw InputError("--phi6 is required with --phi4");
  return {build_model(o.phi4.value_or("0"), *o.phi6, "inline", field), std::nullopt, {}};
}

AnalysisOptions analysis_options(const Options& o) {
  AnalysisOptions a;
  a.budget = resolve_budget(o);
  return a;
}

Json curve_json(const Quartic& q) {
  Json j;
  if (std::holds_alternative<WholePlane>(q)) {
    j["whole_plane"] = true;
    return j;
  }
  const auto& c = std::get<PlaneCurve>(q);
  j["whole_plane"] = false;
  j["degree"] = c.degree;
  j["form"] = to_string(c.form);
  return j;
}

Json curve_summary(const SexticModel& m) {
  Json j;
  j["lambda4"] = curve_json(lambda4(m));
  j["lambda6"] = curve_json(lambda6(m));
  PlaneCurve d = discriminant_curve(m);
  j["discriminant"] = {{"degree", d.degree}, {"terms", d.form.size()}};
  Json common = nullptr;
  if (auto l4 = lambda4(m); std::holds_alternative<PlaneCurve>(l4))
    if (auto c = common_components(std::get<PlaneCurve>(l4), lambda6(m))) common = to_string(c->form);
  j["common_components"] = common;
  return j;
}

Json multiplicity_json(unsigned mult) { return mult == kInfiniteMultiplicity ? Json("infinity") : Json(mult); }

Json locus_json(const CurveSingularLocus& l) {
  Json j;
  j["empty"] = l.empty;
  j["finite"] = l.finite;
  Json pts = Json::array();
  for (const auto& p : l.rational_points) pts.push_back(p.to_string());
  j["rational_points"] = pts;
  return j;
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  if (o.format == "text") {
    out << render_text(doc);
  } else {
    out << doc.dump(2) << "\n";
  }
}

void add_model_fields(Json& doc, const ResolvedModel& r) {
  doc["phi4"] = to_string(r.model.phi4());
  doc["phi6"] = to_string(r.model.phi6());
  if (r.seed) doc["seed"] = *r.seed;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  ResolvedModel r = resolve_model(o);
  SingularityReport rep = analyze(r.model, analysis_options(o));
  Json doc = report_json(rep);
  add_model_fields(doc, r);
  doc["curves"] = curve_summary(r.model);
  if (!o.points.empty()) {
    Json checks = Json::array();
    for (const auto& text : o.points) {
      ProjPoint q = parse_point(text);
      checks.push_back({{"point", q.to_string()}, {"w_blowup", w_blowup_check(r.model, q)}});
    }
    doc["w_blowup_checks"] = checks;
  }
  emit(doc, o, out);
  if (o.expect_nodes) {
    bool ok = rep.nodes.kind == AllNodes::Kind::Certified ||
              (rep.nodes.kind == AllNodes::Kind::Probabilistic && rep.nodes.holds);
    if (!ok) return kRefuted;
  }
  return kSuccess;
}

int cmd_sing(const Options& o, std::ostream& out) {
  ResolvedModel r = resolve_model(o);
  AnalysisOptions a = analysis_options(o);
  a.sigma_checks = false;
  SingularityReport rep;
  rep.model = r.model.name();
  rep.field = r.model.field().is_rational() ? "Q" : "Fp";
  rep.lengths = count_singular_length(r.model, a);
  rep.nodes = all_nodes(r.model, a);
  if (r.model.field().is_rational()) rep.points = rational_singular_points(r.model, a);
  Json full = report_json(rep);
  Json doc;
  for (const char* key : {"model", "strata", "total_length", "point_count", "all_nodes", "field", "rational_points"})
    doc[key] = full[key];
  if (r.seed) doc["seed"] = *r.seed;
  emit(doc, o, out);
  if (o.expect_nodes && rep.nodes.kind != AllNodes::Kind::Certified &&
      !(rep.nodes.kind == AllNodes::Kind::Probabilistic && rep.nodes.holds))
    return kRefuted;
  return kSuccess;
}

int cmd_curves(const Options& o, std::ostream& out) {
  ResolvedModel r = resolve_model(o);
  GroebnerBudget budget = resolve_budget(o);
  Json doc;
  doc["model"] = r.model.name();
  add_model_fields(doc, r);
  doc["curves"] = curve_summary(r.model);
  auto l4 = lambda4(r.model);
  doc["lambda4_singular_locus"] =
      std::holds_alternative<PlaneCurve>(l4) ? locus_json(curve_singular_locus(std::get<PlaneCurve>(l4), budget))
                                             : Json(nullptr);
  doc["lambda6_singular_locus"] = locus_json(curve_singular_locus(lambda6(r.model), budget));
  emit(doc, o, out);
  return kSuccess;
}

int cmd_point(const Options& o, std::ostream& out) {
  ResolvedModel r = resolve_model(o);
  if (!r.model.field().is_rational()) throw InputError("point queries run over Q only");
  if (o.points.size() != 1) throw InputError("point needs exactly one --point a,b,c");
  ProjPoint q = parse_point(o.points.front());
  const SexticModel& m = r.model;
  Json doc;
  doc["model"] = m.name();
  doc["point"] = q.to_string();
  doc["stratum"] = q.stratum();
  doc["phi4"] = to_string(evaluate_at(m.phi4(), q));
  doc["phi6"] = to_string(evaluate_at(m.phi6(), q));
  try {
    doc["j"] = j_value(m, q).to_string();
  } catch (const CuspidalPoint&) {
    doc["j"] = "undefined";
  }
  doc["fiber"] = to_string(fiber_type(m, q));
  doc["multiplicities"] = {{"lambda4", multiplicity_json(multiplicity_at(lambda4(m), q))},
                           {"lambda6", multiplicity_json(multiplicity_at(lambda6(m), q))},
                           {"discriminant", multiplicity_json(multiplicity_at(discriminant_curve(m), q))}};
  doc["w_blowup"] = w_blowup_check(m, q);
  if (o.y) {
    Rational y0 = parse_rational(*o.y);
    auto c = classify_rational_point_detailed(m, q, y0, resolve_budget(o));
    doc["y"] = to_string(y0);
    doc["classification"] = to_string(c.verdict());
    doc["hessian_path"] = to_string(c.hessian);
    doc["curve_path"] = c.curve ? Json(to_string(*c.curve)) : Json(nullptr);
  }
  emit(doc, o, out);
  return kSuccess;
}

int cmd_gm_check(const Options& o, std::ostream& out) {
  ResolvedModel r = resolve_model(o);
  WeightAssignment w;
  if (o.weights) {
    w = WeightAssignment::parse(*o.weights);
  } else if (r.file.is_object() && r.file.contains("weights")) {
    w = WeightAssignment::parse(r.file["weights"].get<std::string>());
  } else {
    throw InputError("gm-check needs --weights wx1,wx2,wx3,wy,wz");
  }
  Json doc;
  doc["model"] = r.model.name();
  doc["weights"] = w.to_string();
  auto w6 = gm_weight_of(r.model.phi6(), w);
  doc["phi6_weight"] = w6 ? Json(*w6) : Json(nullptr);
  if (!r.model.phi4().is_zero()) {
    auto w4 = gm_weight_of(r.model.phi4(), w);
    doc["phi4_weight"] = w4 ? Json(*w4) : Json(nullptr);
  }
  doc["gm_check"] = gm_check_model(r.model, w);
  emit(doc, o, out);
  return kSuccess;
}

int cmd_ga_check(const Options& o, std::ostream& out) {
  ResolvedModel r = resolve_model(o);
  Json doc;
  doc["model"] = r.model.name();
  doc["ga_invariant"] = ga_check_invariance(r.model);
  emit(doc, o, out);
  return kSuccess;
}

int cmd_ga_build(const Options& o, std::ostream& out) {
  GaParameters p = ga_parameters(o);
  SexticModel m = build_ga_model(p);
  CoefficientField field = parse_field(o.field);
  if (!field.is_rational()) m = m.over(field);
  Json doc = report_json(analyze(m, analysis_options(o)));
  doc["phi4"] = to_string(m.phi4());
  doc["phi6"] = to_string(m.phi6());
  doc["epsilon"] = to_string(p.epsilon);
  doc["lambda"] = {to_string(p.lambda[0]), to_string(p.lambda[1]), to_string(p.lambda[2])};
  doc["lambda_prime"] = {to_string(p.lambda_prime[0]), to_string(p.lambda_prime[1])};
  doc["ga_invariant"] = ga_check_invariance(m);
  emit(doc, o, out);
  return kSuccess;
}

Json support_json(const std::vector<std::array<unsigned, 3>>& s) {
  Json j = Json::array();
  for (const auto& e : s) j.push_back({e[0], e[1], e[2]});
  return j;
}

int cmd_table_row(const Options& o, std::ostream& out) {
  const GmTableRow& row = gm_table_row(o.table_row);
  std::uint64_t seed = o.seed.value_or(0);
  GmFamilyMember member = table_gm_family(o.table_row, seed);
  GmReduced red = reduce_weights(row);
  Json doc;
  doc["name"] = member.model.name();
  doc["row"] = row.index;
  doc["seed"] = seed;
  doc["weights"] = row.weights.to_string();
  doc["phi4"] = to_string(member.model.phi4());
  doc["phi6"] = to_string(member.model.phi6());
  doc["d"] = red.d;
  doc["m_sharp"] = red.m_sharp;
  doc["n_sharp"] = red.n_sharp;
  doc["w6"] = red.w6;
  doc["w4"] = red.w4 ? Json(*red.w4) : Json(nullptr);
  doc["phi6_support"] = support_json(row.phi6_support);
  doc["phi4_support"] = support_json(row.phi4_support);
  doc["phi6_enumerated"] = support_json(enumerate_weighted_monomials(6, red.m_sharp, red.n_sharp, red.w6));
  if (red.w4) doc["phi4_enumerated"] = support_json(enumerate_weighted_monomials(4, red.m_sharp, red.n_sharp, *red.w4));
  doc["gm_check"] = gm_check_model(member.model, member.weights);
  emit(doc, o, out);
  return kSuccess;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  Json entries = Json::array();
  for (const auto& e : catalog_entries()) entries.push_back({{"name", e.name}, {"description", e.description}});
  emit(Json{{"entries", entries}}, o, out);
  return kSuccess;
}

int cmd_catalog_run(const Options& o, std::ostream& out) {
  Options with = o;
  with.catalog = o.entry;
  CatalogParams p = catalog_params(with, o.entry);
  EntryRun run = run_entry(o.entry, p, analysis_options(o));
  Json doc = report_json(run.report);
  doc["phi4"] = to_string(run.model.phi4());
  doc["phi6"] = to_string(run.model.phi6());
  if (seeded_entry(o.entry)) doc["seed"] = p.seed;
  doc["golden"] = {{"present", run.has_golden}, {"provenance", run.provenance}};
  emit(doc, o, out);
  return kSuccess;
}

void add_model_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--catalog", o.catalog, "Catalog entry name");
  cmd->add_option("--model", o.model_file, "JSON file with phi4, phi6 (and optional name, weights)");
  cmd->add_option("--phi4", o.phi4, "Quartic form in x1, x2, x3");
  cmd->add_option("--phi6", o.phi6, "Sextic form in x1, x2, x3");
  cmd->add_option("--lambda", o.lambda, "klein: coefficient of y*phi4; ga_family: l1,l2,l3");
  cmd->add_option("--lambda-prime", o.lambda_prime, "ga_family: l'1,l'2");
  cmd->add_option("--eps", o.eps, "ga_family: epsilon");
  cmd->add_option("--row", o.row, "gm_row: table row");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact singularity analysis of z^2 + y^3 + y*phi4 + phi6 = 0 in P(1,1,1,2,3)", "veronese"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", o.field, "q, fp or fp:<prime>");
  app.add_option("--seed", o.seed, "Seed for generated coefficients");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", o.budget, "Groebner budget <max basis size>,<max steps>");
  app.add_flag("--expect-nodes", o.expect_nodes, "Exit 1 unless all singular points are nodes");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full singularity report");
  add_model_options(analyze_cmd, o);
  analyze_cmd->add_option("--point", o.points, "Points for w-blowup checks");
  auto* sing_cmd = app.add_subcommand("sing", "Singular scheme length and node test");
  add_model_options(sing_cmd, o);
  auto* curves_cmd = app.add_subcommand("curves", "Lambda4, Lambda6 and discriminant summary");
  add_model_options(curves_cmd, o);
  auto* point_cmd = app.add_subcommand("point", "j-invariant, fiber type and multiplicities at a point");
  add_model_options(point_cmd, o);
  point_cmd->add_option("--point", o.points, "Point a,b,c")->required();
  point_cmd->add_option("--y", o.y, "y-coordinate for classification");
  auto* gm_cmd = app.add_subcommand("gm-check", "Torus semi-invariance check");
  add_model_options(gm_cmd, o);
  gm_cmd->add_option("--weights", o.weights, "wx1,wx2,wx3,wy,wz");
  auto* ga_check_cmd = app.add_subcommand("ga-check", "Additive group invariance check");
  add_model_options(ga_check_cmd, o);
  auto* ga_build_cmd = app.add_subcommand("ga-build", "Build and analyze a member of the additive family");
  ga_build_cmd->add_option("--eps", o.eps, "epsilon");
  ga_build_cmd->add_option("--lambda", o.lambda, "l1,l2,l3 (rationals or inf)");
  ga_build_cmd->add_option("--lambda-prime", o.lambda_prime, "l'1,l'2");
  auto* table_cmd = app.add_subcommand("table-row", "Instantiate a row of the torus classification");
  table_cmd->add_option("row", o.table_row, "Row number 1..19")->required();
  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in examples");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List entries");
  auto* run_cmd = catalog_cmd->add_subcommand("run", "Analyze an entry and compare with its golden");
  run_cmd->add_option("name", o.entry, "Entry name")->required();
  run_cmd->add_option("--lambda", o.lambda, "klein: coefficient of y*phi4; ga_family: l1,l2,l3");
  run_cmd->add_option("--lambda-prime", o.lambda_prime, "ga_family: l'1,l'2");
  run_cmd->add_option("--eps", o.eps, "ga_family: epsilon");
  run_cmd->add_option("--row", o.row, "gm_row: table row");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (sing_cmd->parsed()) return cmd_sing(o, out);
    if (curves_cmd->parsed()) return cmd_curves(o, out);
    if (point_cmd->parsed()) return cmd_point(o, out);
    if (gm_cmd->parsed()) return cmd_gm_check(o, out);
    if (ga_check_cmd->parsed()) return cmd_ga_check(o, out);
    if (ga_build_cmd->parsed()) return cmd_ga_build(o, out);
    if (table_cmd->parsed()) return cmd_table_row(o, out);
    if (list_cmd->parsed()) return cmd_catalog_list(o, out);
    if (run_cmd->parsed()) return cmd_catalog_run(o, out);
  } catch (const GoldenMismatch& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& d : e.diffs()) err << "  " << d << "\n";
    return kInternalError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInvalidInput;
}

}  // namespace veronese::cli
