#include "veronese/report.hpp"

namespace veronese {

namespace {

Json point_json(const SingularPoint& p) {
  Json j;
  j["point"] = p.point.to_string();
  j["y"] = to_string(p.y);
  j["stratum"] = p.point.stratum();
  j["classification"] = to_string(p.classification.verdict());
  j["hessian_path"] = to_string(p.classification.hessian);
  j["curve_path"] = p.classification.curve ? Json(to_string(*p.classification.curve)) : Json(nullptr);
  return j;
}

void render(const Json& v, const std::string& path, std::string& out) {
  if (v.is_object()) {
    if (v.empty()) out += path + ": {}\n";
    for (const auto& [k, item] : v.items()) render(item, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array()) {
    if (v.empty()) out += path + ": []\n";
    for (std::size_t i = 0; i < v.size(); ++i) render(v[i], path + "[" + std::to_string(i) + "]", out);
  } else if (v.is_string()) {
    out += path + ": " + v.get<std::string>() + "\n";
  } else {
    out += path + ": " + v.dump() + "\n";
  }
}

}  // namespace

Json report_json(const SingularityReport& r) {
  Json j;
  j["model"] = r.model;
  Json strata = Json::array();
  for (const auto& s : r.lengths.strata) {
    Json e;
    e["stratum"] = s.stratum;
    e["length"] = s.zero_dimensional ? Json(s.length) : Json(nullptr);
    e["zero_dimensional"] = s.zero_dimensional;
    strata.push_back(e);
  }
  j["strata"] = strata;
  j["total_length"] = r.lengths.total_length ? Json(*r.lengths.total_length) : Json(nullptr);
  j["point_count"] = r.lengths.point_count ? Json(*r.lengths.point_count) : Json(nullptr);
  j["all_nodes"] = r.nodes.to_string();
  if (r.nodes.kind == AllNodes::Kind::Refuted) j["all_nodes_stratum"] = r.nodes.stratum;
  if (r.nodes.kind == AllNodes::Kind::Probabilistic) {
    j["all_nodes_modular_test"] = r.nodes.holds;
    if (!r.nodes.holds) j["all_nodes_stratum"] = r.nodes.stratum;
  }
  j["field"] = r.field;
  Json sigma = Json::object();
  if (r.sigma_outside_lambda6) sigma["outside_lambda6"] = *r.sigma_outside_lambda6;
  if (r.sigma_on_lambda6) sigma["on_lambda6"] = *r.sigma_on_lambda6;
  j["sigma_checks"] = sigma;
  Json nodal = Json::object();
  for (const auto& [k, v] : r.nodal) nodal[k] = to_string(v);
  j["nodal_consistency"] = nodal;
  Json points = Json::array();
  for (const auto& p : r.points) points.push_back(point_json(p));
  j["rational_points"] = points;
  j["notes"] = r.notes;
  return j;
}

std::string render_text(const Json& doc) {
  std::string out;
  render(doc, "", out);
  return out;
}

std::vector<std::string> json_diff(const Json& expected, const Json& actual, const std::string& path) {
  std::vector<std::string> diffs;
  if (expected.is_object()) {
    if (!actual.is_object()) return {path + ": expected an object, got " + actual.dump()};
    for (const auto& [k, v] : expected.items()) {
      std::string sub = path.empty() ? k : path + "." + k;
      if (!actual.contains(k)) {
        diffs.push_back(sub + ": missing");
        continue;
      }
      auto more = json_diff(v, actual.at(k), sub);
      diffs.insert(diffs.end(), more.begin(), more.end());
    }
  } else if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size())
      return {path + ": expected " + expected.dump() + ", got " + actual.dump()};
    for (std::size_t i = 0; i < expected.size(); ++i) {
      auto more = json_diff(expected[i], actual[i], path + "[" + std::to_string(i) + "]");
      diffs.insert(diffs.end(), more.begin(), more.end());
    }
  } else if (expected != actual) {
    diffs.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
  }
  return diffs;
}

}  // namespace veronese
