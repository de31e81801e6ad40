#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "veronese/singularity.hpp"

namespace veronese {

using Json = nlohmann::ordered_json;

/// The canonical JSON document of a report.
Json report_json(const SingularityReport& r);

/// Line-oriented rendering of any JSON document: one "path: value" line per
/// scalar, in document order.
std::string render_text(const Json& doc);

/// Field-level differences of `actual` against every value present in
/// `expected` (extra fields in `actual` are ignored).
std::vector<std::string> json_diff(const Json& expected, const Json& actual, const std::string& path = "");

}  // namespace veronese
