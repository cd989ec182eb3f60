#pragma once

#include <string_view>

#include "json.hpp"

#include "cisgraphs/classify.hpp"

namespace cisgraphs {

inline constexpr std::string_view kReportSchema = "cisgraphs.report/1";

/// Vertex sets serialize as sorted 0-based lists, rationals as "p/q".
nlohmann::json to_json(VertexSet s);
VertexSet vertex_set_from_json(const nlohmann::json& j);

/// {"type": ..., fields...}; monostate serializes as null.
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// {"schema", "graph": {"id", "order", "graph6"}, "properties": [...]}.
nlohmann::json report_to_json(const ClassReport& report);
/// Throws ParseError on schema mismatch or malformed content.
ClassReport report_from_json(const nlohmann::json& j);

}  // namespace cisgraphs
