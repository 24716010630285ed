#pragma once

#include <string>

#include <json.hpp>

#include "firecut/graph_oracle.hpp"
#include "firecut/graph_spec.hpp"
#include "firecut/instance.hpp"

namespace firecut {

/// Current instance/cut file format version.
inline constexpr int kFormatVersion = 1;

// Vertices serialize as [i, j] (grid), [ci, cj, t] (polyomino tile) or a
// string (named vertex). All parsers reject unknown object fields and throw
// SpecError on any schema violation.

nlohmann::json vertex_to_json(const Vertex& v);
Vertex vertex_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const GraphSpec& spec);
GraphSpec parse_spec(const nlohmann::json& doc);

nlohmann::json instance_to_json(const Instance& instance);
Instance parse_instance(const nlohmann::json& doc);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

nlohmann::json cut_to_json(const CutSystem& cut);
CutSystem parse_cut(const nlohmann::json& doc);
CutSystem load_cut(const std::string& path);

}  // namespace firecut
