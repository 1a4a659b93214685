#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "chordal/graph.hpp"

namespace chordal {

// Full analysis of one input graph as a JSON document; the text rendering is
// derived from the JSON so the two formats always agree.
nlohmann::json analyze_graph(const Graph& g);
std::string render_analysis_text(const nlohmann::json& report);

// True when the report describes a chordal (possibly empty) input.
bool analysis_is_chordal(const nlohmann::json& report);

}  // namespace chordal
