#pragma once

#include "concavlab/functionals.hpp"
#include "concavlab/measure.hpp"
#include "concavlab/polytope.hpp"
#include "concavlab/reconstruction.hpp"

#include <json.hpp>

#include <string>

namespace concavlab {

// {"dim":3,"vertices":[[x,y,z],...]}
nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

// {"dim":3,"atoms":[{"dir":[x,y,z],"weight":w},...]}
nlohmann::json measure_to_json(const DirectionalMeasure& m);
DirectionalMeasure measure_from_json(const nlohmann::json& j);

// {"type":"box","sides":[...]}, {"type":"rect","sides":[a,b]},
// {"type":"spheroid","axes":[a,b]}, {"type":"triangle"}, or a polytope.
nlohmann::json body_to_json(const Body& body);
Body body_from_json(const nlohmann::json& j);

nlohmann::json diagnostics_to_json(const SolverDiagnostics& d);

/// Descriptors "box:1,2,2", "rect:0.01" (= rect:0.01,1), "rect:a,b",
/// "spheroid:10,1", "triangle". Throws Parse.
Body parse_body(const std::string& descriptor);

/// Parses text as JSON; syntax errors become Parse errors carrying the byte
/// offset.
nlohmann::json parse_json(const std::string& text);
nlohmann::json read_json_file(const std::string& path);

} // namespace concavlab
