#pragma once

#include <string>

#include <json.hpp>

#include "tubex/verify.hpp"

namespace tubex {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);

Json tubing_to_json(const MarkedTubing& t);
MarkedTubing tubing_from_json(const Json& j);

// {"tubing": ..., "coords": ["<decimal-string>", ...]}
Json vertex_to_json(const MarkedTubing& t, const LatticePoint& p);
std::pair<MarkedTubing, LatticePoint> vertex_from_json(const Json& j);

Json lattice_to_json(const FaceLattice& l);
FaceLattice lattice_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

// homogenized rows "1 x1 ... xn", newline-terminated
std::string polymake_points(const std::vector<LatticePoint>& points);

// Object File Format for 3-dimensional polytopes: facet vertex cycles
// walked along lattice edges and oriented outward by exact sign checks.
// Throws std::invalid_argument unless the lattice is 3-dimensional.
std::string off_export(const std::vector<LatticePoint>& points, const FaceLattice& lattice);

std::string read_file(const std::string& path);

} // namespace tubex
