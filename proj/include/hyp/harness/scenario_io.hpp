#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "hyp/harness/verify.hpp"

namespace hyp::harness {

// Scenario file kinds:
//   "polyhedron_family": vertices (paths), faces
//   "surface_family":    vertices (paths), triangles, optional apex (path)
//   "pleat_scenario":    see scenario_to_json
// Polyhedron and surface families may instead name a seeded generator
// ("random_tetrahedron", "random_octahedron"); pleat scenarios may use
// "random_pleat" with a leaf count. A path is {"coef": [[x,y,z] x 4]} in
// spatial hyperboloid coordinates, {"spatial": [x,y,z]} or {"uhs": [x,y,h]}.
// Optional t0, h, tol, t_max, seed; corruption {"kind", "edge", "delta"}.
struct LoadedScenario {
    std::string kind;
    std::optional<DeformationFamily<schlafli::Polyhedron>> polyhedron;
    std::optional<DeformationFamily<schlafli::PolyhedralSurfaceMap>> surface;
    std::optional<pleated::PleatScenario> pleat;
    VerifyOptions options;
};

LoadedScenario load_scenario(const nlohmann::json& j);
LoadedScenario load_scenario_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

schlafli::VertexPath path_from_json(const nlohmann::json& j);
nlohmann::json path_to_json(const schlafli::VertexPath& p);

VerificationReport run_scenario(const LoadedScenario& s);

} // namespace hyp::harness
