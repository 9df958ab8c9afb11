#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hyp/harness/family.hpp"
#include "hyp/harness/finite_difference.hpp"
#include "hyp/schlafli/polyhedron.hpp"
#include "hyp/schlafli/surface.hpp"

namespace hyp::schlafli {

struct EdgeSample {
    double length;
    double angle;
};

struct SchlafliTerm {
    std::size_t a, b;
    double length;      // at t0
    double angle;       // at t0
    double angle_rate;  // right derivative
    double fd_error;
    double term() const { return 0.5 * length * angle_rate; }
};

struct SchlafliResult {
    double value = 0;
    std::vector<SchlafliTerm> terms;
    double max_fd_error = 0;
    bool converged = true;
};

// Generic form: f(t) returns per-edge (length, angle) in a fixed edge order.
// Angles are unwrapped toward their t0 values before differencing.
SchlafliResult schlafli_from_samples(const std::function<std::vector<EdgeSample>(double)>& f, double t0,
                                     const harness::FdOptions& opt = {});

SchlafliResult schlafli_terms(const harness::DeformationFamily<Polyhedron>& family, double t0,
                              const harness::FdOptions& opt = {});

// 1/2 sum l(e) b'(e); throws GeometryError if an angle difference diverges.
double schlafli_derivative(const harness::DeformationFamily<Polyhedron>& family, double t0,
                           const harness::FdOptions& opt = {});

SchlafliResult corollary2_terms(const harness::DeformationFamily<PolyhedralSurfaceMap>& family, double t0,
                                const harness::FdOptions& opt = {});

double corollary2_derivative(const harness::DeformationFamily<PolyhedralSurfaceMap>& family, double t0,
                             const harness::FdOptions& opt = {});

// Polyhedron family from polynomial vertex paths over fixed faces.
harness::DeformationFamily<Polyhedron> polyhedron_family(std::vector<VertexPath> paths,
                                                         std::vector<std::vector<std::size_t>> faces,
                                                         double t_min = 0.0, double t_max = 1.0);

// Surface family from vertex paths; the chain is the cone from the
// normalized image centroid (or from `apex_path` when given).
harness::DeformationFamily<PolyhedralSurfaceMap> surface_family(std::vector<VertexPath> paths,
                                                                std::vector<PolyhedralSurfaceMap::Tri> triangles,
                                                                double t_min = 0.0, double t_max = 1.0,
                                                                const VertexPath* apex_path = nullptr);

} // namespace hyp::schlafli
