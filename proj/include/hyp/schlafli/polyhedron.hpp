#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hyp/kernel/point.hpp"
#include "hyp/volume/chain.hpp"

namespace hyp::schlafli {

// Edge ab of a polyhedron. Face `left` runs a -> b, face `right` runs b -> a.
// c follows b in the left face, d follows a in the right face; these are the
// half-plane witnesses handed to the oriented angle routines.
struct PolyEdge {
    std::size_t a, b;
    std::size_t left, right;
    std::size_t c, d;
};

// Edges of a closed oriented face complex, without any geometric checks.
// Throws GeometryError on inconsistent orientation or unpaired edges.
std::vector<PolyEdge> derive_edges(const std::vector<std::vector<std::size_t>>& faces, std::size_t vertex_count);

// Closed polyhedral surface with planar convex faces listed as
// counterclockwise cycles seen from outside. The solid need not be convex.
class Polyhedron {
public:
    // Throws GeometryError on bad combinatorics, DegenerateError on
    // non-planar or folded faces.
    Polyhedron(std::vector<Point> vertices, std::vector<std::vector<std::size_t>> faces,
               double planarity_tol = 1e-9);

    const std::vector<Point>& vertices() const { return verts_; }
    const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }
    const std::vector<PolyEdge>& edges() const { return edges_; }
    int euler_characteristic() const;

private:
    std::vector<Point> verts_;
    std::vector<std::vector<std::size_t>> faces_;
    std::vector<PolyEdge> edges_;
};

struct EdgeDatum {
    PolyEdge edge;
    double length;
    double external_angle;  // in (-pi, pi]; pi/2 at a right angle, pi for a doubled face
};

std::vector<EdgeDatum> edge_data(const Polyhedron& p);

// Cone from the normalized vertex centroid over fan-triangulated faces.
volume::SimplicialChain triangulate(const Polyhedron& p);

// Vertex path x(t) = c0 + c1 t + c2 t^2 + c3 t^3 in spatial hyperboloid
// coordinates; x0 is recovered so the point stays on the hyperboloid.
struct VertexPath {
    std::array<std::array<double, 3>, 4> coef{};
    Point at(double t) const;
    static VertexPath constant(const Point& p);
};

} // namespace hyp::schlafli
