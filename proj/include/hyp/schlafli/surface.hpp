#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hyp/kernel/point.hpp"
#include "hyp/schlafli/polyhedron.hpp"
#include "hyp/volume/chain.hpp"

namespace hyp::schlafli {

// Triangulated closed oriented surface mapped into H^3, together with a
// 3-chain it bounds. Triangles are outward counterclockwise.
class PolyhedralSurfaceMap {
public:
    using Tri = std::array<std::size_t, 3>;

    // Edge ab: triangle (a, b, c) and triangle (b, a, d).
    struct Edge {
        std::size_t a, b, c, d;
    };

    // Throws GeometryError unless the triangles form a closed oriented surface
    // and the chain boundary equals the triangle 2-cycle.
    PolyhedralSurfaceMap(std::vector<Point> images, std::vector<Tri> triangles, volume::SimplicialChain chain);

    const std::vector<Point>& images() const { return images_; }
    const std::vector<Tri>& triangles() const { return tris_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const volume::SimplicialChain& bounding_chain() const { return chain_; }
    // chain vertex index of surface vertex i
    std::size_t chain_index(std::size_t i) const { return to_chain_[i]; }

private:
    std::vector<Point> images_;
    std::vector<Tri> tris_;
    std::vector<Edge> edges_;
    volume::SimplicialChain chain_;
    std::vector<std::size_t> to_chain_;
};

// Fan-triangulated boundary of p with the cone chain of triangulate(p).
PolyhedralSurfaceMap surface_of(const Polyhedron& p);

// Same surface, chain replaced by a cone from another interior point.
PolyhedralSurfaceMap recone(const PolyhedralSurfaceMap& s, const Point& apex);

// Oriented external angles of the surface itself, edge by edge.
std::vector<double> surface_external_angles(const PolyhedralSurfaceMap& s);

struct EdgeCheckEntry {
    std::size_t a, b;  // chain vertex indices, a < b
    bool on_surface;
    int incidence;          // simplices touching the edge
    int net_degree;         // sum of orientation weights
    double internal_sum;    // sum of weighted internal dihedral angles
    double literal_sum;     // sum of weighted external angles pi - alpha
    double residual;        // distance to the expected class mod 2 pi
    double literal_residual;
};

struct EdgeCheckReport {
    std::vector<EdgeCheckEntry> edges;
    double max_interior_deviation = 0;
    double max_boundary_deviation = 0;
    double max_literal_interior_deviation = 0;
    double max_literal_boundary_deviation = 0;
    int degenerate_simplices = 0;
    bool pass(double tol = 1e-9) const { return max_interior_deviation <= tol && max_boundary_deviation <= tol; }
};

// Angle bookkeeping around every edge of a chain. Interior edges: the
// weighted internal angles close up to 0 mod 2 pi. Surface edges: they add up
// to the surface's own internal angle pi - b(e) mod 2 pi. Sums of external
// angles pi - alpha are reported too; those agree with the internal form only
// when the number of incident simplices has the right parity.
EdgeCheckReport internal_edge_check(const volume::SimplicialChain& chain, const PolyhedralSurfaceMap& surface);

// Distance from x to 2 pi Z.
double mod_two_pi_distance(double x);

} // namespace hyp::schlafli
