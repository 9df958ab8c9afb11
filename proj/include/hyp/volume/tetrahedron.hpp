#pragma once

#include <array>

#include "hyp/kernel/point.hpp"

namespace hyp::volume {

struct Tetrahedron {
    std::array<Vertex, 4> vertices;
    int sign = 1;
};

// Signed volume: orientation of the ordered vertices times the chain sign.
// Degenerate (coplanar) tetrahedra give exactly 0.
double tet_volume_signed(const Tetrahedron& t);
double tet_volume_signed(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d);

// Signed volume of [inf, a, b, c] for upper half-space points; h = 0 marks
// an ideal vertex. Exposed for testing.
double cone_from_infinity(const UHSPoint& a, const UHSPoint& b, const UHSPoint& c);

} // namespace hyp::volume
