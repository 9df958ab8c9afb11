#pragma once

#include "hyp/kernel/point.hpp"

namespace hyp {

// A finite point on the edge ab and the unit tangent there pointing a -> b.
struct EdgeFrame {
    Point base;
    Vec4 dir;
};
EdgeFrame edge_frame(const Vertex& a, const Vertex& b);

// Unsigned angle in [0, pi] at edge ab between the half-planes toward c and d.
double internal_dihedral(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d);

// Faces (a, b, c, ...) and (b, a, d, ...) of an oriented surface share edge ab
// with opposite induced directions. Returns the angle in [0, 2pi) of the region
// on the negative (inner) side of both faces.
double oriented_internal_angle(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d);

// pi minus the above, in (-pi, pi].
double oriented_external_angle(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d);

// Sign of det of the four vectors (+1, -1, or 0 below the degeneracy floor).
int orientation_sign(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d);

// Picks the representative of x + 2 pi k closest to ref.
double unwrap_near(double x, double ref);

} // namespace hyp
