#pragma once

#include "hyp/kernel/point.hpp"

namespace hyp {

// Totally geodesic plane {x : <x, n> = 0}; the normal side is <x, n> > 0.
class Plane {
public:
    static Plane from_normal(const Vec4& n);  // normalizes; throws unless spacelike
    // Plane through three vertices. The normal side is where det(a, b, c, v) > 0.
    static Plane through(const Vertex& a, const Vertex& b, const Vertex& c);

    const Vec4& normal() const { return n_; }
    Plane flipped() const { return Plane(-n_); }
    double signed_side(const Vec4& x) const { return mink_inner(x, n_); }
    // sinh of the signed distance for points
    double offset(const Point& p) const { return mink_inner(p.coords(), n_); }
    bool contains(const Vertex& v, double tol = 1e-9) const;

private:
    explicit Plane(const Vec4& n) : n_(n) {}
    Vec4 n_;
};

struct CoOrientation {
    bool flip_first = false;
    bool flip_second = false;
    bool reflex = false;  // report the negative branch
};

// External dihedral angle between two faces given by outward normals.
// 0 when flat, pi when folded back. Throws if the planes are ultraparallel.
double dihedral_external(const Plane& f1, const Plane& f2, CoOrientation co = {});

} // namespace hyp
