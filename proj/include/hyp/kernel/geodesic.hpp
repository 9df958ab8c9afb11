#pragma once

#include "hyp/kernel/point.hpp"

namespace hyp {

// Oriented geodesic, from start() to end().
class Geodesic {
public:
    Geodesic(IdealPoint start, IdealPoint end);

    const IdealPoint& start() const { return a_; }
    const IdealPoint& end() const { return b_; }
    Geodesic reversed() const { return Geodesic(b_, a_); }

    // Arc-length parameterization; s = 0 is the point closest to the origin.
    Point at(double s) const;
    double parameter_of(const Point& p) const;  // of the foot of the perpendicular
    double distance_to(const Point& p) const;
    bool contains(const Point& p, double tol = 1e-10) const;
    Vec4 direction_at(double s) const;

    // Light vectors scaled so that <la, lb> = -2.
    const Vec4& la() const { return la_; }
    const Vec4& lb() const { return lb_; }

private:
    IdealPoint a_, b_;
    Vec4 la_, lb_;
};

Geodesic geodesic_through(const Vertex& a, const Vertex& b);

} // namespace hyp
