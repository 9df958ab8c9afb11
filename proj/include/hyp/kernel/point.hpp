#pragma once

#include <complex>
#include <variant>

#include "hyp/kernel/minkowski.hpp"

namespace hyp {

using cplx = std::complex<double>;

// Point of H^3 on the upper sheet of the hyperboloid <x,x> = -1.
class Point {
public:
    Point() : x_(1, 0, 0, 0) {}

    // Normalizes any future timelike vector; throws DomainError otherwise.
    static Point from_coords(const Vec4& v);
    // x0 is recovered from the spatial part.
    static Point from_spatial(double x1, double x2, double x3);
    static Point origin() { return Point(); }

    const Vec4& coords() const { return x_; }
    double operator[](int i) const { return x_[i]; }

private:
    explicit Point(const Vec4& v) : x_(v) {}
    Vec4 x_;
};

// Point of the sphere at infinity, stored as an extended complex number.
class IdealPoint {
public:
    IdealPoint() : inf_(true) {}
    explicit IdealPoint(cplx c) : c_(c), inf_(false) {}
    static IdealPoint infinity() { return IdealPoint(); }

    bool is_infinity() const { return inf_; }
    cplx value() const;  // throws on infinity

    // Null vector with x0 = 1.
    Vec4 light_vector() const;
    static IdealPoint from_light_vector(const Vec4& v);

    bool approx_equal(const IdealPoint& o, double tol = 1e-10) const;

private:
    cplx c_{0.0, 0.0};
    bool inf_;
};

using Vertex = std::variant<Point, IdealPoint>;

inline bool is_ideal(const Vertex& v) { return std::holds_alternative<IdealPoint>(v); }

// Hyperboloid coordinates for points, light vector (x0 = 1) for ideal points.
Vec4 vertex_vector(const Vertex& v);

// Upper half-space coordinates: w = x + iy, height h > 0.
struct UHSPoint {
    cplx w;
    double h;
};

UHSPoint to_uhs(const Point& p);
Point from_uhs(const UHSPoint& u);
Point from_uhs(double x, double y, double h);

double distance(const Point& p, const Point& q);

// cosh d = 1 + |a - b|^2 / (2 h_a h_b); used as an independent check.
double distance_uhs(const UHSPoint& a, const UHSPoint& b);

// Unit tangent vector at base pointing along the geodesic toward target.
// Works for ideal targets. Throws DegenerateError if target == base.
Vec4 tangent_toward(const Point& base, const Vertex& target);

Point point_along(const Point& base, const Vec4& unit_tangent, double s);

} // namespace hyp
