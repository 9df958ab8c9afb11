#include "hyp/kernel/point.hpp"

#include <cmath>

#include "hyp/kernel/errors.hpp"

namespace hyp {

Point Point::from_coords(const Vec4& v) {
    double n2 = -mink_inner(v, v);
    if (!(v[0] > 0) || !(n2 > 0) || !std::isfinite(n2))
        throw DomainError("Point: vector is not future timelike");
    return Point(v * (1.0 / std::sqrt(n2)));
}

Point Point::from_spatial(double x1, double x2, double x3) {
    double x0 = std::sqrt(1.0 + x1 * x1 + x2 * x2 + x3 * x3);
    return Point(Vec4(x0, x1, x2, x3));
}

cplx IdealPoint::value() const {
    if (inf_) throw DomainError("IdealPoint: value of infinity");
    return c_;
}

Vec4 IdealPoint::light_vector() const {
    if (inf_) return Vec4(1, 0, 0, 1);
    double n = std::norm(c_);
    double k = 1.0 / (n + 1.0);
    return Vec4(1.0, 2 * c_.real() * k, 2 * c_.imag() * k, (n - 1.0) * k);
}

IdealPoint IdealPoint::from_light_vector(const Vec4& v) {
    if (!(v[0] > 0)) throw DomainError("IdealPoint: light vector must have x0 > 0");
    Vec4 u = v * (1.0 / v[0]);
    if (std::abs(mink_inner(u, u)) > 1e-8) throw DomainError("IdealPoint: vector is not null");
    double d = u[0] - u[3];
    if (d <= 1e-15) return IdealPoint::infinity();
    if (d < 1.0) return IdealPoint((u[0] + u[3]) / cplx(u[1], -u[2]));
    return IdealPoint(cplx(u[1], u[2]) / d);
}

bool IdealPoint::approx_equal(const IdealPoint& o, double tol) const {
    return euclid_norm(light_vector() - o.light_vector()) <= tol;
}

Vec4 vertex_vector(const Vertex& v) {
    if (auto p = std::get_if<Point>(&v)) return p->coords();
    return std::get<IdealPoint>(v).light_vector();
}

UHSPoint to_uhs(const Point& p) {
    const Vec4& x = p.coords();
    // x0 - x3 = 1/h; use the product form when x3 > 0 to avoid cancellation
    double d = x[0] - x[3];
    if (x[3] > 0) d = 1.0 / (x[0] + x[3]) * (1.0 + x[1] * x[1] + x[2] * x[2]);
    double h = 1.0 / d;
    return {cplx(x[1], x[2]) * h, h};
}

Point from_uhs(const UHSPoint& u) {
    if (!(u.h > 0)) throw DomainError("upper half-space point needs h > 0");
    double n = std::norm(u.w), h = u.h;
    Vec4 x((n + h * h + 1) / (2 * h), u.w.real() / h, u.w.imag() / h, (n + h * h - 1) / (2 * h));
    return Point::from_coords(x);
}

Point from_uhs(double x, double y, double h) { return from_uhs(UHSPoint{cplx(x, y), h}); }

double distance(const Point& p, const Point& q) {
    double c = -mink_inner(p.coords(), q.coords());
    if (c < 1.0 - 1e-12) throw DomainError("distance: <p,q> > -1");
    Vec4 d = q.coords() - p.coords();
    double s2 = std::max(0.0, mink_inner(d, d));
    return 2.0 * std::asinh(0.5 * std::sqrt(s2));
}

double distance_uhs(const UHSPoint& a, const UHSPoint& b) {
    double e2 = std::norm(a.w - b.w) + (a.h - b.h) * (a.h - b.h);
    // 2 asinh(|a-b| / (2 sqrt(ha hb))) is the same as the arccosh form
    return 2.0 * std::asinh(0.5 * std::sqrt(e2 / (a.h * b.h)));
}

Vec4 tangent_toward(const Point& base, const Vertex& target) {
    const Vec4& p = base.coords();
    Vec4 u;
    if (auto q = std::get_if<Point>(&target)) {
        Vec4 d = q->coords() - p;
        u = d - 0.5 * mink_inner(d, d) * p;
    } else {
        Vec4 L = std::get<IdealPoint>(target).light_vector();
        u = L + mink_inner(L, p) * p;
    }
    double n2 = mink_inner(u, u);
    if (!(n2 > 1e-30)) throw DegenerateError("tangent_toward: target coincides with base");
    return u * (1.0 / std::sqrt(n2));
}

Point point_along(const Point& base, const Vec4& u, double s) {
    return Point::from_coords(std::cosh(s) * base.coords() + std::sinh(s) * u);
}

} // namespace hyp
