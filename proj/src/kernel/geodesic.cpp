#include "hyp/kernel/geodesic.hpp"

#include <cmath>

#include "hyp/kernel/errors.hpp"

namespace hyp {

Geodesic::Geodesic(IdealPoint start, IdealPoint end) : a_(start), b_(end) {
    Vec4 la = a_.light_vector(), lb = b_.light_vector();
    double ip = mink_inner(la, lb);
    if (!(ip < -1e-14)) throw DegenerateError("Geodesic: endpoints coincide");
    double k = std::sqrt(-2.0 / ip);
    la_ = k * la;
    lb_ = k * lb;
}

Point Geodesic::at(double s) const {
    return Point::from_coords(0.5 * (std::exp(-s) * la_ + std::exp(s) * lb_));
}

Vec4 Geodesic::direction_at(double s) const {
    return 0.5 * (std::exp(s) * lb_ - std::exp(-s) * la_);
}

double Geodesic::parameter_of(const Point& p) const {
    double al = -mink_inner(p.coords(), lb_);
    double be = -mink_inner(p.coords(), la_);
    return 0.5 * std::log(be / al);
}

double Geodesic::distance_to(const Point& p) const {
    double al = -0.5 * mink_inner(p.coords(), lb_);
    double be = -0.5 * mink_inner(p.coords(), la_);
    Vec4 nu = p.coords() - al * la_ - be * lb_;
    return std::asinh(std::sqrt(std::max(0.0, mink_inner(nu, nu))));
}

bool Geodesic::contains(const Point& p, double tol) const { return distance_to(p) <= tol; }

Geodesic geodesic_through(const Vertex& a, const Vertex& b) {
    const Point* pa = std::get_if<Point>(&a);
    const Point* pb = std::get_if<Point>(&b);
    if (!pa && !pb) {
        const auto& ia = std::get<IdealPoint>(a);
        const auto& ib = std::get<IdealPoint>(b);
        if (ia.approx_equal(ib, 1e-14)) throw DegenerateError("geodesic_through: coincident inputs");
        return Geodesic(ia, ib);
    }
    try {
        if (pa) {
            Vec4 u = tangent_toward(*pa, b);
            IdealPoint back = IdealPoint::from_light_vector(pa->coords() - u);
            IdealPoint fwd = pb ? IdealPoint::from_light_vector(pa->coords() + u) : std::get<IdealPoint>(b);
            return Geodesic(back, fwd);
        }
        Vec4 u = tangent_toward(*pb, a);
        return Geodesic(std::get<IdealPoint>(a), IdealPoint::from_light_vector(pb->coords() - u));
    } catch (const DegenerateError&) {
        throw DegenerateError("geodesic_through: coincident inputs");
    }
}

} // namespace hyp
