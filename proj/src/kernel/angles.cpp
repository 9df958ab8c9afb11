#include "hyp/kernel/angles.hpp"

#include <cmath>
#include <numbers>

#include "hyp/kernel/errors.hpp"
#include "hyp/kernel/geodesic.hpp"

namespace hyp {

EdgeFrame edge_frame(const Vertex& a, const Vertex& b) {
    if (auto pa = std::get_if<Point>(&a)) return {*pa, tangent_toward(*pa, b)};
    if (auto pb = std::get_if<Point>(&b)) return {*pb, -tangent_toward(*pb, a)};
    Geodesic g = geodesic_through(a, b);
    return {g.at(0.0), g.direction_at(0.0)};
}

namespace {

Vec4 perp_unit(const EdgeFrame& f, const Vertex& c) {
    Vec4 u = tangent_toward(f.base, c);
    u -= mink_inner(u, f.dir) * f.dir;
    double n2 = mink_inner(u, u);
    if (!(n2 > 1e-24)) throw DegenerateError("dihedral: face point lies on the edge");
    return u * (1.0 / std::sqrt(n2));
}

} // namespace

double internal_dihedral(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d) {
    EdgeFrame f = edge_frame(a, b);
    Vec4 uc = perp_unit(f, c), ud = perp_unit(f, d);
    // atan2 form keeps accuracy near 0 and pi
    double s = std::abs(det4(f.base.coords(), f.dir, uc, ud));
    return std::atan2(s, mink_inner(uc, ud));
}

double oriented_internal_angle(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d) {
    EdgeFrame f = edge_frame(a, b);
    Vec4 uc = perp_unit(f, c), ud = perp_unit(f, d);
    double s = -det4(f.base.coords(), f.dir, uc, ud);
    double ang = std::atan2(s, mink_inner(uc, ud));
    if (ang < 0) ang += 2 * std::numbers::pi;
    return ang;
}

double oriented_external_angle(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d) {
    double e = std::numbers::pi - oriented_internal_angle(a, b, c, d);
    if (e <= -std::numbers::pi) e += 2 * std::numbers::pi;
    return e;
}

int orientation_sign(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d) {
    Vec4 va = vertex_vector(a), vb = vertex_vector(b), vc = vertex_vector(c), vd = vertex_vector(d);
    // differences keep tiny simplices above the floor
    Vec4 db = vb - va, dc = vc - va, dd = vd - va;
    double scale = euclid_norm(va) * euclid_norm(db) * euclid_norm(dc) * euclid_norm(dd);
    double det = det4(va, db, dc, dd);
    if (std::abs(det) <= 1e-12 * scale) return 0;
    return det > 0 ? 1 : -1;
}

double unwrap_near(double x, double ref) {
    const double tau = 2 * std::numbers::pi;
    return x - tau * std::round((x - ref) / tau);
}

} // namespace hyp
