#include "hyp/volume/tetrahedron.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hyp/kernel/angles.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/volume/lobachevsky.hpp"

namespace hyp::volume {

namespace {

constexpr double kPi = std::numbers::pi;

double cross2(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Region above the hemisphere of radius R centred at c0, over the right
// triangle (c0, m, x) with the right angle at m.
double right_piece(cplx c0, cplx m, cplx x, double R) {
    double d = std::abs(m - c0);
    double leg = std::abs(x - m);
    if (leg == 0.0) return 0.0;
    double phi = std::atan2(leg, d);
    double psi = std::acos(std::min(1.0, d / R));
    double v = 0.25 * (lobachevsky(psi + phi) - lobachevsky(psi - phi) + 2.0 * lobachevsky(0.5 * kPi - phi));
    double o = cross2(m - c0, x - c0);
    return o > 0 ? v : (o < 0 ? -v : 0.0);
}

double edge_piece(cplx c0, cplx u, cplx v, double R, double scale) {
    cplx e = v - u;
    double len2 = std::norm(e);
    if (len2 <= 1e-28 * scale * scale) return 0.0;
    double t = ((c0 - u) * std::conj(e)).real() / len2;
    cplx m = u + t * e;
    return right_piece(c0, m, v, R) - right_piece(c0, m, u, R);
}

} // namespace

double cone_from_infinity(const UHSPoint& a, const UHSPoint& b, const UHSPoint& c) {
    cplx pa = a.w, pb = b.w, pc = c.w;
    double scale = std::max({std::abs(pb - pa), std::abs(pc - pa), std::abs(pc - pb)});
    double area2 = cross2(pb - pa, pc - pa);
    if (std::abs(area2) <= 1e-13 * scale * scale) return 0.0;  // vertical plane

    // centre of the hemisphere: |p - c0|^2 + h^2 equal for all three
    double qa = std::norm(pa) + a.h * a.h, qb = std::norm(pb) + b.h * b.h, qc = std::norm(pc) + c.h * c.h;
    cplx e1 = pb - pa, e2 = pc - pa;
    double r1 = 0.5 * (qb - qa), r2 = 0.5 * (qc - qa);
    // e.real * x + e.imag * y = r
    double det = e1.real() * e2.imag() - e1.imag() * e2.real();
    cplx c0((r1 * e2.imag() - r2 * e1.imag()) / det, (e1.real() * r2 - e2.real() * r1) / det);
    double R = std::sqrt(std::norm(pa - c0) + a.h * a.h);

    double s = edge_piece(c0, pa, pb, R, scale) + edge_piece(c0, pb, pc, R, scale) + edge_piece(c0, pc, pa, R, scale);
    return -s;
}

namespace {

Mat4 rotation_to_e3(const std::array<double, 3>& u) {
    // Rodrigues rotation taking unit u to (0,0,1)
    Mat4 m = identity4();
    double cz = u[2];
    std::array<double, 3> k = {u[1], -u[0], 0.0};  // u x e3
    double s = std::hypot(k[0], k[1]);
    if (s < 1e-15) {
        if (cz < 0) {
            m[1][1] = -1;
            m[3][3] = -1;
        }
        return m;
    }
    for (auto& x : k) x /= s;
    double K[3][3] = {{0, -k[2], k[1]}, {k[2], 0, -k[0]}, {-k[1], k[0], 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double kk = 0;
            for (int l = 0; l < 3; ++l) kk += K[i][l] * K[l][j];
            m[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + s * K[i][j] + (1 - cz) * kk;
        }
    return m;
}

const std::vector<std::array<double, 3>>& candidate_directions() {
    static const std::vector<std::array<double, 3>> dirs = [] {
        std::vector<std::array<double, 3>> d;
        for (int x = -1; x <= 1; ++x)
            for (int y = -1; y <= 1; ++y)
                for (int z = -1; z <= 1; ++z) {
                    if (!x && !y && !z) continue;
                    double n = std::sqrt(double(x * x + y * y + z * z));
                    d.push_back({x / n, y / n, z / n});
                }
        return d;
    }();
    return dirs;
}

} // namespace

double tet_volume_signed(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d) {
    const Vertex* v[4] = {&a, &b, &c, &d};
    if (orientation_sign(a, b, c, d) == 0) return 0.0;

    Vec4 w[4];
    Vec4 centroid;
    for (int i = 0; i < 4; ++i) {
        w[i] = vertex_vector(*v[i]);
        centroid += w[i] * (1.0 / w[i][0]);
    }
    Mat4 B = boost_to_origin(Point::from_coords(centroid).coords());
    std::array<double, 3> dir[4];
    bool has_dir[4];
    for (int i = 0; i < 4; ++i) {
        w[i] = mul(B, w[i]);
        double n = std::sqrt(w[i][1] * w[i][1] + w[i][2] * w[i][2] + w[i][3] * w[i][3]);
        has_dir[i] = n > 1e-9 * w[i][0];
        if (has_dir[i]) dir[i] = {w[i][1] / n, w[i][2] / n, w[i][3] / n};
    }
    // the point at infinity goes where no vertex is looking
    std::array<double, 3> best{};
    double best_score = -2;
    for (const auto& u : candidate_directions()) {
        double worst = 2;
        for (int i = 0; i < 4; ++i)
            if (has_dir[i]) worst = std::min(worst, 1.0 - (u[0] * dir[i][0] + u[1] * dir[i][1] + u[2] * dir[i][2]));
        if (worst > best_score) {
            best_score = worst;
            best = u;
        }
    }
    Mat4 M = mul(rotation_to_e3(best), B);

    UHSPoint up[4];
    for (int i = 0; i < 4; ++i) {
        if (auto p = std::get_if<Point>(v[i])) {
            up[i] = to_uhs(Point::from_coords(mul(M, p->coords())));
        } else {
            IdealPoint z = IdealPoint::from_light_vector(mul(M, vertex_vector(*v[i])));
            up[i] = {z.value(), 0.0};
        }
    }
    // [v0 v1 v2 v3] = [P v1 v2 v3] - [P v0 v2 v3] + [P v0 v1 v3] - [P v0 v1 v2]
    double s = cone_from_infinity(up[1], up[2], up[3]);
    s -= cone_from_infinity(up[0], up[2], up[3]);
    s += cone_from_infinity(up[0], up[1], up[3]);
    s -= cone_from_infinity(up[0], up[1], up[2]);
    return s;
}

double tet_volume_signed(const Tetrahedron& t) {
    return t.sign * tet_volume_signed(t.vertices[0], t.vertices[1], t.vertices[2], t.vertices[3]);
}

} // namespace hyp::volume
