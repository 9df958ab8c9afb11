#pragma once
// Independent numerical oracles. Nothing here calls the code under test
// except for plain coordinate conversions.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hyp/kernel/point.hpp"

namespace oracle {

// -int_0^theta log|2 sin u| du by tanh-sinh quadrature, |theta| < pi.
inline double lobachevsky_quadrature(double theta) {
    if (theta == 0.0) return 0.0;
    boost::math::quadrature::tanh_sinh<double> q;
    auto f = [](double u) { return -std::log(std::abs(2.0 * std::sin(u))); };
    double s = theta < 0 ? -1.0 : 1.0;
    double a = std::abs(theta);
    // split at pi/2 keeps both log singularities at interval ends
    if (a <= std::numbers::pi / 2) return s * q.integrate(f, 0.0, a, 1e-15);
    return s * (q.integrate(f, 0.0, std::numbers::pi / 2, 1e-15) + q.integrate(f, std::numbers::pi / 2, a, 1e-15));
}

struct P2 {
    double x, y;
};

inline double cross(P2 o, P2 a, P2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline std::vector<P2> convex_hull(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end(), [](P2 a, P2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<P2> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
        h[k++] = pts[i - 1];
    }
    h.resize(k - 1);
    return h;
}

// Clip a convex polygon to the side a x + b y + c >= 0.
inline std::vector<P2> clip(const std::vector<P2>& poly, double a, double b, double c) {
    std::vector<P2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        P2 p = poly[i], q = poly[(i + 1) % poly.size()];
        double fp = a * p.x + b * p.y + c, fq = a * q.x + b * q.y + c;
        if (fp >= 0) out.push_back(p);
        if ((fp >= 0) != (fq >= 0)) {
            double t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

inline double polygon_area(const std::vector<P2>& p) {
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const P2& a = p[i];
        const P2& b = p[(i + 1) % p.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return 0.5 * s;
}

// Volume of a finite tetrahedron as int dx dy dz / z^3 over its upper
// half-space image. The vertical integral is done in closed form; the
// shadow is cut along the projected edges so the integrand is smooth on
// each cell, then each cell is integrated with a Duffy-mapped Gauss rule.
inline double tet_volume_quadrature(const hyp::Point (&v)[4]) {
    using hyp::Vec4;
    // inward normals: side of the opposite vertex is positive
    Vec4 X[4];
    for (int i = 0; i < 4; ++i) X[i] = v[i].coords();
    struct Cons {
        double A, n0, n1, n2, n3;
    } cons[4];
    for (int k = 0; k < 4; ++k) {
        int idx[3], j = 0;
        for (int i = 0; i < 4; ++i)
            if (i != k) idx[j++] = i;
        // solve for n orthogonal (Minkowski) to three points by Euclidean cross with eta
        const Vec4 &a = X[idx[0]], &b = X[idx[1]], &c = X[idx[2]];
        double m[4];
        for (int r = 0; r < 4; ++r) {
            int rows[3], t = 0;
            for (int q = 0; q < 4; ++q)
                if (q != r) rows[t++] = q;
            double M[3][3];
            for (int q = 0; q < 3; ++q) {
                M[q][0] = a[rows[q]];
                M[q][1] = b[rows[q]];
                M[q][2] = c[rows[q]];
            }
            double det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                         M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
            m[r] = ((r % 2) ? 1.0 : -1.0) * det;
        }
        double n[4] = {-m[0], m[1], m[2], m[3]};
        double side = -n[0] * X[k][0] + n[1] * X[k][1] + n[2] * X[k][2] + n[3] * X[k][3];
        if (side < 0)
            for (double& e : n) e = -e;
        cons[k] = {n[3] - n[0], n[0], n[1], n[2], n[3]};
    }
    auto integrand = [&](double x, double y) {
        double lo = 0.0, hi = std::numeric_limits<double>::infinity();
        double r2 = x * x + y * y;
        for (const auto& c : cons) {
            double B = c.A * r2 + 2 * c.n1 * x + 2 * c.n2 * y - c.n0 - c.n3;
            // A z^2 + B >= 0
            if (c.A > 0)
                lo = std::max(lo, -B / c.A);
            else if (c.A < 0)
                hi = std::min(hi, -B / c.A);
            else if (B < 0)
                return 0.0;
        }
        if (!(hi > lo) || lo <= 0) return 0.0;
        return 0.5 * (1.0 / lo - (std::isinf(hi) ? 0.0 : 1.0 / hi));
    };

    std::vector<P2> shadow;
    for (auto& p : v) {
        hyp::UHSPoint u = hyp::to_uhs(p);
        shadow.push_back({u.w.real(), u.w.imag()});
    }
    std::vector<P2> proj = shadow;
    std::vector<std::vector<P2>> cells{convex_hull(shadow)};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            double a = -(proj[j].y - proj[i].y), b = proj[j].x - proj[i].x;
            double c = -(a * proj[i].x + b * proj[i].y);
            std::vector<std::vector<P2>> next;
            for (auto& cell : cells) {
                auto l = clip(cell, a, b, c), r = clip(cell, -a, -b, -c);
                if (l.size() >= 3 && std::abs(polygon_area(l)) > 1e-16) next.push_back(l);
                if (r.size() >= 3 && std::abs(polygon_area(r)) > 1e-16) next.push_back(r);
            }
            cells.swap(next);
        }

    using G = boost::math::quadrature::gauss<double, 30>;
    double total = 0.0;
    for (auto& cell : cells) {
        for (std::size_t t = 1; t + 1 < cell.size(); ++t) {
            P2 A = cell[0], B = cell[t], C = cell[t + 1];
            double J = std::abs(cross(A, B, C));
            // Duffy: (u, w) in [0,1]^2 -> A + u (B - A) + u w (C - B)
            total += G::integrate(
                [&](double u) {
                    return G::integrate(
                        [&](double w) {
                            double x = A.x + u * (B.x - A.x) + u * w * (C.x - B.x);
                            double y = A.y + u * (B.y - A.y) + u * w * (C.y - B.y);
                            return integrand(x, y) * u;
                        },
                        0.0, 1.0);
                },
                0.0, 1.0) * J;
        }
    }
    return total;
}

} // namespace oracle
