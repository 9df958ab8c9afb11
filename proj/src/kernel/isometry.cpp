#include "hyp/kernel/isometry.hpp"

#include <cmath>
#include <numbers>

#include "hyp/kernel/errors.hpp"

namespace hyp {

namespace {

constexpr double kPi = std::numbers::pi;

// X = [[x0 + x3, x1 + i x2], [x1 - i x2, x0 - x3]]
using Herm = Mat2;

Herm to_herm(const Vec4& x) {
    return {{{cplx(x[0] + x[3], 0), cplx(x[1], x[2])}, {cplx(x[1], -x[2]), cplx(x[0] - x[3], 0)}}};
}

Vec4 from_herm(const Herm& h) {
    return Vec4(0.5 * (h[0][0].real() + h[1][1].real()), h[0][1].real(), h[0][1].imag(),
                0.5 * (h[0][0].real() - h[1][1].real()));
}

Mat2 matmul(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

Mat2 adjoint(const Mat2& a) {
    return {{{std::conj(a[0][0]), std::conj(a[1][0])}, {std::conj(a[0][1]), std::conj(a[1][1])}}};
}

} // namespace

std::string to_string(IsometryClass c) {
    switch (c) {
    case IsometryClass::identity: return "identity";
    case IsometryClass::elliptic: return "elliptic";
    case IsometryClass::parabolic: return "parabolic";
    case IsometryClass::loxodromic: return "loxodromic";
    }
    return "?";
}

Isometry::Isometry() : m_{{{1.0, 0.0}, {0.0, 1.0}}} {}

Isometry::Isometry(const Mat2& m) : m_(m) {
    cplx det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (!(std::abs(det) > 1e-300) || !std::isfinite(std::abs(det)))
        throw DomainError("Isometry: singular matrix");
    cplx s = std::sqrt(det);
    for (auto& row : m_)
        for (auto& e : row) e /= s;
}

Isometry Isometry::inverse() const {
    return Isometry(m_[1][1], -m_[0][1], -m_[1][0], m_[0][0]);
}

Isometry Isometry::operator*(const Isometry& o) const { return Isometry(matmul(m_, o.m_)); }

bool Isometry::approx_equal(const Isometry& o, double tol) const {
    double dp = 0, dm = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            dp = std::max(dp, std::abs(m_[i][j] - o.m_[i][j]));
            dm = std::max(dm, std::abs(m_[i][j] + o.m_[i][j]));
        }
    return std::min(dp, dm) <= tol;
}

Mat4 Isometry::lorentz() const {
    Mat4 L{};
    Mat2 ad = adjoint(m_);
    for (int j = 0; j < 4; ++j) {
        Vec4 e;
        e[j] = 1.0;
        Vec4 col = from_herm(matmul(matmul(m_, to_herm(e)), ad));
        for (int i = 0; i < 4; ++i) L[i][j] = col[i];
    }
    return L;
}

Point Isometry::apply(const Point& p) const { return Point::from_coords(mul(lorentz(), p.coords())); }

IdealPoint Isometry::apply(const IdealPoint& c) const {
    return IdealPoint::from_light_vector(mul(lorentz(), c.light_vector()));
}

Vertex Isometry::apply(const Vertex& v) const {
    if (auto p = std::get_if<Point>(&v)) return apply(*p);
    return apply(std::get<IdealPoint>(v));
}

Geodesic Isometry::apply(const Geodesic& g) const { return Geodesic(apply(g.start()), apply(g.end())); }

Plane Isometry::apply(const Plane& f) const { return Plane::from_normal(mul(lorentz(), f.normal())); }

namespace {

// Fixed point of z -> (az + b)/(cz + d) belonging to eigenvalue lam.
IdealPoint fixed_point_for(const Mat2& m, cplx lam) {
    cplx a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
    if (std::abs(c) > 1e-14 * scale) return IdealPoint((lam - d) / c);
    // upper triangular: eigenvalue a belongs to infinity
    if (std::abs(lam - a) <= std::abs(lam - d)) return IdealPoint::infinity();
    return IdealPoint(b / (d - a));
}

} // namespace

Classification classify_isometry(const Isometry& g) {
    Classification out;
    if (g.approx_equal(Isometry(), 1e-12)) {
        out.kind = IsometryClass::identity;
        return out;
    }
    const Mat2& m = g.matrix();
    cplx tr = g.trace();
    double gap = std::min(std::abs(tr - 2.0), std::abs(tr + 2.0));
    if (gap <= 1e-9) {
        out.kind = IsometryClass::parabolic;
        out.numerically_parabolic = gap > 0.0;
        cplx a = m[0][0], d = m[1][1], c = m[1][0];
        double scale = std::abs(m[0][0]) + std::abs(m[0][1]) + std::abs(c) + std::abs(d);
        out.fixed = std::abs(c) > 1e-14 * scale ? IdealPoint((a - d) / (2.0 * c)) : IdealPoint::infinity();
        return out;
    }
    bool elliptic = std::abs(tr.imag()) <= 1e-12 && std::abs(tr.real()) < 2.0;
    out.kind = elliptic ? IsometryClass::elliptic : IsometryClass::loxodromic;

    cplx disc = std::sqrt(tr * tr - 4.0);
    cplx l1 = 0.5 * (tr + disc);
    cplx l2 = 1.0 / l1;
    // choose among +-l1, +-l2 the normal form of the complex length
    cplx best_lam{};
    cplx best_z{};
    bool found = false;
    for (cplx lam : {l1, -l1, l2, -l2}) {
        cplx z = 2.0 * std::log(lam);
        bool ok = elliptic ? (z.imag() > 0 && z.imag() <= kPi + 1e-15)
                           : (z.real() > 0 && z.imag() > -kPi && z.imag() <= kPi + 1e-15);
        if (ok && !found) {
            best_lam = lam;
            best_z = elliptic ? cplx(0.0, z.imag()) : z;
            found = true;
        }
    }
    if (!found) throw GeometryError("classify_isometry: no eigenvalue normal form");
    out.complex_length = best_z;
    IdealPoint attract = fixed_point_for(m, best_lam);
    IdealPoint repel = fixed_point_for(m, 1.0 / best_lam);
    out.axis = Geodesic(repel, attract);
    return out;
}

Isometry normalizing_map(const IdealPoint& a, const IdealPoint& b) {
    if (b.is_infinity()) return Isometry(1.0, a.value(), 0.0, 1.0);
    if (a.is_infinity()) return Isometry(b.value(), -1.0, 1.0, 0.0);
    return Isometry(b.value(), a.value(), 1.0, 1.0);
}

Isometry screw_motion(const Geodesic& axis, cplx z) {
    Isometry A = normalizing_map(axis.start(), axis.end());
    cplx e = std::exp(0.5 * z);
    Isometry D(e, 0.0, 0.0, 1.0 / e);
    return A * D * A.inverse();
}

} // namespace hyp
