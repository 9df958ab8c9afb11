#pragma once

#include <array>
#include <optional>
#include <string>

#include "hyp/kernel/geodesic.hpp"
#include "hyp/kernel/plane.hpp"
#include "hyp/kernel/point.hpp"

namespace hyp {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

enum class IsometryClass { identity, elliptic, parabolic, loxodromic };
std::string to_string(IsometryClass c);

// Element of PSL(2,C); the stored matrix is rescaled to determinant 1.
class Isometry {
public:
    Isometry();
    explicit Isometry(const Mat2& m);
    Isometry(cplx a, cplx b, cplx c, cplx d) : Isometry(Mat2{{{a, b}, {c, d}}}) {}

    const Mat2& matrix() const { return m_; }
    cplx trace() const { return m_[0][0] + m_[1][1]; }
    Isometry inverse() const;
    Isometry operator*(const Isometry& o) const;
    // Equality up to the sign ambiguity of PSL(2,C).
    bool approx_equal(const Isometry& o, double tol = 1e-10) const;

    Mat4 lorentz() const;

    Point apply(const Point& p) const;
    IdealPoint apply(const IdealPoint& c) const;
    Vertex apply(const Vertex& v) const;
    Geodesic apply(const Geodesic& g) const;
    Plane apply(const Plane& f) const;

private:
    Mat2 m_;
};

struct Classification {
    IsometryClass kind;
    bool numerically_parabolic = false;  // trace within 1e-9 of +-2
    std::optional<Geodesic> axis;        // elliptic / loxodromic
    std::optional<IdealPoint> fixed;     // parabolic
    cplx complex_length{0.0, 0.0};       // Re >= 0, Im in (-pi, pi]
};

Classification classify_isometry(const Isometry& g);

// Translation by Re z along axis composed with rotation by Im z about it.
Isometry screw_motion(const Geodesic& axis, cplx z);

// Isometry sending 0 to a and infinity to b.
Isometry normalizing_map(const IdealPoint& a, const IdealPoint& b);

} // namespace hyp
