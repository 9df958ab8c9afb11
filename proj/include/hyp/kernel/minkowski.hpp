#pragma once

#include <array>
#include <cmath>

namespace hyp {

struct Vec4 {
    std::array<double, 4> v{0, 0, 0, 0};

    constexpr Vec4() = default;
    constexpr Vec4(double a, double b, double c, double d) : v{a, b, c, d} {}

    constexpr double& operator[](int i) { return v[i]; }
    constexpr double operator[](int i) const { return v[i]; }

    Vec4& operator+=(const Vec4& o) { for (int i = 0; i < 4; ++i) v[i] += o.v[i]; return *this; }
    Vec4& operator-=(const Vec4& o) { for (int i = 0; i < 4; ++i) v[i] -= o.v[i]; return *this; }
    Vec4& operator*=(double s) { for (auto& x : v) x *= s; return *this; }
};

inline Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
inline Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
inline Vec4 operator*(double s, Vec4 a) { return a *= s; }
inline Vec4 operator*(Vec4 a, double s) { return a *= s; }
inline Vec4 operator-(Vec4 a) { return a *= -1.0; }

// -u0 v0 + u1 v1 + u2 v2 + u3 v3
inline double mink_inner(const Vec4& u, const Vec4& v) {
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

inline double euclid_dot(const Vec4& u, const Vec4& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

inline double euclid_norm(const Vec4& u) { return std::sqrt(euclid_dot(u, u)); }

double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d);

// Euclidean vector m with m . v == det4(a, b, c, v) for every v.
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);

// Flip the time component; turns a Euclidean covector into a Minkowski one.
inline Vec4 eta(Vec4 u) { u[0] = -u[0]; return u; }

using Mat4 = std::array<std::array<double, 4>, 4>;

Vec4 mul(const Mat4& m, const Vec4& x);
Mat4 mul(const Mat4& a, const Mat4& b);
Mat4 identity4();

// Lorentz boost carrying the unit timelike vector p to e0.
Mat4 boost_to_origin(const Vec4& p);

} // namespace hyp
