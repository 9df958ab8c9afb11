#include "hyp/kernel/minkowski.hpp"

namespace hyp {

namespace {
double det3(double a, double b, double c, double d, double e, double f, double g, double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}
} // namespace

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
    // cofactors of the last column of [a b c v]
    Vec4 m;
    for (int i = 0; i < 4; ++i) {
        int r[3], k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) r[k++] = j;
        double minor = det3(a[r[0]], b[r[0]], c[r[0]],
                            a[r[1]], b[r[1]], c[r[1]],
                            a[r[2]], b[r[2]], c[r[2]]);
        m[i] = ((i + 3) % 2 == 0 ? 1.0 : -1.0) * minor;
    }
    return m;
}

double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
    return euclid_dot(cross4(a, b, c), d);
}

Vec4 mul(const Mat4& m, const Vec4& x) {
    Vec4 y;
    for (int i = 0; i < 4; ++i) {
        double s = 0;
        for (int j = 0; j < 4; ++j) s += m[i][j] * x[j];
        y[i] = s;
    }
    return y;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

Mat4 identity4() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
    return m;
}

Mat4 boost_to_origin(const Vec4& p) {
    double g = p[0];
    double s2 = p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    Mat4 b = identity4();
    b[0][0] = g;
    for (int i = 1; i < 4; ++i) {
        b[0][i] = -p[i];
        b[i][0] = -p[i];
    }
    if (s2 > 0) {
        // (g - 1) n n^T written without dividing by |p_s| twice
        double k = (g - 1.0) / s2;
        for (int i = 1; i < 4; ++i)
            for (int j = 1; j < 4; ++j) b[i][j] += k * p[i] * p[j];
    }
    return b;
}

} // namespace hyp
