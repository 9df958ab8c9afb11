#include "hyp/kernel/plane.hpp"

#include <algorithm>
#include <cmath>

#include "hyp/kernel/errors.hpp"

namespace hyp {

Plane Plane::from_normal(const Vec4& n) {
    double n2 = mink_inner(n, n);
    if (!(n2 > 0)) throw DegenerateError("Plane: normal is not spacelike");
    return Plane(n * (1.0 / std::sqrt(n2)));
}

Plane Plane::through(const Vertex& a, const Vertex& b, const Vertex& c) {
    Vec4 va = vertex_vector(a), vb = vertex_vector(b), vc = vertex_vector(c);
    Vec4 n = eta(cross4(va, vb, vc));
    double scale = euclid_norm(va) * euclid_norm(vb) * euclid_norm(vc);
    double n2 = mink_inner(n, n);
    if (!(n2 > 1e-24 * scale * scale)) throw DegenerateError("Plane::through: collinear points");
    return Plane(n * (1.0 / std::sqrt(n2)));
}

bool Plane::contains(const Vertex& v, double tol) const {
    Vec4 x = vertex_vector(v);
    return std::abs(mink_inner(x, n_)) <= tol * euclid_norm(x);
}

double dihedral_external(const Plane& f1, const Plane& f2, CoOrientation co) {
    Vec4 n1 = co.flip_first ? -f1.normal() : f1.normal();
    Vec4 n2 = co.flip_second ? -f2.normal() : f2.normal();
    double c = mink_inner(n1, n2);
    if (std::abs(c) > 1.0 + 1e-12) throw DomainError("dihedral_external: planes are ultraparallel");
    c = std::clamp(c, -1.0, 1.0);
    double a = std::acos(c);
    return co.reflex ? -a : a;
}

} // namespace hyp
