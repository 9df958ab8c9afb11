#include "hyp/pleated/prism.hpp"

#include <cmath>
#include <numbers>

#include "hyp/kernel/angles.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/schlafli/schlafli.hpp"

namespace hyp::pleated {

namespace {

constexpr double pi = std::numbers::pi;

using Faces = std::vector<std::vector<std::size_t>>;
// local vertex order p, q, s, r, y
const Faces kPyramidFaces{{0, 1, 2, 3}, {4, 2, 1}, {4, 3, 2}, {4, 0, 3}, {4, 1, 0}};
// local vertex order x, p, q, y
const Faces kTetFaces{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

std::string pyramid_label(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (a == 0 && b == 1) return "pyramid_pq";
    if (a == 2 && b == 3) return "pyramid_rs";
    if (b == 4) return (a <= 1) ? "pyramid_apex_pq" : "pyramid_apex_rs";
    return "pyramid_sides";  // p r and q s
}

std::string tet_label(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (a == 1 && b == 2) return "tet_pq";
    if (a == 0 && b == 3) return "tet_xy";
    if (a == 0) return "tet_x_apex";
    return "tet_y_apex";
}

struct PieceEdge {
    std::string label;
    std::size_t gap;
    bool pyramid;
    std::size_t a, b;  // local indices
};

// Lengths and external angles of every piece edge, in a fixed order.
std::vector<schlafli::EdgeSample> piece_samples(const PrismDecomposition& d, std::vector<PieceEdge>* labels) {
    std::vector<schlafli::EdgeSample> out;
    for (std::size_t k = 0; k < d.gaps(); ++k) {
        const auto& R = d.rect;
        schlafli::Polyhedron P({R.p(k), R.q(k), R.s(k), R.r(k), d.y}, kPyramidFaces);
        for (const auto& e : schlafli::edge_data(P)) {
            out.push_back({e.length, e.external_angle});
            if (labels) labels->push_back({pyramid_label(e.edge.a, e.edge.b), k, true, e.edge.a, e.edge.b});
        }
        schlafli::Polyhedron T({d.x, R.p(k), R.q(k), d.y}, kTetFaces);
        for (const auto& e : schlafli::edge_data(T)) {
            out.push_back({e.length, e.external_angle});
            if (labels) labels->push_back({tet_label(e.edge.a, e.edge.b), k, false, e.edge.a, e.edge.b});
        }
    }
    return out;
}

// FD of angle vectors with each component unwrapped toward its t0 value.
std::vector<harness::FdResult> angle_rates(const std::function<std::vector<double>(double)>& f, double t0,
                                           const harness::FdOptions& opt, std::vector<double>* base_out) {
    std::vector<double> base = f(t0);
    if (base_out) *base_out = base;
    return harness::fd_derivative_multi(
        [&](double t) {
            std::vector<double> a = t == t0 ? base : f(t);
            if (a.size() != base.size()) throw GeometryError("angle vector changed size along the family");
            for (std::size_t i = 0; i < a.size(); ++i) a[i] = unwrap_near(a[i], base[i]);
            return a;
        },
        t0, opt);
}

} // namespace

volume::SimplicialChain PrismDecomposition::pyramids(bool alternate) const {
    volume::SimplicialChain c;
    auto verts = surface_vertices();
    for (const auto& v : verts) c.add_vertex(v);
    const std::size_t m = rect.bottom().size(), Y = 2 * m + 1;
    for (std::size_t k = 0; k < gaps(); ++k) {
        std::size_t p = k, q = k + 1, r = m + k, s = m + k + 1;
        if (!alternate) {
            c.add_simplex({Y, p, q, s});
            c.add_simplex({Y, p, s, r});
        } else {
            c.add_simplex({Y, p, q, r});
            c.add_simplex({Y, q, s, r});
        }
    }
    return c;
}

volume::SimplicialChain PrismDecomposition::tetrahedra() const {
    volume::SimplicialChain c;
    for (const auto& v : surface_vertices()) c.add_vertex(v);
    const std::size_t m = rect.bottom().size(), X = 2 * m, Y = 2 * m + 1;
    for (std::size_t k = 0; k < gaps(); ++k) c.add_simplex({X, k, k + 1, Y});
    return c;
}

volume::SimplicialChain PrismDecomposition::chain(bool alternate) const {
    volume::SimplicialChain c = pyramids(alternate);
    c.append(tetrahedra());
    return c;
}

std::vector<Point> PrismDecomposition::surface_vertices() const {
    std::vector<Point> v = rect.bottom();
    v.insert(v.end(), rect.top().begin(), rect.top().end());
    v.push_back(x);
    v.push_back(y);
    return v;
}

std::vector<std::vector<std::size_t>> PrismDecomposition::surface_faces() const {
    const std::size_t m = rect.bottom().size(), n1 = m - 1, X = 2 * m, Y = 2 * m + 1;
    Faces f;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        f.push_back({k, k + 1, m + k + 1, m + k});
        f.push_back({Y, m + k, m + k + 1});
        f.push_back({X, k + 1, k});
    }
    f.push_back({Y, 0, m});
    f.push_back({Y, m + n1, n1});
    f.push_back({X, 0, Y});
    f.push_back({X, Y, n1});
    return f;
}

PrismDecomposition prism_decompose(const PleatedRectangle& r, const Point& x, const Point& y, double min_distance) {
    fan_build(y, r, Side::bottom, min_distance);
    for (std::size_t j = 0; j < r.bottom().size(); ++j)
        if (r.leaf_geodesic(j).distance_to(x) < min_distance)
            throw DomainError("apex x too close to leaf " + std::to_string(j));
    PrismDecomposition d{r, x, y, {}};
    for (bool alt : {false, true}) {
        auto c = d.chain(alt);
        for (const auto& s : c.simplices()) {
            const auto& V = c.vertices();
            if (orientation_sign(V[s.v[0]], V[s.v[1]], V[s.v[2]], V[s.v[3]]) == 0)
                throw DegenerateError("prism decomposition has a flat piece; choose the apexes in general position");
        }
    }
    return d;
}

GroupedTerms grouped_term_sums(const harness::DeformationFamily<PrismDecomposition>& family, double t0,
                               const harness::FdOptions& opt) {
    std::vector<PieceEdge> labels;
    piece_samples(family.at(t0), &labels);
    auto res = schlafli::schlafli_from_samples([&](double t) { return piece_samples(family.at(t), nullptr); }, t0, opt);

    GroupedTerms g;
    for (const char* key : {"pyramid_pq", "pyramid_rs", "pyramid_apex_pq", "pyramid_apex_rs", "pyramid_sides", "tet_pq", "tet_xy", "tet_x_apex", "tet_y_apex"}) g.sums[key] = 0.0;
    std::map<std::string, volume::CompensatedSum> acc;
    volume::CompensatedSum total;
    std::size_t gaps = family.at(t0).gaps();
    g.apex_pair_terms.assign(gaps, 0.0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        double term = res.terms[i].term();
        acc[labels[i].label].add(term);
        total.add(term);
        if (labels[i].pyramid && labels[i].label == "pyramid_apex_pq") g.apex_pair_terms[labels[i].gap] += 2.0 * term;
    }
    for (auto& [k, s] : acc) g.sums[k] = s.value();
    g.total = total.value();
    g.max_fd_error = res.max_fd_error;
    g.converged = res.converged;
    return g;
}

FanIdentityReport fan_identity_check(const harness::DeformationFamily<PrismDecomposition>& family, double t0,
                                     const harness::FdOptions& opt) {
    const PrismDecomposition d0 = family.at(t0);
    const std::size_t G = d0.gaps(), n = G - 1;
    FanIdentityReport rep;

    // exact identities at t0
    {
        const auto& R = d0.rect;
        double lhs = pi - oriented_external_angle(d0.x, d0.y, R.q(n), R.p(0));
        double rhs = 0;
        for (std::size_t k = 0; k < G; ++k) rhs += pi - oriented_external_angle(d0.x, d0.y, R.q(k), R.p(k));
        rep.angle_telescope_residual = schlafli::mod_two_pi_distance(lhs - rhs);
        for (std::size_t k = 0; k < G; ++k) {
            double tel = distance(R.q(n), d0.y);
            for (std::size_t k2 = k + 1; k2 < G; ++k2) tel += distance(R.p(k2), d0.y) - distance(R.q(k2), d0.y);
            rep.length_telescope_residual = std::max(rep.length_telescope_residual, std::abs(distance(R.q(k), d0.y) - tel));
        }
    }

    // layout of the sampled angle vector
    const std::size_t iFan = 0, iPp = n, iPq = iPp + G, iTp = iPq + G, iTq = iTp + G, iH = iTq + G, iArc = iH + 2;
    auto sample = [&](double t) {
        PrismDecomposition d = family.at(t);
        const auto& R = d.rect;
        std::vector<double> a;
        PleatedFan fan = fan_build(d.y, R, Side::bottom, 0.0);
        for (std::size_t j = 1; j <= n; ++j) a.push_back(fan.bending(j));
        for (std::size_t k = 0; k < G; ++k) a.push_back(pyramid_angle_py(R, k, d.y));
        for (std::size_t k = 0; k < G; ++k) a.push_back(pyramid_angle_qy(R, k, d.y));
        for (std::size_t k = 0; k < G; ++k) a.push_back(oriented_external_angle(d.y, R.p(k), R.q(k), d.x));
        for (std::size_t k = 0; k < G; ++k) a.push_back(oriented_external_angle(d.y, R.q(k), d.x, R.p(k)));
        a.push_back(oriented_external_angle(d.y, R.p(0), R.r(0), d.x));
        a.push_back(oriented_external_angle(d.y, R.q(n), d.x, R.s(n)));
        for (std::size_t k = 0; k < G; ++k) a.push_back(bending_cocycle_eval(R, std::size_t{0}, k, d.y));
        return a;
    };
    auto rate = angle_rates(sample, t0, opt, nullptr);
    auto dot = [&](std::size_t i) { return rate[i].value; };

    const auto& R = d0.rect;
    std::vector<double> lp(G), lq(G);
    for (std::size_t k = 0; k < G; ++k) {
        lp[k] = distance(R.p(k), d0.y);
        lq[k] = distance(R.q(k), d0.y);
    }
    volume::CompensatedSum leaf, dist, pyr, apex_lhs, apex_rhs;
    for (std::size_t j = 1; j <= n; ++j) leaf.add(dot(iFan + j - 1) * lp[j]);
    for (std::size_t k = 0; k < G; ++k) dist.add(dot(iArc + k) * (lp[k] - lq[k]));
    dist.add(dot(iArc + n) * lq[n]);
    for (std::size_t k = 0; k < G; ++k) {
        pyr.add(lp[k] * dot(iPp + k));
        pyr.add(lq[k] * dot(iPq + k));
        apex_lhs.add(0.5 * lp[k] * (dot(iPp + k) + dot(iTp + k)));
        apex_lhs.add(0.5 * lq[k] * (dot(iPq + k) + dot(iTq + k)));
    }
    pyr.add(-lp[0] * dot(iPp));
    pyr.add(-lq[n] * dot(iPq + n));
    apex_rhs.add(0.5 * lp[0] * dot(iH));
    apex_rhs.add(0.5 * lq[n] * dot(iH + 1));

    rep.leaf_sum = leaf.value();
    rep.distribution = dist.value();
    rep.pyramid_form = pyr.value();
    rep.fan_length_residual = std::max({std::abs(rep.leaf_sum - rep.distribution), std::abs(rep.leaf_sum - rep.pyramid_form),
                                  std::abs(rep.distribution - rep.pyramid_form)});
    rep.apex_pair_lhs = apex_lhs.value();
    rep.apex_pair_rhs = apex_rhs.value();
    rep.apex_pair_residual = std::abs(rep.apex_pair_lhs - rep.apex_pair_rhs);
    return rep;
}

double theta_sum(const Point& p, const Point& q, const Vertex& x, const Point& y, const ThetaOptions& opt) {
    if (distance(y, p) > opt.max_distance || distance(p, q) > opt.max_distance)
        throw DomainError("theta_sum: points farther apart than the configured bound");
    if (geodesic_through(p, x).distance_to(y) < opt.min_distance ||
        geodesic_through(q, x).distance_to(y) < opt.min_distance)
        throw DomainError("theta_sum: y too close to the geodesics through x");
    const Vec4& Y = y.coords();
    Vec4 vp = tangent_toward(y, p), vq = tangent_toward(y, q), vx = tangent_toward(y, x);
    // area of the spherical triangle (Van Oosterom - Strackee)
    double num = std::abs(det4(Y, vx, vp, vq));
    double den = 1.0 + mink_inner(vx, vp) + mink_inner(vp, vq) + mink_inner(vq, vx);
    double area = 2.0 * std::atan2(num, den);
    Vec4 u = vp - mink_inner(vp, vx) * vx, w = vq - mink_inner(vq, vx) * vx;
    double angle_x = std::atan2(std::abs(det4(Y, vx, u, w)), mink_inner(u, w));
    return pi + area - angle_x;
}

double theta_sum_direct(const Point& p, const Point& q, const Vertex& x, const Point& y) {
    return internal_dihedral(p, y, q, x) + internal_dihedral(q, y, p, x);
}

} // namespace hyp::pleated
