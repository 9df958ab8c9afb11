#include "hyp/schlafli/schlafli.hpp"

#include <cmath>
#include <optional>
#include <utility>

#include "hyp/kernel/angles.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/volume/chain.hpp"

namespace hyp::schlafli {

SchlafliResult schlafli_from_samples(const std::function<std::vector<EdgeSample>(double)>& f, double t0,
                                     const harness::FdOptions& opt) {
    std::vector<EdgeSample> base = f(t0);
    auto angles = [&](double t) {
        std::vector<EdgeSample> s = t == t0 ? base : f(t);
        if (s.size() != base.size()) throw GeometryError("schlafli: edge set changed along the family");
        std::vector<double> a(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) a[i] = unwrap_near(s[i].angle, base[i].angle);
        return a;
    };
    auto rates = harness::fd_derivative_multi(angles, t0, opt);

    SchlafliResult r;
    volume::CompensatedSum sum;
    for (std::size_t i = 0; i < base.size(); ++i) {
        SchlafliTerm term{0, 0, base[i].length, base[i].angle, rates[i].value, rates[i].error};
        sum.add(term.term());
        r.max_fd_error = std::max(r.max_fd_error, rates[i].error);
        r.converged = r.converged && rates[i].converged;
        r.terms.push_back(term);
    }
    r.value = sum.value();
    return r;
}

SchlafliResult schlafli_terms(const harness::DeformationFamily<Polyhedron>& family, double t0,
                              const harness::FdOptions& opt) {
    Polyhedron p0 = family.at(t0);
    auto r = schlafli_from_samples(
        [&](double t) {
            auto d = edge_data(family.at(t));
            std::vector<EdgeSample> s;
            for (const auto& e : d) s.push_back({e.length, e.external_angle});
            return s;
        },
        t0, opt);
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        r.terms[i].a = p0.edges()[i].a;
        r.terms[i].b = p0.edges()[i].b;
    }
    return r;
}

double schlafli_derivative(const harness::DeformationFamily<Polyhedron>& family, double t0,
                           const harness::FdOptions& opt) {
    auto r = schlafli_terms(family, t0, opt);
    if (!r.converged) throw GeometryError("schlafli_derivative: angle differences do not converge");
    return r.value;
}

SchlafliResult corollary2_terms(const harness::DeformationFamily<PolyhedralSurfaceMap>& family, double t0,
                                const harness::FdOptions& opt) {
    PolyhedralSurfaceMap s0 = family.at(t0);
    auto r = schlafli_from_samples(
        [&](double t) {
            PolyhedralSurfaceMap s = family.at(t);
            auto ext = surface_external_angles(s);
            std::vector<EdgeSample> out;
            for (std::size_t i = 0; i < ext.size(); ++i) {
                const auto& e = s.edges()[i];
                out.push_back({distance(s.images()[e.a], s.images()[e.b]), ext[i]});
            }
            return out;
        },
        t0, opt);
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        r.terms[i].a = s0.edges()[i].a;
        r.terms[i].b = s0.edges()[i].b;
    }
    return r;
}

double corollary2_derivative(const harness::DeformationFamily<PolyhedralSurfaceMap>& family, double t0,
                             const harness::FdOptions& opt) {
    auto r = corollary2_terms(family, t0, opt);
    if (!r.converged) throw GeometryError("corollary2_derivative: angle differences do not converge");
    return r.value;
}

harness::DeformationFamily<Polyhedron> polyhedron_family(std::vector<VertexPath> paths,
                                                         std::vector<std::vector<std::size_t>> faces, double t_min,
                                                         double t_max) {
    return harness::DeformationFamily<Polyhedron>(
        [paths = std::move(paths), faces = std::move(faces)](double t) {
            std::vector<Point> v;
            for (const auto& p : paths) v.push_back(p.at(t));
            return Polyhedron(std::move(v), faces);
        },
        t_min, t_max, 3);
}

harness::DeformationFamily<PolyhedralSurfaceMap> surface_family(std::vector<VertexPath> paths,
                                                                std::vector<PolyhedralSurfaceMap::Tri> triangles,
                                                                double t_min, double t_max,
                                                                const VertexPath* apex_path) {
    std::optional<VertexPath> apex;
    if (apex_path) apex = *apex_path;
    return harness::DeformationFamily<PolyhedralSurfaceMap>(
        [paths = std::move(paths), tris = std::move(triangles), apex](double t) {
            std::vector<Point> v;
            Vec4 m;
            for (const auto& p : paths) {
                v.push_back(p.at(t));
                m += v.back().coords();
            }
            Point ap = apex ? apex->at(t) : Point::from_coords(m);
            volume::SimplicialChain c;
            std::size_t a = c.add_vertex(ap);
            std::vector<std::size_t> idx;
            for (const auto& p : v) idx.push_back(c.add_vertex(p));
            for (const auto& tr : tris) c.add_simplex({a, idx[tr[0]], idx[tr[1]], idx[tr[2]]}, 1);
            return PolyhedralSurfaceMap(std::move(v), tris, std::move(c));
        },
        t_min, t_max, 3);
}

} // namespace hyp::schlafli
