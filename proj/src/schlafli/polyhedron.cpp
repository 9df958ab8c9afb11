#include "hyp/schlafli/polyhedron.hpp"

#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "hyp/kernel/angles.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/kernel/plane.hpp"

namespace hyp::schlafli {

std::vector<PolyEdge> derive_edges(const std::vector<std::vector<std::size_t>>& faces, std::size_t vertex_count) {
    // directed edge -> (face, position of its start)
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> dir;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& F = faces[f];
        if (F.size() < 3) throw GeometryError("face with fewer than three vertices");
        std::set<std::size_t> seen(F.begin(), F.end());
        if (seen.size() != F.size()) throw GeometryError("repeated vertex in a face");
        for (std::size_t i = 0; i < F.size(); ++i) {
            if (F[i] >= vertex_count) throw GeometryError("vertex index out of range");
            auto key = std::make_pair(F[i], F[(i + 1) % F.size()]);
            if (!dir.emplace(key, std::make_pair(f, i)).second)
                throw GeometryError("directed edge used twice (inconsistent orientation)");
        }
    }
    std::vector<PolyEdge> edges;
    for (const auto& [key, fi] : dir) {
        auto it = dir.find({key.second, key.first});
        if (it == dir.end()) throw GeometryError("edge with a single adjacent face");
        if (key.first > key.second) continue;
        const auto& L = faces[fi.first];
        const auto& R = faces[it->second.first];
        edges.push_back({key.first, key.second, fi.first, it->second.first, L[(fi.second + 2) % L.size()],
                         R[(it->second.second + 2) % R.size()]});
    }
    return edges;
}

Polyhedron::Polyhedron(std::vector<Point> vertices, std::vector<std::vector<std::size_t>> faces,
                       double planarity_tol)
    : verts_(std::move(vertices)), faces_(std::move(faces)) {
    if (faces_.size() < 4) throw GeometryError("Polyhedron: fewer than four faces");
    edges_ = derive_edges(faces_, verts_.size());
    for (const auto& F : faces_) {
        // planar and convex
        Plane pl = Plane::through(verts_[F[0]], verts_[F[1]], verts_[F[2]]);
        for (std::size_t i = 3; i < F.size(); ++i)
            if (std::abs(pl.offset(verts_[F[i]])) > planarity_tol)
                throw DegenerateError("Polyhedron: non-planar face");
        for (std::size_t i = 0; i < F.size(); ++i) {
            const Vec4& u = verts_[F[i]].coords();
            const Vec4& v = verts_[F[(i + 1) % F.size()]].coords();
            const Vec4& w = verts_[F[(i + 2) % F.size()]].coords();
            double s = det4(u, v, w, eta(pl.normal()));
            double scale = euclid_norm(u) * euclid_norm(v) * euclid_norm(w);
            if (!(s > 1e-12 * scale)) throw DegenerateError("Polyhedron: face not strictly convex");
        }
    }
}

int Polyhedron::euler_characteristic() const {
    std::set<std::size_t> used;
    for (const auto& f : faces_) used.insert(f.begin(), f.end());
    return static_cast<int>(used.size()) - static_cast<int>(edges_.size()) + static_cast<int>(faces_.size());
}

std::vector<EdgeDatum> edge_data(const Polyhedron& p) {
    const auto& V = p.vertices();
    std::vector<EdgeDatum> out;
    out.reserve(p.edges().size());
    for (const auto& e : p.edges()) {
        double len = distance(V[e.a], V[e.b]);
        double ext = oriented_external_angle(V[e.a], V[e.b], V[e.c], V[e.d]);
        out.push_back({e, len, ext});
    }
    return out;
}

volume::SimplicialChain triangulate(const Polyhedron& p) {
    const auto& V = p.vertices();
    Vec4 m;
    for (const auto& v : V) m += v.coords();
    Point apex = Point::from_coords(m);
    volume::SimplicialChain c;
    std::size_t ap = c.add_vertex(apex);
    std::vector<std::size_t> idx;
    for (const auto& v : V) idx.push_back(c.add_vertex(v));
    for (const auto& f : p.faces())
        for (std::size_t i = 1; i + 1 < f.size(); ++i) c.add_simplex({ap, idx[f[0]], idx[f[i]], idx[f[i + 1]]}, 1);
    return c;
}

Point VertexPath::at(double t) const {
    double x[3];
    for (int k = 0; k < 3; ++k) x[k] = coef[0][k] + t * (coef[1][k] + t * (coef[2][k] + t * coef[3][k]));
    return Point::from_spatial(x[0], x[1], x[2]);
}

VertexPath VertexPath::constant(const Point& p) {
    VertexPath v;
    v.coef[0] = {p[1], p[2], p[3]};
    return v;
}

} // namespace hyp::schlafli
