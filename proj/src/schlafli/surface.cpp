#include "hyp/schlafli/surface.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "hyp/kernel/angles.hpp"
#include "hyp/kernel/errors.hpp"

namespace hyp::schlafli {

using volume::SimplicialChain;

namespace {

std::size_t find_vertex(const SimplicialChain& c, const Point& p) {
    const auto& V = c.vertices();
    for (std::size_t i = 0; i < V.size(); ++i) {
        if (is_ideal(V[i])) continue;
        Vec4 d = vertex_vector(V[i]) - p.coords();
        if (euclid_norm(d) <= 1e-12 * euclid_norm(p.coords())) return i;
    }
    throw GeometryError("PolyhedralSurfaceMap: surface vertex missing from the bounding chain");
}

} // namespace

double mod_two_pi_distance(double x) {
    const double tau = 2 * std::numbers::pi;
    return std::abs(x - tau * std::round(x / tau));
}

PolyhedralSurfaceMap::PolyhedralSurfaceMap(std::vector<Point> images, std::vector<Tri> triangles,
                                           SimplicialChain chain)
    : images_(std::move(images)), tris_(std::move(triangles)), chain_(std::move(chain)) {
    if (tris_.empty()) throw GeometryError("PolyhedralSurfaceMap: no triangles");
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> third;
    for (const auto& t : tris_) {
        for (int i = 0; i < 3; ++i) {
            if (t[i] >= images_.size()) throw GeometryError("PolyhedralSurfaceMap: vertex index out of range");
            if (t[i] == t[(i + 1) % 3]) throw GeometryError("PolyhedralSurfaceMap: degenerate triangle");
            if (!third.emplace(std::make_pair(t[i], t[(i + 1) % 3]), t[(i + 2) % 3]).second)
                throw GeometryError("PolyhedralSurfaceMap: directed edge used twice");
        }
    }
    for (const auto& [key, c] : third) {
        auto it = third.find({key.second, key.first});
        if (it == third.end()) throw GeometryError("PolyhedralSurfaceMap: surface is not closed");
        if (key.first < key.second) edges_.push_back({key.first, key.second, c, it->second});
    }

    to_chain_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) to_chain_[i] = find_vertex(chain_, images_[i]);

    std::map<SimplicialChain::Face, int> cycle;
    for (const auto& t : tris_) {
        SimplicialChain::Face f{to_chain_[t[0]], to_chain_[t[1]], to_chain_[t[2]]};
        int s = volume::canonical_face(f);
        if ((cycle[f] += s) == 0) cycle.erase(f);
    }
    if (cycle != chain_.boundary())
        throw GeometryError("PolyhedralSurfaceMap: chain boundary does not match the surface (unmatched boundary faces)");
}

PolyhedralSurfaceMap surface_of(const Polyhedron& p) {
    std::vector<PolyhedralSurfaceMap::Tri> tris;
    for (const auto& f : p.faces())
        for (std::size_t i = 1; i + 1 < f.size(); ++i) tris.push_back({f[0], f[i], f[i + 1]});
    return PolyhedralSurfaceMap(p.vertices(), std::move(tris), triangulate(p));
}

PolyhedralSurfaceMap recone(const PolyhedralSurfaceMap& s, const Point& apex) {
    SimplicialChain c;
    std::size_t ap = c.add_vertex(apex);
    std::vector<std::size_t> idx;
    for (const auto& v : s.images()) idx.push_back(c.add_vertex(v));
    for (const auto& t : s.triangles()) c.add_simplex({ap, idx[t[0]], idx[t[1]], idx[t[2]]}, 1);
    return PolyhedralSurfaceMap(s.images(), s.triangles(), std::move(c));
}

std::vector<double> surface_external_angles(const PolyhedralSurfaceMap& s) {
    const auto& V = s.images();
    std::vector<double> out;
    for (const auto& e : s.edges()) out.push_back(oriented_external_angle(V[e.a], V[e.b], V[e.c], V[e.d]));
    return out;
}

EdgeCheckReport internal_edge_check(const SimplicialChain& chain, const PolyhedralSurfaceMap& surface) {
    const double pi = std::numbers::pi;
    // validates the boundary against this chain's own vertex table
    PolyhedralSurfaceMap probe(surface.images(), surface.triangles(), chain);

    std::map<std::pair<std::size_t, std::size_t>, double> surface_angle;
    {
        auto ext = surface_external_angles(surface);
        for (std::size_t k = 0; k < surface.edges().size(); ++k) {
            const auto& e = surface.edges()[k];
            std::size_t a = probe.chain_index(e.a), b = probe.chain_index(e.b);
            surface_angle[{std::min(a, b), std::max(a, b)}] = ext[k];
        }
    }

    struct Acc {
        volume::CompensatedSum internal, literal;
        int incidence = 0, net = 0;
    };
    std::map<std::pair<std::size_t, std::size_t>, Acc> acc;
    EdgeCheckReport rep;
    const auto& V = chain.vertices();
    static constexpr int opp[6][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}, {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}};
    for (const auto& s : chain.simplices()) {
        int o = orientation_sign(V[s.v[0]], V[s.v[1]], V[s.v[2]], V[s.v[3]]);
        if (o == 0) {
            ++rep.degenerate_simplices;
            continue;
        }
        int w = o * s.sign;
        for (const auto& q : opp) {
            std::size_t i = s.v[q[0]], j = s.v[q[1]];
            double alpha = internal_dihedral(V[i], V[j], V[s.v[q[2]]], V[s.v[q[3]]]);
            Acc& A = acc[{std::min(i, j), std::max(i, j)}];
            A.internal.add(w * alpha);
            A.literal.add(w * (pi - alpha));
            A.incidence += 1;
            A.net += w;
        }
    }
    for (auto& [key, A] : acc) {
        EdgeCheckEntry e{key.first, key.second, false, A.incidence, A.net, A.internal.value(), A.literal.value(), 0, 0};
        auto it = surface_angle.find(key);
        if (it != surface_angle.end()) {
            e.on_surface = true;
            e.residual = mod_two_pi_distance(e.internal_sum - (pi - it->second));
            e.literal_residual = mod_two_pi_distance(e.literal_sum - it->second);
            rep.max_boundary_deviation = std::max(rep.max_boundary_deviation, e.residual);
            rep.max_literal_boundary_deviation = std::max(rep.max_literal_boundary_deviation, e.literal_residual);
        } else {
            e.residual = mod_two_pi_distance(e.internal_sum);
            e.literal_residual = mod_two_pi_distance(e.literal_sum);
            rep.max_interior_deviation = std::max(rep.max_interior_deviation, e.residual);
            rep.max_literal_interior_deviation = std::max(rep.max_literal_interior_deviation, e.literal_residual);
        }
        rep.edges.push_back(e);
    }
    // a surface edge that no simplex touches can only close up if it is flat
    for (const auto& [key, b] : surface_angle)
        if (!acc.count(key)) {
            double r = mod_two_pi_distance(b);
            rep.edges.push_back({key.first, key.second, true, 0, 0, 0.0, 0.0, mod_two_pi_distance(pi - b), r});
            rep.max_boundary_deviation = std::max(rep.max_boundary_deviation, mod_two_pi_distance(pi - b));
        }
    return rep;
}

} // namespace hyp::schlafli
