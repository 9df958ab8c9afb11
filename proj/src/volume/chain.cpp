#include "hyp/volume/chain.hpp"

#include <algorithm>
#include <cmath>

#include "hyp/kernel/errors.hpp"

namespace hyp::volume {

using nlohmann::json;

namespace {

std::array<double, 5> vertex_key(const Vertex& v) {
    if (auto p = std::get_if<Point>(&v)) return {0, (*p)[0], (*p)[1], (*p)[2], (*p)[3]};
    const auto& z = std::get<IdealPoint>(v);
    if (z.is_infinity()) return {2, 0, 0, 0, 0};
    return {1, z.value().real(), z.value().imag(), 0, 0};
}

} // namespace

std::size_t SimplicialChain::add_vertex(const Vertex& v) {
    auto key = vertex_key(v);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (vertex_key(verts_[i]) == key) return i;
    verts_.push_back(v);
    return verts_.size() - 1;
}

void SimplicialChain::add_simplex(std::array<std::size_t, 4> v, int sign) {
    for (auto i : v)
        if (i >= verts_.size()) throw DomainError("SimplicialChain: vertex index out of range");
    if (sign != 1 && sign != -1) throw DomainError("SimplicialChain: sign must be +-1");
    simps_.push_back({v, sign});
}

void SimplicialChain::add(const Tetrahedron& t) {
    std::array<std::size_t, 4> idx;
    for (int i = 0; i < 4; ++i) idx[i] = add_vertex(t.vertices[i]);
    add_simplex(idx, t.sign);
}

Tetrahedron SimplicialChain::tetrahedron(std::size_t i) const {
    const Simplex& s = simps_.at(i);
    return {{verts_[s.v[0]], verts_[s.v[1]], verts_[s.v[2]], verts_[s.v[3]]}, s.sign};
}

int canonical_face(SimplicialChain::Face& f) {
    int parity = 1;
    // three-element bubble sort, counting swaps
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < 2; ++i)
            if (f[i] > f[i + 1]) {
                std::swap(f[i], f[i + 1]);
                parity = -parity;
            }
    return parity;
}

std::map<SimplicialChain::Face, int> SimplicialChain::boundary() const {
    std::map<Face, int> out;
    for (const auto& s : simps_) {
        // d[v0 v1 v2 v3] = [v1 v2 v3] - [v0 v2 v3] + [v0 v1 v3] - [v0 v1 v2]
        for (int k = 0; k < 4; ++k) {
            Face f;
            int j = 0;
            for (int i = 0; i < 4; ++i)
                if (i != k) f[j++] = s.v[i];
            int coeff = s.sign * (k % 2 == 0 ? 1 : -1) * canonical_face(f);
            out[f] += coeff;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

SimplicialChain SimplicialChain::reversed() const {
    SimplicialChain r = *this;
    for (auto& s : r.simps_) s.sign = -s.sign;
    return r;
}

SimplicialChain& SimplicialChain::append(const SimplicialChain& other) {
    for (const auto& s : other.simps_) {
        std::array<std::size_t, 4> idx;
        for (int i = 0; i < 4; ++i) idx[i] = add_vertex(other.verts_[s.v[i]]);
        simps_.push_back({idx, s.sign});
    }
    return *this;
}

void CompensatedSum::add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

double chain_volume(const SimplicialChain& c) {
    // terms are summed in a fixed order so results do not depend on scheduling
    CompensatedSum s;
    for (std::size_t i = 0; i < c.size(); ++i) s.add(tet_volume_signed(c.tetrahedron(i)));
    return s.value();
}

json vertex_to_json(const Vertex& v) {
    if (auto p = std::get_if<Point>(&v)) return json::array({(*p)[0], (*p)[1], (*p)[2], (*p)[3]});
    const auto& z = std::get<IdealPoint>(v);
    if (z.is_infinity()) return json{{"ideal", "inf"}};
    return json{{"ideal", json::array({z.value().real(), z.value().imag()})}};
}

Vertex vertex_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 4) throw DomainError("vertex: expected 4 hyperboloid coordinates");
        return Point::from_coords(Vec4(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()));
    }
    if (j.is_object() && j.contains("ideal")) {
        const json& z = j.at("ideal");
        if (z.is_string()) {
            if (z.get<std::string>() != "inf") throw DomainError("vertex: unknown ideal tag");
            return IdealPoint::infinity();
        }
        return IdealPoint(cplx(z.at(0).get<double>(), z.at(1).get<double>()));
    }
    throw DomainError("vertex: unrecognized JSON form");
}

json chain_to_json(const SimplicialChain& c) {
    json simplices = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
        Tetrahedron t = c.tetrahedron(i);
        json vs = json::array();
        for (const auto& v : t.vertices) vs.push_back(vertex_to_json(v));
        simplices.push_back(json{{"vertices", vs}, {"sign", t.sign}});
    }
    json out{{"simplices", simplices}};
    if (!c.label.empty()) out["label"] = c.label;
    return out;
}

SimplicialChain chain_from_json(const json& j) {
    SimplicialChain c;
    if (j.contains("label")) c.label = j.at("label").get<std::string>();
    for (const auto& s : j.at("simplices")) {
        const json& vs = s.at("vertices");
        if (vs.size() != 4) throw DomainError("chain: simplex needs 4 vertices");
        Tetrahedron t{{vertex_from_json(vs[0]), vertex_from_json(vs[1]), vertex_from_json(vs[2]), vertex_from_json(vs[3])},
                      s.value("sign", 1)};
        c.add(t);
    }
    return c;
}

} // namespace hyp::volume
