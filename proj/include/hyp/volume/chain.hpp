#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyp/volume/tetrahedron.hpp"

namespace hyp::volume {

// Signed 3-chain over a shared vertex table.
class SimplicialChain {
public:
    struct Simplex {
        std::array<std::size_t, 4> v;
        int sign = 1;
    };
    using Face = std::array<std::size_t, 3>;

    std::string label;

    // Exact-coordinate deduplication keeps shared faces shared.
    std::size_t add_vertex(const Vertex& v);
    void add_simplex(std::array<std::size_t, 4> v, int sign = 1);
    void add(const Tetrahedron& t);

    const std::vector<Vertex>& vertices() const { return verts_; }
    const std::vector<Simplex>& simplices() const { return simps_; }
    std::size_t size() const { return simps_.size(); }
    bool empty() const { return simps_.empty(); }
    Tetrahedron tetrahedron(std::size_t i) const;

    // Faces with sorted indices and their nonzero coefficients.
    std::map<Face, int> boundary() const;

    SimplicialChain reversed() const;
    SimplicialChain& append(const SimplicialChain& other);

private:
    std::vector<Vertex> verts_;
    std::vector<Simplex> simps_;
};

double chain_volume(const SimplicialChain& c);

// Neumaier-compensated sum, used wherever many signed terms are added.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
};

// Sorts the face and returns the permutation parity (+1 / -1).
int canonical_face(SimplicialChain::Face& f);

nlohmann::json vertex_to_json(const Vertex& v);
Vertex vertex_from_json(const nlohmann::json& j);
nlohmann::json chain_to_json(const SimplicialChain& c);
SimplicialChain chain_from_json(const nlohmann::json& j);

} // namespace hyp::volume
