#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyp/harness/family.hpp"
#include "hyp/pleated/prism.hpp"
#include "hyp/schlafli/polyhedron.hpp"

namespace hyp::pleated {

// Finite pleating scenario: chart, polynomial bend paths per leaf and the two
// prism apexes at t = 0.
struct PleatScenario {
    std::string id = "pleat";
    ChartRectangle chart;
    std::vector<std::vector<double>> bend_coeffs;  // leaf j: sum_i c_i t^i
    Point x, y;
    // true: every edge angle of the prism boundary other than the leaves is
    // held at its t = 0 value and the vertices are solved for; false: pure
    // bending with x, y fixed
    bool closure = true;
    double t0 = 0.0, h = 1e-4, tol = 1e-6, t_max = 0.2;
    unsigned long long seed = 0;

    double bend(std::size_t leaf, double t) const;  // leaf in 0..n-1
    std::vector<double> bends(double t) const;
    int degree() const;
};

nlohmann::json scenario_to_json(const PleatScenario& s);
PleatScenario scenario_from_json(const nlohmann::json& j);

struct ClosureOptions {
    double max_step = 0.02;   // continuation step in t
    double tol = 1e-12;       // max residual (radians / normalized determinant)
    double jac_step = 1e-7;   // central-difference Jacobian step
    int max_iter = 60;
};

// Vertex configurations of the prism boundary with prescribed leaf angles and
// all other edge angles locked, followed by continuation from t = 0.
// Thread safe; solutions at grid points are cached.
class AngleLockedSolver {
public:
    AngleLockedSolver(const PleatScenario& s, const ClosureOptions& opt = {});

    PrismDecomposition solve(double t) const;
    // residual vector (angles, then quad planarity) of a decomposition at t
    std::vector<double> residual(const PrismDecomposition& d, double t) const;
    std::size_t unknowns() const { return 3 * nv_; }
    std::size_t equations() const;
    // numerical rank of the residual Jacobian at t = 0 (relative threshold 1e-9)
    int jacobian_rank() const;
    // singular values of the residual Jacobian at t = 0, descending
    std::vector<double> jacobian_singular_values() const;

private:
    std::vector<double> residual_of(const std::vector<double>& z, double t) const;
    std::vector<double> newton(std::vector<double> z, double t) const;
    std::vector<double> grid_solution(int k) const;
    PrismDecomposition assemble(const std::vector<double>& z) const;

    PleatScenario sc_;
    ClosureOptions opt_;
    std::size_t nv_ = 0, m_ = 0;
    std::vector<std::vector<std::size_t>> faces_;
    std::vector<schlafli::PolyEdge> edges_;
    std::vector<int> leaf_of_edge_;  // leaf index 0..n-1 or -1
    std::vector<double> locked_;     // t = 0 angles
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<double>> cache_;
};

// Closure: solved configurations on [0, t_max]. Otherwise pure bending on
// [-t_max, t_max] with x and y fixed.
harness::DeformationFamily<PrismDecomposition> pleat_family(const PleatScenario& s, const ClosureOptions& opt = {});

} // namespace hyp::pleated
