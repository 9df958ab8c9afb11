#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hyp/harness/family.hpp"
#include "hyp/harness/finite_difference.hpp"
#include "hyp/pleated/rectangle.hpp"
#include "hyp/volume/chain.hpp"

namespace hyp::pleated {

// Per gap k: pyramid P_k over panel (p, q, s, r) with apex y, split as
// [y,p,q,s] + [y,p,s,r], and tetrahedron T_k = [x,p,q,y]. Along the shared
// triangle p q y the two boundary orientations are opposite. The whole chain
// bounds the closed surface of surface_faces().
struct PrismDecomposition {
    PleatedRectangle rect;
    Point x, y;
    std::vector<int> divergence_radii;  // per gap, empty when unknown

    std::size_t gaps() const { return rect.gap_count(); }

    // alternate: split each pyramid along the other diagonal, [y,p,q,r] + [y,q,s,r]
    volume::SimplicialChain chain(bool alternate = false) const;
    volume::SimplicialChain pyramids(bool alternate = false) const;
    volume::SimplicialChain tetrahedra() const;

    // Vertex layout p_0..p_{n+1}, r_0..r_{n+1}, x, y and the oriented faces
    // of the boundary: panels, top fan (y, r_k, r_{k+1}), bottom fan
    // (x, p_{k+1}, p_k) and four side triangles.
    std::vector<Point> surface_vertices() const;
    std::vector<std::vector<std::size_t>> surface_faces() const;
};

// Throws DomainError / DegenerateError for apex positions the decomposition
// cannot use (too close to a leaf, on a panel plane, flat pieces).
PrismDecomposition prism_decompose(const PleatedRectangle& r, const Point& x, const Point& y,
                                   double min_distance = 1e-3);

struct GroupedTerms {
    // pyramid_pq, pyramid_rs, pyramid_apex_pq (py+qy), pyramid_apex_rs (ry+sy),
    // pyramid_sides (pr+sq); tet_pq, tet_xy, tet_x_apex (px+qx), tet_y_apex (py+qy)
    std::map<std::string, double> sums;
    double total = 0;
    // per gap: l(py) theta_P'(py) + l(qy) theta_P'(qy)
    std::vector<double> apex_pair_terms;
    double max_fd_error = 0;
    bool converged = true;
};

// Schlafli terms 1/2 l(e) theta'(e) of every piece, grouped by edge type.
GroupedTerms grouped_term_sums(const harness::DeformationFamily<PrismDecomposition>& family, double t0,
                               const harness::FdOptions& opt = {});

struct FanIdentityReport {
    double angle_telescope_residual = 0;   // angle telescoping about x y, mod 2 pi
    double length_telescope_residual = 0;  // length telescoping, worst gap
    // three evaluations of the length of the fan's bending derivative
    double leaf_sum = 0;      // sum_j beta_j' l(y p_j), beta from the fan triangles
    double distribution = 0;  // gap-weighted form with beta'(k) from the pyramid expression
    double pyramid_form = 0;  // sum of l theta' over p y, q y minus the two outer terms
    double fan_length_residual = 0;
    // apex-pair sums of pyramids plus tetrahedra vs the outer region's two terms
    double apex_pair_lhs = 0, apex_pair_rhs = 0, apex_pair_residual = 0;

    bool pass(double exact_tol = 1e-10, double derivative_tol = 1e-7) const {
        return angle_telescope_residual <= exact_tol && length_telescope_residual <= exact_tol &&
               fan_length_residual <= derivative_tol && apex_pair_residual <= derivative_tol;
    }
};

FanIdentityReport fan_identity_check(const harness::DeformationFamily<PrismDecomposition>& family, double t0,
                                     const harness::FdOptions& opt = {});

struct ThetaOptions {
    double max_distance = 10.0;  // A: bound on d(y, p) and d(p, q)
    double min_distance = 1e-3;  // B: y away from the geodesics p x and q x
};

// Sum of the internal dihedral angles of the tetrahedron p q x y along p y and
// q y, computed from the visual sphere at y as pi + area(v_x v_p v_q) minus the
// angle at v_x. Defined also when p, q, y are collinear. Throws DomainError
// when the distance conditions fail.
double theta_sum(const Point& p, const Point& q, const Vertex& x, const Point& y, const ThetaOptions& opt = {});

// Same quantity from the two dihedral angles directly (non-degenerate input).
double theta_sum_direct(const Point& p, const Point& q, const Vertex& x, const Point& y);

} // namespace hyp::pleated
