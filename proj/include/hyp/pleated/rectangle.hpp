#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyp/kernel/geodesic.hpp"
#include "hyp/kernel/isometry.hpp"
#include "hyp/kernel/point.hpp"

namespace hyp::pleated {

// Chart of a rectangle in the vertical half-plane {Im w = 0} of upper
// half-space. Leaves are the vertical geodesics x = sigma_j, so any two of
// them are asymptotic at infinity. The horizontal sides are the horocycles
// h = h_bottom and h = h_top. sigma.front() and sigma.back() are the two
// vertical sides; the entries in between are the leaves 1..n.
struct ChartRectangle {
    std::vector<double> sigma;
    double h_bottom = 1.0;
    double h_top = 2.0;

    std::size_t leaf_count() const { return sigma.size() - 2; }
    void validate() const;  // throws DomainError
    static Point point(double x, double h) { return from_uhs(x, 0.0, h); }
    // index k of the gap (sigma_k, sigma_{k+1}) containing x; throws DomainError
    // when x is outside or within 1e-12 of a leaf
    std::size_t gap_of(double x) const;
};

// Rectangle bent along its leaves. Panel k (between leaf k and leaf k+1) is
// the quadrilateral (p_k, q_k, s_k, r_k) with q_k = p_{k+1}, s_k = r_{k+1};
// bottom() holds p_0 .. p_{n+1}, top() holds r_0 .. r_{n+1}.
class PleatedRectangle {
public:
    // Panel k is mapped by frame * Rot(leaf 1, b_1) * ... * Rot(leaf k, b_k).
    // The sign of the rotation is chosen so that measured_bend(j) == b_j.
    PleatedRectangle(ChartRectangle chart, std::vector<double> bends, const Isometry& frame = Isometry());

    // Explicit corner images (no chart); bends are measured.
    static PleatedRectangle from_points(std::vector<Point> bottom, std::vector<Point> top);

    std::size_t leaf_count() const { return bottom_.size() - 2; }
    std::size_t gap_count() const { return bottom_.size() - 1; }
    const std::vector<Point>& bottom() const { return bottom_; }
    const std::vector<Point>& top() const { return top_; }
    const Point& p(std::size_t k) const { return bottom_[k]; }
    const Point& q(std::size_t k) const { return bottom_[k + 1]; }
    const Point& r(std::size_t k) const { return top_[k]; }
    const Point& s(std::size_t k) const { return top_[k + 1]; }

    const std::optional<ChartRectangle>& chart() const { return chart_; }
    const std::vector<Isometry>& panel_maps() const { return maps_; }

    // Oriented external angle at leaf j (1..n) between panels j-1 and j.
    double measured_bend(std::size_t j) const;
    std::vector<double> measured_bends() const;
    double leaf_length(std::size_t j) const { return distance(bottom_[j], top_[j]); }
    Geodesic leaf_geodesic(std::size_t j) const { return geodesic_through(bottom_[j], top_[j]); }

private:
    PleatedRectangle() = default;
    std::optional<ChartRectangle> chart_;
    std::vector<Isometry> maps_;
    std::vector<Point> bottom_, top_;
};

// Image of the chart point (x, h). Throws DomainError outside the chart or
// for rectangles without one.
Point pleat_eval(const PleatedRectangle& r, double x, double h);

// Real lift of the bending cocycle on the bottom arc from gap g0 to gap g1
// (crossing leaves g0+1 .. g1; negative orientation when g1 < g0).
// Without an apex this is the sum of the leaf bends. With an apex y it is the
// bending of the fan joining y to the bottom arc, assembled from the external
// angles of the pyramids over the panels:
//   sum over gaps met (theta_P(p y) - pi + theta_P(q y)) - theta_P-(p- y) + pi - theta_P+(q+ y).
double bending_cocycle_eval(const PleatedRectangle& r, std::size_t g0, std::size_t g1,
                            const std::optional<Point>& apex = std::nullopt);

// Same, with arc endpoints given as chart abscissae on the bottom side.
double bending_cocycle_eval(const PleatedRectangle& r, double x0, double x1,
                            const std::optional<Point>& apex = std::nullopt);

// External angles of the pyramid over panel k with apex y at edges p y, q y.
double pyramid_angle_py(const PleatedRectangle& r, std::size_t k, const Point& y);
double pyramid_angle_qy(const PleatedRectangle& r, std::size_t k, const Point& y);

enum class Side { bottom, top };

struct PleatedFan {
    Point apex;
    std::vector<Point> base;  // bent arc, one point per leaf plus the two corners
    Side side;

    std::size_t triangle_count() const { return base.size() - 1; }
    // Bending at the joint apex -> base[j], 1 <= j <= n, measured on the side of
    // the pyramids of the prism decomposition.
    double bending(std::size_t j) const;
};

// Joint of apex with one horizontal side. Throws DomainError if the apex is
// closer than min_distance to a leaf (or side) geodesic, DegenerateError if
// it lies on the plane of a panel.
PleatedFan fan_build(const Point& apex, const PleatedRectangle& r, Side side, double min_distance = 1e-3);

} // namespace hyp::pleated
