#include "hyp/pleated/rectangle.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "hyp/kernel/angles.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/kernel/plane.hpp"

namespace hyp::pleated {

namespace {
constexpr double pi = std::numbers::pi;
// Rotation sense making the measured external angle equal to +b.
constexpr double kBendSign = 1.0;
} // namespace

void ChartRectangle::validate() const {
    if (sigma.size() < 2) throw DomainError("chart rectangle needs two sides");
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        if (!(sigma[i + 1] > sigma[i])) throw DomainError("chart leaves must be strictly increasing");
    if (!(h_bottom > 0) || !(h_top > h_bottom)) throw DomainError("chart heights must satisfy 0 < h_bottom < h_top");
}

std::size_t ChartRectangle::gap_of(double x) const {
    if (!(x > sigma.front()) || !(x < sigma.back())) throw DomainError("point outside the chart rectangle");
    for (std::size_t j = 1; j + 1 < sigma.size(); ++j)
        if (std::abs(x - sigma[j]) <= 1e-12) throw DomainError("arc endpoint lies on a leaf");
    std::size_t k = 0;
    while (x > sigma[k + 1]) ++k;
    return k;
}

PleatedRectangle::PleatedRectangle(ChartRectangle chart, std::vector<double> bends, const Isometry& frame) {
    chart.validate();
    const std::size_t n = chart.leaf_count();
    if (bends.size() != n) throw DomainError("one bend angle per leaf expected");
    maps_.push_back(frame);
    for (std::size_t j = 1; j <= n; ++j) {
        Geodesic leaf(IdealPoint(cplx(chart.sigma[j], 0.0)), IdealPoint::infinity());
        maps_.push_back(maps_.back() * screw_motion(leaf, cplx(0.0, kBendSign * bends[j - 1])));
    }
    for (std::size_t j = 0; j <= n + 1; ++j) {
        const Isometry& m = maps_[std::min(j, n)];
        bottom_.push_back(m.apply(ChartRectangle::point(chart.sigma[j], chart.h_bottom)));
        top_.push_back(m.apply(ChartRectangle::point(chart.sigma[j], chart.h_top)));
    }
    chart_ = std::move(chart);
}

PleatedRectangle PleatedRectangle::from_points(std::vector<Point> bottom, std::vector<Point> top) {
    if (bottom.size() < 2 || bottom.size() != top.size())
        throw DomainError("pleated rectangle: bottom and top need the same number (>= 2) of points");
    PleatedRectangle r;
    r.bottom_ = std::move(bottom);
    r.top_ = std::move(top);
    return r;
}

double PleatedRectangle::measured_bend(std::size_t j) const {
    if (j < 1 || j > leaf_count()) throw DomainError("leaf index out of range");
    return oriented_external_angle(bottom_[j], top_[j], top_[j - 1], bottom_[j + 1]);
}

std::vector<double> PleatedRectangle::measured_bends() const {
    std::vector<double> b;
    for (std::size_t j = 1; j <= leaf_count(); ++j) b.push_back(measured_bend(j));
    return b;
}

Point pleat_eval(const PleatedRectangle& r, double x, double h) {
    const auto& c = r.chart();
    if (!c) throw DomainError("pleat_eval: rectangle has no chart");
    if (!(x >= c->sigma.front()) || !(x <= c->sigma.back()) || !(h >= c->h_bottom) || !(h <= c->h_top))
        throw DomainError("pleat_eval: point outside the chart rectangle");
    std::size_t k = 0;
    while (k + 1 < r.gap_count() && x > c->sigma[k + 1]) ++k;
    return r.panel_maps()[k].apply(ChartRectangle::point(x, h));
}

double pyramid_angle_py(const PleatedRectangle& r, std::size_t k, const Point& y) {
    return oriented_external_angle(y, r.p(k), r.r(k), r.q(k));
}

double pyramid_angle_qy(const PleatedRectangle& r, std::size_t k, const Point& y) {
    return oriented_external_angle(y, r.q(k), r.p(k), r.s(k));
}

double bending_cocycle_eval(const PleatedRectangle& r, std::size_t g0, std::size_t g1, const std::optional<Point>& apex) {
    if (g0 >= r.gap_count() || g1 >= r.gap_count()) throw DomainError("gap index out of range");
    if (g1 < g0) return -bending_cocycle_eval(r, g1, g0, apex);
    double sum = 0.0;
    if (!apex) {
        for (std::size_t j = g0 + 1; j <= g1; ++j) sum += r.measured_bend(j);
        return sum;
    }
    const Point& y = *apex;
    for (std::size_t k = g0; k <= g1; ++k) sum += pyramid_angle_py(r, k, y) - pi + pyramid_angle_qy(r, k, y);
    return sum - pyramid_angle_py(r, g0, y) + pi - pyramid_angle_qy(r, g1, y);
}

double bending_cocycle_eval(const PleatedRectangle& r, double x0, double x1, const std::optional<Point>& apex) {
    const auto& c = r.chart();
    if (!c) throw DomainError("bending_cocycle_eval: rectangle has no chart");
    return bending_cocycle_eval(r, c->gap_of(x0), c->gap_of(x1), apex);
}

double PleatedFan::bending(std::size_t j) const {
    if (j < 1 || j + 1 >= base.size()) throw DomainError("fan joint index out of range");
    if (side == Side::bottom) return oriented_external_angle(apex, base[j], base[j - 1], base[j + 1]);
    return oriented_external_angle(apex, base[j], base[j + 1], base[j - 1]);
}

PleatedFan fan_build(const Point& apex, const PleatedRectangle& r, Side side, double min_distance) {
    for (std::size_t j = 0; j < r.bottom().size(); ++j)
        if (r.leaf_geodesic(j).distance_to(apex) < min_distance)
            throw DomainError("fan apex too close to leaf " + std::to_string(j));
    for (std::size_t k = 0; k < r.gap_count(); ++k) {
        Plane pl = Plane::through(r.p(k), r.q(k), r.s(k));
        if (std::abs(pl.offset(apex)) <= 1e-9) throw DegenerateError("fan apex lies on the plane of panel " + std::to_string(k));
    }
    return {apex, side == Side::bottom ? r.bottom() : r.top(), side};
}

} // namespace hyp::pleated
