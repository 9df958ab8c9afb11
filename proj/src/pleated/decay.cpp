#include "hyp/pleated/decay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "hyp/kernel/errors.hpp"

namespace hyp::pleated {

ChartRectangle asymptotic_chart(const DecayOptions& opt) {
    if (opt.max_radius < 1 || opt.rate <= std::log(2.0) || opt.width <= 0)
        throw DomainError("asymptotic_chart: need max_radius >= 1, rate > log 2, width > 0");
    ChartRectangle c;
    c.h_bottom = opt.h_bottom;
    c.h_top = opt.h_top;
    c.sigma.push_back(-opt.width);
    for (int r = 1; r <= opt.max_radius; ++r) c.sigma.push_back(-0.9 * opt.width * std::exp(-(r - 1) * opt.rate));
    c.sigma.push_back(0.0);
    for (int r = opt.max_radius; r >= 1; --r) c.sigma.push_back(0.9 * opt.width * std::exp(-(r - 1) * opt.rate));
    c.sigma.push_back(opt.width);
    c.validate();
    return c;
}

std::vector<int> divergence_radii(const ChartRectangle& c, const DecayOptions& opt) {
    auto inside = [&](double s, int m) { return std::abs(s) < opt.width * std::exp(-m * opt.rate); };
    std::vector<int> radii;
    for (std::size_t k = 0; k + 1 < c.sigma.size(); ++k) {
        if (k == 0 || k + 2 == c.sigma.size()) {
            radii.push_back(0);
            continue;
        }
        int r = 0;
        while (inside(c.sigma[k], r) && inside(c.sigma[k + 1], r)) ++r;
        radii.push_back(r);
    }
    return radii;
}

DecayReport decay_diagnostics(const DecayOptions& opt, const Point& x, const Point& y) {
    ChartRectangle chart = asymptotic_chart(opt);
    std::vector<int> radii = divergence_radii(chart, opt);
    std::mt19937_64 gen(opt.seed);
    std::uniform_real_distribution<double> U(0.3, 1.0);
    std::vector<double> a, c;
    for (std::size_t j = 0; j < chart.leaf_count(); ++j) {
        // alternating signs keep the accumulated bending small
        double s = j % 2 ? -1.0 : 1.0;
        a.push_back(s * opt.max_bend * U(gen));
        c.push_back(-s * opt.max_bend * U(gen));
    }
    harness::DeformationFamily<PrismDecomposition> fam(
        [&](double t) {
            std::vector<double> b(a.size());
            for (std::size_t j = 0; j < b.size(); ++j) b[j] = a[j] + c[j] * t;
            auto d = prism_decompose(PleatedRectangle(chart, b), x, y);
            d.divergence_radii = radii;
            return d;
        },
        -1.0, 1.0, 1);
    GroupedTerms g = grouped_term_sums(fam, 0.0);
    PrismDecomposition d0 = fam.at(0.0);

    DecayReport rep;
    std::vector<lamination::RectangleComponent> comps;
    for (std::size_t k = 0; k < d0.gaps(); ++k) {
        if (radii[k] < 1) continue;
        rep.samples.push_back({k, radii[k], distance(d0.rect.p(k), d0.rect.q(k)), g.apex_pair_terms[k]});
        comps.push_back({0, k, radii[k]});
    }
    rep.max_components_per_radius = lamination::max_components_per_radius(comps);

    double sr = 0, sl = 0, srr = 0, srl = 0, n = static_cast<double>(rep.samples.size());
    for (const auto& s : rep.samples) {
        double lg = std::log(s.gap_length);
        sr += s.radius;
        sl += lg;
        srr += double(s.radius) * s.radius;
        srl += s.radius * lg;
    }
    double slope = (n * srl - sr * sl) / (n * srr - sr * sr);
    rep.A = -slope;
    for (const auto& s : rep.samples) {
        rep.C = std::max(rep.C, s.gap_length * std::exp(rep.A * s.radius));
        rep.C12 = std::max(rep.C12, std::abs(s.apex_pair_term) / (s.radius * std::exp(-rep.A * s.radius)));
    }
    std::map<int, double> longest;
    for (const auto& s : rep.samples) longest[s.radius] = std::max(longest[s.radius], s.gap_length);
    rep.monotone = true;
    double prev = INFINITY;
    for (const auto& [r, l] : longest) {
        if (!(l < prev)) rep.monotone = false;
        prev = l;
    }
    for (const auto& s : rep.samples) {
        rep.apex_term_sum += std::abs(s.apex_pair_term);
        rep.apex_bound_sum += rep.C12 * s.radius * std::exp(-rep.A * s.radius);
    }
    return rep;
}

} // namespace hyp::pleated
