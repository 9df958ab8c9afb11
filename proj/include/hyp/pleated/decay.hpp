#pragma once

#include <cstddef>
#include <vector>

#include "hyp/lamination/track.hpp"
#include "hyp/pleated/prism.hpp"

namespace hyp::pleated {

// Nested rectangles R_m = [-W e^{-mL}, W e^{-mL}] x [h_b, h_t] in the chart,
// m = 0..max_radius-1, carrying leaves at +-0.9 W e^{-(r-1)L}, r = 1..max_radius,
// and one central leaf at 0. All leaves are asymptotic at infinity; the two
// leaves bounding a gap of radius r cross R_0 .. R_{r-1} together.
struct DecayOptions {
    int max_radius = 12;
    double width = 1.0;   // W
    double rate = 0.8;    // L, > log 2 so the innermost gaps stay ordered
    double h_bottom = 1.0, h_top = 2.5;
    double max_bend = 0.15;
    unsigned long long seed = 7;
};

ChartRectangle asymptotic_chart(const DecayOptions& opt);

// Divergence radius of each gap of the chart (0 for the two gaps touching a
// vertical side, which no pair of leaves bounds).
std::vector<int> divergence_radii(const ChartRectangle& c, const DecayOptions& opt);

struct DecaySample {
    std::size_t gap;
    int radius;
    double gap_length;       // l(p q) on the bent bottom side
    double apex_pair_term;   // l(py) theta'(py) + l(qy) theta'(qy) in P_gap
};

struct DecayReport {
    std::vector<DecaySample> samples;  // gaps with radius >= 1
    // l(p q) <= C e^{-A r}: A from a least-squares fit of log l against r,
    // C the smallest constant making the bound hold
    double A = 0, C = 0;
    bool monotone = false;  // max length per radius strictly decreasing
    // |apex term| <= C12 r e^{-A r} with the same A
    double C12 = 0;
    double apex_term_sum = 0, apex_bound_sum = 0;
    int max_components_per_radius = 0;

    bool pass() const { return A > 0 && C > 0 && monotone && max_components_per_radius <= 2; }
};

// Builds the asymptotic rectangle bent by seeded random bends b_j(t) = a_j + c_j t,
// a prism decomposition with the given apexes and evaluates both decay
// diagnostics at t = 0.
DecayReport decay_diagnostics(const DecayOptions& opt, const Point& x, const Point& y);

} // namespace hyp::pleated
