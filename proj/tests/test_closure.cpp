#include "doctest.h"

#include <cmath>

#include "hyp/harness/finite_difference.hpp"
#include "hyp/kernel/angles.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/pleated/closure.hpp"
#include "hyp/pleated/decay.hpp"
#include "hyp/volume/chain.hpp"

using namespace hyp;
using namespace hyp::pleated;

namespace {

PleatScenario scenario(std::size_t n, std::vector<std::vector<double>> bends) {
    PleatScenario s;
    s.chart.sigma.push_back(-1.0);
    for (std::size_t j = 0; j < n; ++j) s.chart.sigma.push_back(-1.0 + 2.0 * (j + 1.0) / (n + 1) + 0.02 * std::cos(j + 0.5));
    s.chart.sigma.push_back(1.0);
    s.chart.h_bottom = 1.0;
    s.chart.h_top = 2.5;
    s.bend_coeffs = std::move(bends);
    s.x = from_uhs(0.1, 0.5, 0.45);
    s.y = from_uhs(0.05, 0.6, 1.6);
    return s;
}

double vol(const harness::DeformationFamily<PrismDecomposition>& f, double t) {
    return volume::chain_volume(f.at(t).chain());
}

} // namespace

TEST_CASE("angle-locked closure") {
    SUBCASE("the angle system has full rank") {
        for (std::size_t n : {0u, 1u, 3u, 5u}) {
            AngleLockedSolver s(scenario(n, std::vector<std::vector<double>>(n, {0.1, 1.0})));
            CHECK(s.equations() + 6 == s.unknowns());
            CHECK(s.jacobian_rank() == static_cast<int>(s.equations()));
        }
    }
    SUBCASE("single leaf bent from flat") {
        PleatScenario sc = scenario(1, {{0.0, 1.0}});
        auto fam = pleat_family(sc);
        double ell = std::log(sc.chart.h_top / sc.chart.h_bottom);
        auto d = harness::fd_derivative([&](double t) { return vol(fam, t); }, 0.0);
        CHECK(d.converged);
        CHECK(std::abs(d.value - 0.5 * ell) <= 1e-6);
        // leaf bend follows the path, the other angles stay put
        AngleLockedSolver solver(sc);
        for (double t : {0.013, 0.05, 0.11}) {
            auto D = solver.solve(t);
            CHECK(std::abs(D.rect.measured_bend(1) - t) <= 1e-11);
            for (double r : solver.residual(D, t)) CHECK(std::abs(r) <= 1e-11);
        }
        CHECK_THROWS_AS(fam.at(-0.01), DomainError);
    }
    SUBCASE("constant bending keeps the volume") {
        auto fam = pleat_family(scenario(3, {{0.2}, {-0.3}, {0.25}}));
        auto d = harness::fd_derivative([&](double t) { return vol(fam, t); }, 0.03);
        CHECK(std::abs(d.value) <= 1e-9);
    }
    SUBCASE("five leaves") {
        PleatScenario sc = scenario(5, {{0.1, 0.5}, {-0.2, 0.3, 1.0}, {0.15, -0.4}, {-0.1, 0.7}, {0.2, 0.2, -0.5}});
        auto fam = pleat_family(sc);
        double t0 = 0.04;
        auto lhs = harness::fd_derivative([&](double t) { return vol(fam, t); }, t0);
        auto D = fam.at(t0);
        double rhs = 0;
        for (std::size_t j = 1; j <= 5; ++j) {
            const auto& c = sc.bend_coeffs[j - 1];
            double rate = c.size() > 1 ? c[1] + (c.size() > 2 ? 2 * c[2] * t0 : 0.0) : 0.0;
            rhs += 0.5 * D.rect.leaf_length(j) * rate;
        }
        CHECK(std::abs(lhs.value - rhs) <= 1e-6);
    }
}

TEST_CASE("pleat scenario JSON") {
    PleatScenario sc = scenario(2, {{0.1, 0.5}, {-0.2, 0.0, 1.0}});
    sc.id = "two";
    sc.closure = false;
    sc.seed = 99;
    PleatScenario back = scenario_from_json(scenario_to_json(sc));
    CHECK(back.id == "two");
    CHECK(back.chart.sigma == sc.chart.sigma);
    CHECK(back.bend_coeffs == sc.bend_coeffs);
    CHECK(distance(back.x, sc.x) <= 1e-12);
    CHECK(distance(back.y, sc.y) <= 1e-12);
    CHECK(back.closure == false);
    CHECK(back.seed == 99);
    CHECK(back.degree() == 2);
    auto j = scenario_to_json(sc);
    j["bends"].erase(0);
    CHECK_THROWS_AS(scenario_from_json(j), DomainError);
}

TEST_CASE("decay diagnostics") {
    DecayOptions opt;
    ChartRectangle c = asymptotic_chart(opt);
    CHECK(c.leaf_count() == 25);
    auto radii = divergence_radii(c, opt);
    for (int r = 1; r <= 12; ++r) CHECK(std::count(radii.begin(), radii.end(), r) == 2);

    auto rep = decay_diagnostics(opt, from_uhs(0.1, 0.5, 0.45), from_uhs(0.05, 0.6, 1.6));
    CHECK(rep.samples.size() == 24);
    CHECK(rep.pass());
    CHECK(rep.A > 0.5);
    for (const auto& s : rep.samples) {
        CHECK(s.gap_length <= rep.C * std::exp(-rep.A * s.radius) * (1 + 1e-12));
        CHECK(std::abs(s.apex_pair_term) <= rep.C12 * s.radius * std::exp(-rep.A * s.radius) * (1 + 1e-12));
    }
    // the apex terms shrink with the gaps
    double small = 0, large = 0;
    for (const auto& s : rep.samples) (s.radius >= 10 ? small : large) = std::max(s.radius >= 10 ? small : large, std::abs(s.apex_pair_term));
    CHECK(small < 1e-2 * large);
    CHECK(std::isfinite(rep.apex_bound_sum));
    CHECK_THROWS_AS(asymptotic_chart(DecayOptions{12, 1.0, 0.5}), DomainError);
}
