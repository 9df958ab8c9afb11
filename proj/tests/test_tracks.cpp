#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hyp/kernel/errors.hpp"
#include "hyp/kernel/isometry.hpp"
#include "hyp/lamination/track.hpp"
#include "support.hpp"

using namespace hyp;
using namespace hyp::lamination;

namespace {

// Two switches joined by branch 0 on one side and branches 1, 2 on the other.
TrainTrack y_track() {
    TrainTrack t;
    t.branches = {{1.0}, {0.7}, {0.9}};
    t.switches = {{{{0, 1}}, {{1, 0}, {2, 0}}}, {{{1, 1}, {2, 1}}, {{0, 0}}}};
    return t;
}

TrainTrack loop_track(double len) {
    TrainTrack t;
    t.branches = {{len, true}};
    return t;
}

} // namespace

TEST_CASE("switch conditions") {
    auto loop = loop_track(2.0);
    for (double w : {-3.0, 0.0, 0.25, 7.0}) CHECK(validate_track(loop, {{w}}).pass());

    auto y = y_track();
    auto good = validate_track(y, {{2, 1, 1}});
    CHECK(good.well_formed);
    CHECK(good.pass());
    auto bad = validate_track(y, {{2, 1, 0.5}});
    CHECK_FALSE(bad.pass());
    CHECK(bad.max_violation == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(validate_track(y, {{2, 1}}), GeometryError);

    // circle-valued weights only need to balance mod 2 pi
    TransverseCocycle wrap{{2 * std::numbers::pi + 1.0, 0.5, 0.5}, ValueRing::Circle};
    CHECK(validate_track(y, wrap).pass());

    TrainTrack loose = y;
    loose.switches.pop_back();
    CHECK_FALSE(validate_track(loose, {{2, 1, 1}}).well_formed);

    // valid cocycles are closed under linear combinations
    testsupport::Rng r(201);
    for (int i = 0; i < 100; ++i) {
        double a = r.uniform(0, 3), b = r.uniform(0, 3);
        TransverseCocycle c1{{a + b, a, b}}, c2{{2 * b, b, b}};
        double al = r.uniform(-5, 5), be = r.uniform(-5, 5);
        CHECK(validate_track(y, c1 * al + c2 * be).max_violation <= 1e-12);
    }
}

TEST_CASE("cocycle evaluation on arcs") {
    auto y = y_track();
    TransverseCocycle c{{2, 1.25, 0.75}};
    CHECK(cocycle_eval(y, c, {}) == 0.0);
    CHECK(cocycle_eval(y, c, {1, 1}) == 2.5);
    std::vector<std::size_t> k1{0, 1}, k2{2, 0, 1}, k = k1;
    k.insert(k.end(), k2.begin(), k2.end());
    CHECK(cocycle_eval(y, c, k) == cocycle_eval(y, c, k1) + cocycle_eval(y, c, k2));
    CHECK_THROWS_AS(cocycle_eval(y, c, {5}), GeometryError);

    CHECK(reduce(ValueRing::Circle, 7.0) == doctest::Approx(7.0 - 2 * std::numbers::pi));
    CHECK(reduce(ValueRing::Circle, std::numbers::pi) == doctest::Approx(std::numbers::pi));
    CHECK(reduce(ValueRing::Real, 7.0) == 7.0);
}

TEST_CASE("cocycle length") {
    auto y = y_track();
    CHECK(cocycle_length(y, {{0, 0, 0}}) == 0.0);
    TransverseCocycle c1{{2, 1, 1}}, c2{{1, 0.25, 0.75}};
    for (double a : {-2.0, 0.5, 3.0}) {
        CHECK(std::abs(cocycle_length(y, c1 * a) - a * cocycle_length(y, c1)) <= 1e-12);
        CHECK(std::abs(cocycle_length(y, c1 * a + c2 * 1.5) - (a * cocycle_length(y, c1) + 1.5 * cocycle_length(y, c2))) <=
              1e-12);
    }
    CHECK(cocycle_length(y, MeasuredLamination({{2, 1, 1}}).cocycle()) >= 0);
    CHECK_THROWS_AS(MeasuredLamination({{2, -1, 3}}), DomainError);
    TrainTrack nolen = y;
    nolen.branches[1].length = 0;
    CHECK_THROWS_AS(cocycle_length(nolen, c1), DomainError);
}

TEST_CASE("closed leaves and holonomy lengths") {
    // hyperbolic elements of SL(2, Z); translation length 2 arccosh(|tr| / 2)
    for (auto m : {Mat2{{{2, 1}, {1, 1}}}, Mat2{{{3, 2}, {1, 1}}}, Mat2{{{5, 2}, {2, 1}}}, Mat2{{{-3, 1}, {-1, 0}}}}) {
        Isometry g(m);
        auto cls = classify_isometry(g);
        REQUIRE(cls.kind == IsometryClass::loxodromic);
        double ell = cls.complex_length.real();
        CHECK(std::abs(ell - 2 * std::acosh(std::abs(g.trace().real()) / 2)) <= 1e-9);
        CHECK(std::abs(cls.complex_length.imag()) <= 1e-12);  // Fuchsian: no twist
        auto t = loop_track(ell);
        auto unit = scc_cocycle(t, {{0, true}}, 1.0);
        CHECK(unit.weights[0] == 1.0);
        CHECK(std::abs(cocycle_length(t, unit) - ell) <= 1e-9);
        CHECK(std::abs(cocycle_length(t, scc_cocycle(t, {{0, true}}, 2.5)) - 2.5 * ell) <= 1e-9);
        CHECK(cocycle_length(t, scc_cocycle(t, {{0, true}}, 0.0)) == 0.0);
    }

    // core curve of a two-branch annulus track, and a curve through the Y
    TrainTrack ann;
    ann.branches = {{1.5}, {0.5}};
    ann.switches = {{{{0, 1}}, {{1, 0}}}, {{{1, 1}}, {{0, 0}}}};
    auto core = scc_cocycle(ann, {{0, true}, {1, true}}, 1.0);
    CHECK(core.weights == std::vector<double>{1, 1});
    CHECK(validate_track(ann, core).pass());
    CHECK(cocycle_length(ann, core) == doctest::Approx(2.0));

    auto y = y_track();
    auto c = scc_cocycle(y, {{0, true}, {1, true}}, 3.0);
    CHECK(c.weights == std::vector<double>{3, 3, 0});
    CHECK(validate_track(y, c).pass());
    CHECK_THROWS_AS(scc_cocycle(y, {{0, true}, {0, true}}, 1.0), GeometryError);
    CHECK_THROWS_AS(scc_cocycle(y, {{1, true}}, 1.0), GeometryError);
}

TEST_CASE("divergence radius counting") {
    std::vector<RectangleComponent> comps{{0, 0, 1}, {0, 1, 1}, {1, 0, 2}, {1, 1, 3}, {2, 0, 3}};
    CHECK(max_components_per_radius(comps) == 2);
    comps.push_back({3, 0, 0});
    CHECK_THROWS_AS(max_components_per_radius(comps), DomainError);
}

TEST_CASE("track json round trip") {
    auto y = y_track();
    TransverseCocycle c{{2, 1, 1}, ValueRing::Circle};
    auto j = nlohmann::json::parse(track_to_json(y, &c).dump());
    auto back = track_from_json(j);
    auto cb = cocycle_from_json(j);
    CHECK(back.branches.size() == 3);
    CHECK(back.switches.size() == 2);
    CHECK(cb.ring == ValueRing::Circle);
    CHECK(validate_track(back, cb).pass());
    CHECK(cocycle_length(back, cb) == doctest::Approx(cocycle_length(y, c)));
}
