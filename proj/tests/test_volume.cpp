#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hyp/kernel/angles.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/kernel/plane.hpp"
#include "hyp/volume/chain.hpp"
#include "hyp/volume/lobachevsky.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hyp;
using namespace hyp::volume;
using testsupport::Rng;
constexpr double pi = std::numbers::pi;

TEST_CASE("lobachevsky function") {
    CHECK(std::abs(lobachevsky(0.0)) <= 1e-12);
    CHECK(std::abs(lobachevsky(pi / 2)) <= 1e-12);
    CHECK(std::abs(lobachevsky(pi / 6) - oracle::lobachevsky_quadrature(pi / 6)) <= 1e-12);
    // known value: 3 Lambda(pi/3) is the regular ideal volume 1.0149416064096536
    CHECK(std::abs(regular_ideal_volume() - 1.0149416064096536) < 1e-13);

    Rng r(29);
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        double th = r.uniform(-pi + 1e-3, pi - 1e-3);
        worst = std::max(worst, std::abs(lobachevsky(th) - oracle::lobachevsky_quadrature(th)));
    }
    CHECK(worst <= 1e-12);

    double dev = 0;
    for (int i = 0; i < 1000; ++i) {
        double th = r.uniform(-20, 20);
        dev = std::max(dev, std::abs(lobachevsky(th) + lobachevsky(-th)));
        dev = std::max(dev, std::abs(lobachevsky(th + pi) - lobachevsky(th)));
    }
    CHECK(dev <= 1e-10);
}

TEST_CASE("ideal tetrahedra") {
    CHECK(ideal_tet_volume(pi / 3, pi / 3, pi / 3) ==
          doctest::Approx(3 * oracle::lobachevsky_quadrature(pi / 3)).epsilon(1e-13));
    CHECK(ideal_tet_volume(1e-6, pi / 2, pi / 2 - 1e-6) < 1e-4);
    CHECK(std::abs(ideal_tet_volume(0.4, 1.1, pi - 1.5) - ideal_tet_volume(1.1, pi - 1.5, 0.4)) <= 1e-14);
    CHECK(std::abs(ideal_tet_volume(0.4, 1.1, pi - 1.5) - ideal_tet_volume(pi - 1.5, 0.4, 1.1)) <= 1e-14);
    CHECK_THROWS_AS(ideal_tet_volume(1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(ideal_tet_volume(-0.1, 1.0, pi - 0.9), DomainError);

    Rng r(31);
    double vmax = regular_ideal_volume();
    for (int i = 0; i < 1000; ++i) {
        double a = r.uniform(1e-3, pi - 2e-3);
        double b = r.uniform(1e-3, pi - a - 1e-3);
        CHECK(ideal_tet_volume(a, b, pi - a - b) <= vmax + 1e-15);
    }

    // vertices 0, 1, z, inf: angles arg z, arg 1/(1-z), arg (z-1)/z
    for (int i = 0; i < 50; ++i) {
        cplx z(r.uniform(-2, 2), r.uniform(0.05, 2));
        double a = std::arg(z), b = std::arg(1.0 / (1.0 - z)), c = std::arg((z - 1.0) / z);
        double expect = ideal_tet_volume(a, b, c);
        double v = tet_volume_signed(IdealPoint(cplx(0, 0)), IdealPoint(cplx(1, 0)), IdealPoint(z), IdealPoint::infinity());
        CHECK(std::abs(std::abs(v) - expect) < 1e-12);
        CHECK(std::abs(v) <= vmax + 1e-9);
    }
}

namespace {
Point rp(Rng& r) { return testsupport::random_point(r, 1.2); }
} // namespace

TEST_CASE("signed tetrahedron volume") {
    Rng r(37);
    // coplanar
    Point a = rp(r), b = rp(r), c = rp(r);
    Point d = point_along(a, tangent_toward(a, b), 0.3);
    CHECK(tet_volume_signed(a, b, c, point_along(d, tangent_toward(d, c), 0.4)) == 0.0);

    int count = 0;
    while (count < 20) {
        Point v[4] = {rp(r), rp(r), rp(r), rp(r)};
        double vol = tet_volume_signed(v[0], v[1], v[2], v[3]);
        if (std::abs(vol) < 1e-3) continue;
        double q = oracle::tet_volume_quadrature(v);
        CHECK(std::abs(std::abs(vol) - q) <= 1e-6);
        CHECK((vol > 0) == (orientation_sign(v[0], v[1], v[2], v[3]) > 0));
        CHECK(std::abs(tet_volume_signed(v[1], v[0], v[2], v[3]) + vol) <= 1e-12);
        CHECK(std::abs(tet_volume_signed(v[0], v[2], v[1], v[3]) + vol) <= 1e-12);
        CHECK(std::abs(tet_volume_signed(v[1], v[2], v[3], v[0]) + vol) <= 1e-12);
        CHECK(std::abs(tet_volume_signed(Tetrahedron{{v[0], v[1], v[2], v[3]}, -1}) + vol) <= 1e-15);
        CHECK(std::abs(vol) <= regular_ideal_volume() + 1e-9);
        ++count;
    }

    // mixed finite and ideal vertices against the ideal limit
    for (int i = 0; i < 20; ++i) {
        IdealPoint z[4] = {testsupport::random_ideal(r), testsupport::random_ideal(r), testsupport::random_ideal(r),
                           testsupport::random_ideal(r)};
        double ideal = tet_volume_signed(z[0], z[1], z[2], z[3]);
        // push finite points out toward the ideal vertex 3 along rays from the origin
        Vec4 L = z[3].light_vector();
        Vec4 u(0, L[1], L[2], L[3]);
        double s = 18.0;
        Point far = point_along(Point::origin(), u, s);
        double approx = tet_volume_signed(z[0], z[1], z[2], far);
        CHECK(std::abs(approx - ideal) < 1e-6);
    }
}

TEST_CASE("isometry invariance of volume") {
    Rng r(41);
    for (int i = 0; i < 100; ++i) {
        Isometry g = testsupport::random_isometry(r, 0.6);
        Vertex v[4] = {rp(r), rp(r), rp(r), i % 3 == 0 ? Vertex(testsupport::random_ideal(r)) : Vertex(rp(r))};
        double before = tet_volume_signed(v[0], v[1], v[2], v[3]);
        double after = tet_volume_signed(g.apply(v[0]), g.apply(v[1]), g.apply(v[2]), g.apply(v[3]));
        CHECK(std::abs(before - after) <= 1e-9);
    }
}

TEST_CASE("chains") {
    SimplicialChain empty;
    CHECK(chain_volume(empty) == 0.0);

    Rng r(43);
    for (int i = 0; i < 20; ++i) {
        Point v[4] = {rp(r), rp(r), rp(r), rp(r)};
        SimplicialChain c;
        c.add({{v[0], v[1], v[2], v[3]}, 1});
        double whole = chain_volume(c);

        SimplicialChain both = c;
        both.append(c.reversed());
        CHECK(std::abs(chain_volume(both)) <= 1e-10);

        // split by an interior point
        double w[4] = {r.uniform(0.1, 1), r.uniform(0.1, 1), r.uniform(0.1, 1), r.uniform(0.1, 1)};
        Vec4 m;
        for (int k = 0; k < 4; ++k) m += w[k] * v[k].coords();
        Point p = Point::from_coords(m);
        SimplicialChain split;
        for (auto& x : v) split.add_vertex(x);
        split.add({{p, v[1], v[2], v[3]}, 1});
        split.add({{v[0], p, v[2], v[3]}, 1});
        split.add({{v[0], v[1], p, v[3]}, 1});
        split.add({{v[0], v[1], v[2], p}, 1});
        CHECK(std::abs(chain_volume(split) - whole) <= 1e-9);
        CHECK(split.boundary() == c.boundary());

        // reordering simplices does not matter
        SimplicialChain rev;
        for (int k = 3; k >= 0; --k) rev.add(split.tetrahedron(k));
        CHECK(std::abs(chain_volume(rev) - chain_volume(split)) <= 1e-14);

        // additivity under concatenation
        SimplicialChain cat = c;
        cat.append(split);
        CHECK(std::abs(chain_volume(cat) - 2 * whole) <= 1e-9);
    }

    SimplicialChain one;
    one.add({{rp(r), rp(r), rp(r), rp(r)}, 1});
    CHECK(one.boundary().size() == 4);

    // two tetrahedra glued along a face leave 6 boundary faces
    Point a = rp(r), b = rp(r), c = rp(r), d = rp(r);
    SimplicialChain glued;
    glued.add({{a, b, c, d}, 1});
    Vec4 n = Plane::through(a, b, c).normal();
    Point e = Point::from_coords(d.coords() - 2.0 * mink_inner(d.coords(), n) * n);
    glued.add({{b, a, c, e}, 1});
    CHECK(glued.boundary().size() == 6);
}

TEST_CASE("chain json round trip") {
    Rng r(47);
    SimplicialChain c;
    c.label = "sample";
    c.add({{rp(r), rp(r), IdealPoint(cplx(0.3, -0.2)), IdealPoint::infinity()}, -1});
    c.add({{rp(r), rp(r), rp(r), rp(r)}, 1});
    auto j = chain_to_json(c);
    SimplicialChain back = chain_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.label == "sample");
    CHECK(back.size() == 2);
    CHECK(std::abs(chain_volume(back) - chain_volume(c)) < 1e-12);
    CHECK_THROWS(chain_from_json(nlohmann::json::parse(R"({"simplices":[{"vertices":[[1,0,0,0]],"sign":1}]})")));
}
