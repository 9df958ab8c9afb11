#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "hyp/harness/verify.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/schlafli/schlafli.hpp"
#include "polytopes.hpp"
#include "support.hpp"

using namespace hyp;
using namespace hyp::harness;
using namespace testsupport;

namespace {

VerificationReport sample_report(const std::string& id, double lhs, double rhs) {
    VerificationReport r;
    r.scenario = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.h = 1e-4;
    r.finalize();
    return r;
}

pleated::PleatScenario single_leaf() {
    pleated::PleatScenario s;
    s.id = "single-leaf";
    s.chart.sigma = {-1.0, 0.1, 1.0};
    s.chart.h_bottom = 1.0;
    s.chart.h_top = 2.5;
    s.bend_coeffs = {{0.0, 1.0}};
    s.x = from_uhs(0.1, 0.5, 0.45);
    s.y = from_uhs(0.05, 0.6, 1.6);
    return s;
}

std::vector<Point> testsupport_klein_tet() {
    return {klein({0.1, 0.05, -0.2}), klein({0.6, -0.1, 0.0}), klein({-0.1, 0.5, 0.1}), klein({0.0, 0.1, 0.55})};
}

} // namespace

TEST_CASE("report emission") {
    CHECK(emit_report({}, ReportFormat::csv) == "scenario,lhs,rhs,abs_gap,rel_gap,h,pass\n");
    auto r = sample_report("one", 0.5, 0.5);
    CHECK(r.pass);
    CHECK(emit_report({r}, ReportFormat::csv) == "scenario,lhs,rhs,abs_gap,rel_gap,h,pass\none,0.5,0.5,0,0,0.0001,true\n");
    CHECK(emit_report({sample_report("q", 0.5, 0.75)}, ReportFormat::csv) ==
          "scenario,lhs,rhs,abs_gap,rel_gap,h,pass\nq,0.5,0.75,0.25,0.33333333333333331,0.0001,false\n");
    std::vector<VerificationReport> rs{r, sample_report("two, quoted", 1.0, 1.1)};
    CHECK(emit_report(rs, ReportFormat::csv) == emit_report(rs, ReportFormat::csv));
    CHECK(emit_report(rs, ReportFormat::text) == emit_report(rs, ReportFormat::text));
    CHECK(emit_report(rs, ReportFormat::csv).find("\"two, quoted\",1,1.1") != std::string::npos);
    CHECK(!rs[1].pass);

    // gaps come from the stored sides
    VerificationReport g = sample_report("g", 3.0, 1.0);
    g.abs_gap = 0;
    g.finalize();
    CHECK(g.abs_gap == 2.0);
    CHECK(g.rel_gap == 2.0 / 3.0);
    // relative tolerance for large sides
    CHECK(sample_report("big", 1000.0, 1000.005).pass);
    CHECK(!sample_report("big", 1000.0, 1000.02).pass);
}

TEST_CASE("seed override") {
    ::unsetenv("SCHLAFLI_SEED");
    CHECK(effective_seed(17) == 17);
    ::setenv("SCHLAFLI_SEED", "4242", 1);
    CHECK(effective_seed(17) == 4242);
    ::setenv("SCHLAFLI_SEED", "x1", 1);
    CHECK_THROWS_AS(effective_seed(17), DomainError);
    ::unsetenv("SCHLAFLI_SEED");
    CHECK(corruption_from_string("angle_sign") == CorruptionKind::angle_sign);
    CHECK_THROWS_AS(corruption_from_string("sideways"), DomainError);
}

TEST_CASE("verify_schlafli") {
    SUBCASE("rigid motion") {
        auto P = testsupport_klein_tet();
        Geodesic axis = geodesic_through(from_uhs(0.2, 0.1, 0.7), from_uhs(-0.3, 0.4, 1.9));
        DeformationFamily<schlafli::Polyhedron> fam(
            [&](double t) {
                Isometry g = screw_motion(axis, cplx(0.5 * t, 1.1 * t));
                std::vector<Point> v;
                for (const auto& p : P) v.push_back(g.apply(p));
                return schlafli::Polyhedron(v, tetra_faces);
            },
            0.0, 1.0);
        auto r = verify_schlafli(fam, {0.2});
        CHECK(r.pass);
        CHECK(std::abs(r.lhs) <= 1e-6);
        CHECK(std::abs(r.rhs) <= 1e-6);
    }
    SUBCASE("one moving vertex") {
        auto P = testsupport_klein_tet();
        std::vector<schlafli::VertexPath> paths;
        for (const auto& p : P) paths.push_back(schlafli::VertexPath::constant(p));
        paths[3].coef[1] = {0.2, -0.1, 0.3};
        auto fam = schlafli::polyhedron_family(paths, tetra_faces, 0.0, 1.0);
        auto r = verify_schlafli(fam, {0.1});
        CHECK(r.pass);
        CHECK(std::abs(r.lhs) > 1e-3);
    }
    SUBCASE("random families") {
        for (unsigned long long seed = 1; seed <= 10; ++seed) {
            auto r = verify_schlafli(random_tetrahedron_family(seed, 0.1), {0.1});
            CHECK(r.pass);
            CHECK(r.seed == seed);
        }
    }
    SUBCASE("negative controls") {
        auto fam = random_tetrahedron_family(3, 0.1);
        auto clean = verify_schlafli(fam, {0.1});
        auto terms = schlafli::schlafli_terms(fam, 0.1);
        std::size_t e = 0;
        for (std::size_t i = 0; i < terms.terms.size(); ++i)
            if (std::abs(terms.terms[i].angle_rate) > std::abs(terms.terms[e].angle_rate)) e = i;
        const auto& T = terms.terms[e];
        for (auto kind : {CorruptionKind::length, CorruptionKind::angle_path, CorruptionKind::angle_sign}) {
            VerifyOptions o{0.1};
            o.corruption = {kind, e, 1e-3};
            auto r = verify_schlafli(fam, o);
            CAPTURE(to_string(kind));
            CHECK(!r.pass);
            double predicted = *r.detail("predicted_gap");
            CHECK(r.abs_gap >= predicted - clean.abs_gap - 1e-9);
            if (kind == CorruptionKind::angle_path) CHECK(r.abs_gap >= 1e-3 * T.length / 4);
            if (kind == CorruptionKind::angle_sign) CHECK(std::abs(r.abs_gap - 2 * std::abs(T.term())) <= 1e-6);
            if (kind == CorruptionKind::length) CHECK(std::abs(r.abs_gap - 0.5e-3 * std::abs(T.angle_rate)) <= 1e-6);
        }
    }
}

TEST_CASE("verify_corollary2") {
    SUBCASE("octahedral spheres") {
        for (unsigned long long seed = 1; seed <= 5; ++seed) {
            auto r = verify_corollary2(random_octahedral_family(seed, 0.05), {0.05});
            CHECK(r.pass);
            CHECK(*r.detail("max_interior_deviation") <= 1e-9);
        }
    }
    SUBCASE("constant family") {
        auto fam = random_octahedral_family(9, 0.0);
        DeformationFamily<schlafli::PolyhedralSurfaceMap> still([&](double) { return fam.at(0.0); }, 0.0, 1.0);
        auto r = verify_corollary2(still, {0.0});
        CHECK(r.lhs == 0.0);
        CHECK(r.rhs == 0.0);
        CHECK(r.pass);
    }
    SUBCASE("subdivided faces are flat and contribute nothing") {
        DeformationFamily<schlafli::PolyhedralSurfaceMap> fam(
            [](double t) {
                std::array<K3, 3> M{K3{1 + 0.3 * t, 0.1 * t, 0}, K3{0, 1 - 0.2 * t, 0.2 * t}, K3{0.1 * t, 0, 1 + 0.1 * t}};
                auto pts = linear_map(cube_klein(0.35), M);
                return schlafli::surface_of(schlafli::Polyhedron(
                    [&] {
                        std::vector<Point> v;
                        for (const auto& k : pts) v.push_back(klein(k));
                        return v;
                    }(),
                    faces_from_normals(cube_klein(0.35), cube_normals())));
            },
            0.0, 1.0);
        auto r = verify_corollary2(fam, {0.1});
        CHECK(r.pass);
        CHECK(*r.detail("flat_edges") == 6.0);
        CHECK(*r.detail("flat_edge_terms") <= 1e-9);
    }
}

TEST_CASE("verify_main_finite") {
    SUBCASE("single leaf bent from flat") {
        auto s = single_leaf();
        auto r = verify_main_finite(s);
        double half_ell = 0.5 * std::log(2.5);
        CHECK(r.pass);
        CHECK(std::abs(r.lhs - half_ell) <= 1e-6);
        CHECK(std::abs(r.rhs - half_ell) <= 1e-9);
        CHECK(emit_report({r}, ReportFormat::text).find("not reproducible at desk scale") != std::string::npos);
    }
    SUBCASE("constant bending") {
        auto s = single_leaf();
        s.bend_coeffs = {{0.4}};
        s.t0 = 0.05;
        auto r = verify_main_finite(s);
        CHECK(r.pass);
        CHECK(std::abs(r.lhs) <= 1e-9);
        CHECK(std::abs(r.rhs) <= 1e-9);
    }
    SUBCASE("five leaves") {
        auto r = verify_main_finite(random_pleat_scenario(5, 5));
        CHECK(r.pass);
        CHECK(*r.detail("leaves") == 5.0);
        CHECK(*r.detail("fan_length_residual") <= 1e-7);
        CHECK(*r.detail("grouped_vs_fd") <= 1e-6);
    }
    SUBCASE("formula side is linear in the cocycle") {
        auto s = random_pleat_scenario(11, 4);
        s.closure = false;
        std::vector<double> b{0.3, -0.5, 0.7, 0.2};
        for (std::size_t j = 0; j < 4; ++j) s.bend_coeffs[j] = {0.0, b[j]};
        lamination::TrainTrack track;
        for (int j = 0; j < 4; ++j) track.branches.push_back({std::log(2.5), true});
        double expect = 0.5 * lamination::cocycle_length(track, {b});
        for (double t0 : {0.01, 0.05, 0.1}) {
            s.t0 = t0;
            CHECK(std::abs(verify_main_finite(s).rhs - expect) <= 1e-9);
        }
    }
}
