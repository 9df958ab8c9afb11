#include "hyp/harness/scenario_io.hpp"

#include <fstream>

#include "hyp/kernel/errors.hpp"
#include "hyp/schlafli/schlafli.hpp"

namespace hyp::harness {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError(path + ": " + e.what());
    }
}

schlafli::VertexPath path_from_json(const json& j) {
    if (j.contains("coef")) {
        schlafli::VertexPath p;
        const json& c = j.at("coef");
        if (c.size() > 4) throw DomainError("vertex path: at most cubic");
        for (std::size_t i = 0; i < c.size(); ++i) p.coef[i] = c[i].get<std::array<double, 3>>();
        return p;
    }
    if (j.contains("spatial")) {
        auto x = j.at("spatial").get<std::array<double, 3>>();
        return schlafli::VertexPath::constant(Point::from_spatial(x[0], x[1], x[2]));
    }
    if (j.contains("uhs")) {
        auto u = j.at("uhs").get<std::array<double, 3>>();
        return schlafli::VertexPath::constant(from_uhs(u[0], u[1], u[2]));
    }
    throw DomainError("vertex path: expected coef, spatial or uhs");
}

json path_to_json(const schlafli::VertexPath& p) {
    return json{{"coef", p.coef}};
}

namespace {

VerifyOptions options_from(const json& j) {
    VerifyOptions o;
    o.t0 = j.value("t0", 0.0);
    o.fd.h = j.value("h", 1e-4);
    o.fd.one_sided = !j.value("central", false);
    o.tol_abs = j.value("tol", 1e-6);
    o.tol_rel = j.value("tol_rel", 1e-5);
    if (j.contains("corruption")) {
        const json& c = j.at("corruption");
        o.corruption.kind = corruption_from_string(c.at("kind").get<std::string>());
        o.corruption.edge = c.value("edge", std::size_t{0});
        o.corruption.delta = c.value("delta", 1e-3);
    }
    return o;
}

std::vector<schlafli::VertexPath> paths_from(const json& j) {
    std::vector<schlafli::VertexPath> v;
    for (const auto& p : j) v.push_back(path_from_json(p));
    return v;
}

} // namespace

LoadedScenario load_scenario(const json& j) {
    LoadedScenario s;
    s.kind = j.at("kind").get<std::string>();
    s.options = options_from(j);
    const double t0 = s.options.t0, t_max = j.value("t_max", t0 + 1.0);
    const std::string gen = j.value("generator", "");
    const unsigned long long seed = effective_seed(j.value("seed", 0ull));
    std::string id = j.value("id", "");

    if (s.kind == "polyhedron_family") {
        if (gen == "random_tetrahedron") {
            s.polyhedron = random_tetrahedron_family(seed, t0, s.options.fd.h);
        } else if (gen.empty()) {
            auto faces = j.at("faces").get<std::vector<std::vector<std::size_t>>>();
            s.polyhedron = schlafli::polyhedron_family(paths_from(j.at("vertices")), faces, j.value("t_min", 0.0), t_max);
            s.polyhedron->seed = seed;
        } else {
            throw DomainError("unknown polyhedron generator " + gen);
        }
        if (!id.empty()) s.polyhedron->id = id;
    } else if (s.kind == "surface_family") {
        if (gen == "random_octahedron") {
            s.surface = random_octahedral_family(seed, t0, s.options.fd.h);
        } else if (gen.empty()) {
            auto tris = j.at("triangles").get<std::vector<schlafli::PolyhedralSurfaceMap::Tri>>();
            std::optional<schlafli::VertexPath> apex;
            if (j.contains("apex")) apex = path_from_json(j.at("apex"));
            s.surface = schlafli::surface_family(paths_from(j.at("vertices")), tris, j.value("t_min", 0.0), t_max,
                                                 apex ? &*apex : nullptr);
            s.surface->seed = seed;
        } else {
            throw DomainError("unknown surface generator " + gen);
        }
        if (!id.empty()) s.surface->id = id;
    } else if (s.kind == "pleat_scenario") {
        if (gen == "random_pleat") {
            s.pleat = random_pleat_scenario(seed, j.at("leaves").get<std::size_t>());
            if (j.contains("t0")) s.pleat->t0 = t0;
            if (j.contains("h")) s.pleat->h = s.options.fd.h;
            if (j.contains("tol")) s.pleat->tol = s.options.tol_abs;
        } else if (gen.empty()) {
            s.pleat = pleated::scenario_from_json(j);
            s.pleat->seed = seed;
        } else {
            throw DomainError("unknown pleat generator " + gen);
        }
        if (!id.empty()) s.pleat->id = id;
    } else {
        throw DomainError("unknown scenario kind " + s.kind);
    }
    return s;
}

LoadedScenario load_scenario_file(const std::string& path) { return load_scenario(read_json_file(path)); }

VerificationReport run_scenario(const LoadedScenario& s) {
    if (s.polyhedron) return verify_schlafli(*s.polyhedron, s.options);
    if (s.surface) return verify_corollary2(*s.surface, s.options);
    if (s.pleat) return verify_main_finite(*s.pleat);
    throw DomainError("empty scenario");
}

} // namespace hyp::harness
