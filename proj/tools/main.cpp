#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyp/harness/scenario_io.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/lamination/track.hpp"
#include "hyp/volume/chain.hpp"

using namespace hyp;
using namespace hyp::harness;

namespace {

struct Overrides {
    std::optional<double> t0, h, tol;
};

void apply(LoadedScenario& s, const Overrides& o) {
    if (o.t0) s.options.t0 = *o.t0;
    if (o.h) s.options.fd.h = *o.h;
    if (o.tol) s.options.tol_abs = *o.tol;
    if (s.pleat) {
        if (o.t0) s.pleat->t0 = *o.t0;
        if (o.h) s.pleat->h = *o.h;
        if (o.tol) s.pleat->tol = *o.tol;
    }
}

ReportFormat parse_format(const std::string& f) { return f == "csv" ? ReportFormat::csv : ReportFormat::text; }

// Seeded scenarios run by `report` when no files are given.
std::vector<LoadedScenario> builtin_suite() {
    std::vector<LoadedScenario> v;
    for (unsigned long long s = 1; s <= 5; ++s) {
        LoadedScenario l;
        l.kind = "polyhedron_family";
        l.options.t0 = 0.1;
        l.polyhedron = random_tetrahedron_family(effective_seed(s), 0.1);
        v.push_back(l);
    }
    for (unsigned long long s = 1; s <= 3; ++s) {
        LoadedScenario l;
        l.kind = "surface_family";
        l.options.t0 = 0.05;
        l.surface = random_octahedral_family(effective_seed(s), 0.05);
        v.push_back(l);
    }
    LoadedScenario p;
    p.kind = "pleat_scenario";
    p.pleat = random_pleat_scenario(effective_seed(5), 5);
    v.push_back(p);
    return v;
}

int emit(const std::vector<VerificationReport>& rs, const std::string& format, const std::string& out) {
    std::string text = emit_report(rs, parse_format(format));
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw DomainError("cannot write " + out);
        f << text;
    }
    for (const auto& r : rs)
        if (!r.pass) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schlafli-type volume variation checks for hyperbolic polyhedra and pleated surfaces"};
    app.require_subcommand(1);

    Overrides ov;
    std::string format = "text", out, file;
    std::vector<std::string> files;

    auto* verify = app.add_subcommand("verify", "run one verification scenario");
    verify->require_subcommand(1);
    std::string kind;
    for (const char* name : {"schlafli", "corollary2", "main"}) {
        auto* c = verify->add_subcommand(name, std::string("verify a ") + name + " scenario file");
        c->set_help_flag("--help", "print this help message and exit");
        c->add_option("file", file, "scenario JSON")->required()->check(CLI::ExistingFile);
        c->add_option("--t0", ov.t0, "base parameter");
        c->add_option("--h", ov.h, "finite-difference step");
        c->add_option("--tol", ov.tol, "absolute tolerance");
        c->add_option("--format", format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
        c->callback([&kind, name] { kind = name; });
    }

    auto* vol = app.add_subcommand("volume", "signed volume of a chain");
    vol->add_option("file", file, "chain JSON")->required()->check(CLI::ExistingFile);

    auto* len = app.add_subcommand("length", "length of a cocycle on a train track");
    len->add_option("file", file, "track JSON with weights")->required()->check(CLI::ExistingFile);

    auto* rep = app.add_subcommand("report", "run scenarios (or the built-in suite) and write a report");
    rep->add_option("--format", format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
    rep->add_option("--out", out, "output path (stdout when omitted)");
    rep->add_option("files", files, "scenario JSON files")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help and version exit 0, usage errors count as bad input
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            LoadedScenario s = load_scenario_file(file);
            const std::string expect = kind == "schlafli"     ? "polyhedron_family"
                                       : kind == "corollary2" ? "surface_family"
                                                              : "pleat_scenario";
            if (s.kind != expect) throw DomainError("verify " + kind + " needs a " + expect + " file, got " + s.kind);
            apply(s, ov);
            return emit({run_scenario(s)}, format, "");
        }
        if (vol->parsed()) {
            auto chain = volume::chain_from_json(read_json_file(file));
            std::printf("%.17g\n", volume::chain_volume(chain));
            return 0;
        }
        if (len->parsed()) {
            auto j = read_json_file(file);
            auto track = lamination::track_from_json(j);
            auto c = lamination::cocycle_from_json(j);
            auto check = lamination::validate_track(track, c);
            if (!check.pass()) std::fprintf(stderr, "warning: switch conditions fail (max %.3g)\n", check.max_violation);
            std::printf("%.17g\n", lamination::cocycle_length(track, c));
            return 0;
        }
        if (rep->parsed()) {
            std::vector<VerificationReport> rs;
            if (files.empty()) {
                for (const auto& s : builtin_suite()) rs.push_back(run_scenario(s));
            } else {
                for (const auto& f : files) rs.push_back(run_scenario(load_scenario_file(f)));
            }
            return emit(rs, format, out);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
