#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyp/harness/family.hpp"
#include "hyp/harness/finite_difference.hpp"
#include "hyp/lamination/track.hpp"
#include "hyp/pleated/closure.hpp"
#include "hyp/pleated/prism.hpp"
#include "hyp/schlafli/polyhedron.hpp"
#include "hyp/schlafli/surface.hpp"

namespace hyp::harness {

// Negative-control hooks applied to one edge inside the formula side.
//   length:     l(e) + delta on every sample
//   angle_path: theta_e(t) + delta (t - t0)
//   angle_sign: theta_e(t) reflected about theta_e(t0)
enum class CorruptionKind { none, length, angle_path, angle_sign };

struct Corruption {
    CorruptionKind kind = CorruptionKind::none;
    std::size_t edge = 0;
    double delta = 1e-3;
};

std::string to_string(CorruptionKind k);
CorruptionKind corruption_from_string(const std::string& s);

struct VerifyOptions {
    double t0 = 0.0;
    FdOptions fd{};
    double tol_abs = 1e-6;
    double tol_rel = 1e-5;
    Corruption corruption{};
};

// lhs: finite-difference derivative of the volume; rhs: the formula.
struct VerificationReport {
    std::string scenario;
    double lhs = 0, rhs = 0;
    double abs_gap = 0, rel_gap = 0;
    double h = 0;
    double tol_abs = 1e-6, tol_rel = 1e-5;
    double fd_error = 0;
    unsigned long long seed = 0;
    bool checks_ok = true;  // attached sub-checks (edge sums, identities)
    bool pass = false;
    std::vector<std::pair<std::string, double>> details;
    std::vector<std::string> notes;

    // recomputes gaps and the verdict from lhs, rhs and the tolerances
    void finalize();
    double tolerance() const;
    std::optional<double> detail(const std::string& key) const;
};

VerificationReport verify_schlafli(const DeformationFamily<schlafli::Polyhedron>& family, const VerifyOptions& opt = {});

VerificationReport verify_corollary2(const DeformationFamily<schlafli::PolyhedralSurfaceMap>& family,
                                     const VerifyOptions& opt = {});

// Track with one closed branch per leaf, lengths from the configuration at t.
lamination::TrainTrack leaf_track(const pleated::PrismDecomposition& d);

extern const char* const kSurrogateStatement;

// Finite-pleating instance of the main formula. The report carries the
// grouped-term and fan-identity sub-reports as details.
VerificationReport verify_main_finite(const pleated::PleatScenario& s, const pleated::ClosureOptions& copt = {});

enum class ReportFormat { csv, text };
std::string emit_report(const std::vector<VerificationReport>& rs, ReportFormat format);

// SCHLAFLI_SEED, when set, replaces the recorded seed.
unsigned long long effective_seed(unsigned long long recorded);

// Seeded generators used by the CLI and the acceptance runner.
DeformationFamily<schlafli::Polyhedron> random_tetrahedron_family(unsigned long long seed, double t0, double h = 1e-4);
DeformationFamily<schlafli::PolyhedralSurfaceMap> random_octahedral_family(unsigned long long seed, double t0,
                                                                          double h = 1e-4);
pleated::PleatScenario random_pleat_scenario(unsigned long long seed, std::size_t leaves, bool closure = true);

} // namespace hyp::harness
