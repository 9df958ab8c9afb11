#pragma once

#include <functional>
#include <vector>

namespace hyp::harness {

struct FdOptions {
    double h = 1e-4;
    bool one_sided = true;  // right derivative; central differences otherwise
    // error indicator / max(1, |estimate|) above which the tableau counts as divergent
    double divergence_ratio = 1e-2;
};

struct FdResult {
    double value = 0.0;
    double error = 0.0;  // |last - previous| diagonal entry of the tableau
    double h = 0.0;
    bool converged = true;
};

// Richardson-extrapolated difference quotient. The one-sided form samples
// f at t0 + {0, h, 2h, 4h, 8h}; the central form at t0 +- {h, 2h, 4h, 8h}.
// Throws DomainError on non-finite samples.
FdResult fd_derivative(const std::function<double(double)>& f, double t0, const FdOptions& opt = {});

// Vector version: f returns all components at once, so expensive geometry
// is evaluated once per sample time. Samples are taken concurrently.
std::vector<FdResult> fd_derivative_multi(const std::function<std::vector<double>(double)>& f, double t0,
                                          const FdOptions& opt = {});

// Sample offsets (in units of t) used by the chosen scheme, t0 excluded.
std::vector<double> fd_offsets(const FdOptions& opt);

} // namespace hyp::harness
