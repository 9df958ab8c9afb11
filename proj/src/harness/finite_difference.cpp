#include "hyp/harness/finite_difference.hpp"

#include <cmath>
#include <future>

#include "hyp/kernel/errors.hpp"

namespace hyp::harness {

namespace {

constexpr int kLevels = 4;  // steps 8h, 4h, 2h, h

FdResult extrapolate(const double (&d)[kLevels], double ratio_base, const FdOptions& opt) {
    double R[kLevels][kLevels];
    for (int i = 0; i < kLevels; ++i) {
        R[i][0] = d[i];
        double p = 1.0;
        for (int j = 1; j <= i; ++j) {
            p *= ratio_base;
            R[i][j] = (p * R[i][j - 1] - R[i - 1][j - 1]) / (p - 1.0);
        }
    }
    FdResult r;
    r.value = R[kLevels - 1][kLevels - 1];
    r.error = std::abs(R[kLevels - 1][kLevels - 1] - R[kLevels - 2][kLevels - 2]);
    r.h = opt.h;
    r.converged = r.error <= opt.divergence_ratio * std::max(1.0, std::abs(r.value));
    return r;
}

void check_finite(double x) {
    if (!std::isfinite(x)) throw DomainError("fd_derivative: non-finite sample");
}

} // namespace

std::vector<double> fd_offsets(const FdOptions& opt) {
    std::vector<double> off;
    for (int k : {8, 4, 2, 1}) {
        off.push_back(k * opt.h);
        if (!opt.one_sided) off.push_back(-k * opt.h);
    }
    return off;
}

std::vector<FdResult> fd_derivative_multi(const std::function<std::vector<double>(double)>& f, double t0,
                                          const FdOptions& opt) {
    if (!(opt.h > 0)) throw DomainError("fd_derivative: step must be positive");
    std::vector<double> off = fd_offsets(opt);
    std::vector<std::future<std::vector<double>>> jobs;
    for (double o : off) jobs.push_back(std::async(std::launch::async, f, t0 + o));
    std::vector<double> f0;
    if (opt.one_sided) f0 = f(t0);
    std::vector<std::vector<double>> vals;
    for (auto& j : jobs) vals.push_back(j.get());

    std::size_t n = opt.one_sided ? f0.size() : vals[0].size();
    for (const auto& v : vals)
        if (v.size() != n) throw DomainError("fd_derivative: sample size mismatch");
    std::vector<FdResult> out(n);
    for (std::size_t c = 0; c < n; ++c) {
        double d[kLevels];
        if (opt.one_sided) {
            check_finite(f0[c]);
            for (int i = 0; i < kLevels; ++i) {
                check_finite(vals[i][c]);
                d[i] = (vals[i][c] - f0[c]) / off[i];
            }
            out[c] = extrapolate(d, 2.0, opt);
        } else {
            for (int i = 0; i < kLevels; ++i) {
                double fp = vals[2 * i][c], fm = vals[2 * i + 1][c];
                check_finite(fp);
                check_finite(fm);
                d[i] = (fp - fm) / (2.0 * off[2 * i]);
            }
            out[c] = extrapolate(d, 4.0, opt);
        }
    }
    return out;
}

FdResult fd_derivative(const std::function<double(double)>& f, double t0, const FdOptions& opt) {
    return fd_derivative_multi([&](double t) { return std::vector<double>{f(t)}; }, t0, opt)[0];
}

} // namespace hyp::harness
