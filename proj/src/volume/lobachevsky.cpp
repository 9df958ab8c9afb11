#include "hyp/volume/lobachevsky.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hyp/kernel/errors.hpp"

namespace hyp::volume {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTerms = 40;

// zeta(2k) / (k (2k+1)); zeta(2k) -> 1 so the coefficients decay like 1/(2k^2)
std::array<double, kTerms + 1> make_coeffs() {
    std::array<double, kTerms + 1> c{};
    for (int k = 1; k <= kTerms; ++k) c[k] = std::riemann_zeta(2.0 * k) / (k * (2.0 * k + 1.0));
    return c;
}

const std::array<double, kTerms + 1>& coeffs() {
    static const auto c = make_coeffs();
    return c;
}

} // namespace

double lobachevsky(double theta) {
    // reduce to [-pi/2, pi/2]
    double x = std::remainder(theta, kPi);
    double sign = x < 0 ? -1.0 : 1.0;
    x = std::abs(x);
    if (x == 0.0) return 0.0;
    // Lambda(x) = x - x log(2x) + x sum_k zeta(2k)/(k(2k+1)) (x/pi)^{2k}
    // on x <= pi/2 the ratio of successive terms is below 1/4, so 40 terms leave < 1e-25
    const auto& c = coeffs();
    double r = (x / kPi) * (x / kPi);
    double s = 0.0;
    for (int k = kTerms; k >= 1; --k) s = (s + c[k]) * r;
    return sign * (x - x * std::log(2.0 * x) + x * s);
}

double ideal_tet_volume(double alpha, double beta, double gamma) {
    if (!(alpha > 0 && beta > 0 && gamma > 0)) throw DomainError("ideal_tet_volume: angles must be positive");
    if (std::abs(alpha + beta + gamma - kPi) > 1e-9) throw DomainError("ideal_tet_volume: angles must sum to pi");
    return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

double regular_ideal_volume() { return 3.0 * lobachevsky(kPi / 3.0); }

} // namespace hyp::volume
