#pragma once

#include <random>

#include "hyp/kernel/isometry.hpp"
#include "hyp/kernel/point.hpp"

namespace testsupport {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
    int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); }
};

inline hyp::Point random_point(Rng& r, double radius = 1.5) {
    return hyp::Point::from_spatial(r.uniform(-radius, radius), r.uniform(-radius, radius),
                                    r.uniform(-radius, radius));
}

inline hyp::IdealPoint random_ideal(Rng& r) {
    return hyp::IdealPoint(hyp::cplx(r.uniform(-2, 2), r.uniform(-2, 2)));
}

inline hyp::Isometry random_isometry(Rng& r, double spread = 1.0) {
    auto c = [&] { return hyp::cplx(r.uniform(-spread, spread), r.uniform(-spread, spread)); };
    for (;;) {
        hyp::cplx a = 1.0 + c(), b = c(), cc = c(), d = 1.0 + c();
        if (std::abs(a * d - b * cc) > 0.2) return hyp::Isometry(a, b, cc, d);
    }
}

} // namespace testsupport
