#pragma once

#include <functional>
#include <string>
#include <utility>

#include "hyp/kernel/errors.hpp"

namespace hyp::harness {

// Path t -> payload on [t_min, t_max]. Evaluation must be deterministic and
// safe to call from several threads.
template <class T>
class DeformationFamily {
public:
    DeformationFamily() = default;
    DeformationFamily(std::function<T(double)> eval, double t_min, double t_max, int degree = -1)
        : eval_(std::move(eval)), t_min_(t_min), t_max_(t_max), degree_(degree) {}

    T at(double t) const {
        if (t < t_min_ - 1e-15 || t > t_max_ + 1e-15)
            throw DomainError("DeformationFamily: t outside the parameter domain");
        return eval_(t);
    }
    T operator()(double t) const { return at(t); }

    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    int degree() const { return degree_; }  // -1 when not polynomial

    std::string id;
    unsigned long long seed = 0;

private:
    std::function<T(double)> eval_;
    double t_min_ = 0.0, t_max_ = 1.0;
    int degree_ = -1;
};

} // namespace hyp::harness
