#include "hyp/pleated/closure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hyp/kernel/angles.hpp"
#include "hyp/kernel/errors.hpp"
#include "hyp/volume/chain.hpp"

namespace hyp::pleated {

using nlohmann::json;

double PleatScenario::bend(std::size_t leaf, double t) const {
    const auto& c = bend_coeffs.at(leaf);
    double v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * t + c[i];
    return v;
}

std::vector<double> PleatScenario::bends(double t) const {
    std::vector<double> b(bend_coeffs.size());
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = bend(j, t);
    return b;
}

int PleatScenario::degree() const {
    int d = 0;
    for (const auto& c : bend_coeffs) d = std::max(d, static_cast<int>(c.size()) - 1);
    return d;
}

namespace {

json point_json(const Point& p) {
    UHSPoint u = to_uhs(p);
    return json{{"uhs", json::array({u.w.real(), u.w.imag(), u.h})}};
}

Point point_from(const json& j) {
    if (j.is_object() && j.contains("uhs")) {
        const json& u = j.at("uhs");
        if (u.size() != 3) throw DomainError("scenario: uhs point needs [x, y, h]");
        return from_uhs(u[0].get<double>(), u[1].get<double>(), u[2].get<double>());
    }
    Vertex v = volume::vertex_from_json(j);
    if (is_ideal(v)) throw DomainError("scenario: apex must be a finite point");
    return std::get<Point>(v);
}

} // namespace

json scenario_to_json(const PleatScenario& s) {
    return json{{"id", s.id},
                {"chart", {{"sigma", s.chart.sigma}, {"h_bottom", s.chart.h_bottom}, {"h_top", s.chart.h_top}}},
                {"bends", s.bend_coeffs},
                {"x", point_json(s.x)},
                {"y", point_json(s.y)},
                {"closure", s.closure},
                {"t0", s.t0},
                {"h", s.h},
                {"tol", s.tol},
                {"t_max", s.t_max},
                {"seed", s.seed}};
}

PleatScenario scenario_from_json(const json& j) {
    PleatScenario s;
    s.id = j.value("id", s.id);
    const json& c = j.at("chart");
    s.chart.sigma = c.at("sigma").get<std::vector<double>>();
    s.chart.h_bottom = c.value("h_bottom", 1.0);
    s.chart.h_top = c.value("h_top", 2.0);
    s.chart.validate();
    s.bend_coeffs = j.at("bends").get<std::vector<std::vector<double>>>();
    if (s.bend_coeffs.size() != s.chart.leaf_count())
        throw DomainError("scenario: one bend polynomial per leaf expected");
    s.x = point_from(j.at("x"));
    s.y = point_from(j.at("y"));
    s.closure = j.value("closure", true);
    s.t0 = j.value("t0", 0.0);
    s.h = j.value("h", 1e-4);
    s.tol = j.value("tol", 1e-6);
    s.t_max = j.value("t_max", 0.2);
    s.seed = j.value("seed", 0ull);
    return s;
}

AngleLockedSolver::AngleLockedSolver(const PleatScenario& s, const ClosureOptions& opt) : sc_(s), opt_(opt) {
    PrismDecomposition d0 = prism_decompose(PleatedRectangle(sc_.chart, sc_.bends(0.0)), sc_.x, sc_.y);
    auto verts = d0.surface_vertices();
    nv_ = verts.size();
    m_ = d0.rect.bottom().size();
    faces_ = d0.surface_faces();
    edges_ = schlafli::derive_edges(faces_, nv_);
    leaf_of_edge_.assign(edges_.size(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        std::size_t a = std::min(edges_[e].a, edges_[e].b), b = std::max(edges_[e].a, edges_[e].b);
        if (a >= 1 && a + 1 < m_ && b == a + m_) leaf_of_edge_[e] = static_cast<int>(a) - 1;
    }
    locked_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& E = edges_[e];
        locked_[e] = oriented_external_angle(verts[E.a], verts[E.b], verts[E.c], verts[E.d]);
    }
    std::vector<double> z0(3 * nv_);
    for (std::size_t i = 0; i < nv_; ++i)
        for (int k = 0; k < 3; ++k) z0[3 * i + k] = verts[i][k + 1];
    cache_[0] = z0;
}

std::size_t AngleLockedSolver::equations() const {
    std::size_t quads = 0;
    for (const auto& f : faces_) quads += f.size() == 4;
    return edges_.size() + quads;
}

std::vector<double> AngleLockedSolver::residual_of(const std::vector<double>& z, double t) const {
    std::vector<Point> v(nv_);
    for (std::size_t i = 0; i < nv_; ++i) v[i] = Point::from_spatial(z[3 * i], z[3 * i + 1], z[3 * i + 2]);
    std::vector<double> r;
    r.reserve(equations());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& E = edges_[e];
        double target = leaf_of_edge_[e] >= 0 ? sc_.bend(static_cast<std::size_t>(leaf_of_edge_[e]), t) : locked_[e];
        double a = oriented_external_angle(v[E.a], v[E.b], v[E.c], v[E.d]);
        r.push_back(unwrap_near(a, target) - target);
    }
    for (const auto& f : faces_) {
        if (f.size() != 4) continue;
        const Vec4 &a = v[f[0]].coords(), &b = v[f[1]].coords(), &c = v[f[2]].coords(), &d = v[f[3]].coords();
        r.push_back(det4(a, b, c, d) / (euclid_norm(a) * euclid_norm(b) * euclid_norm(c) * euclid_norm(d)));
    }
    return r;
}

std::vector<double> AngleLockedSolver::residual(const PrismDecomposition& d, double t) const {
    auto verts = d.surface_vertices();
    if (verts.size() != nv_) throw DomainError("residual: decomposition does not match the scenario");
    std::vector<double> z(3 * nv_);
    for (std::size_t i = 0; i < nv_; ++i)
        for (int k = 0; k < 3; ++k) z[3 * i + k] = verts[i][k + 1];
    return residual_of(z, t);
}

namespace {

Eigen::MatrixXd jacobian(const std::function<std::vector<double>(const std::vector<double>&)>& F,
                         const std::vector<double>& z, std::size_t rows, double step) {
    Eigen::MatrixXd J(rows, z.size());
    std::vector<double> w = z;
    for (std::size_t i = 0; i < z.size(); ++i) {
        w[i] = z[i] + step;
        auto fp = F(w);
        w[i] = z[i] - step;
        auto fm = F(w);
        w[i] = z[i];
        for (std::size_t k = 0; k < rows; ++k) J(k, i) = (fp[k] - fm[k]) / (2 * step);
    }
    return J;
}

double sum_sq(const std::vector<double>& r) {
    double m = 0;
    for (double x : r) m += x * x;
    return m;
}

double max_abs(const std::vector<double>& r) {
    double m = 0;
    for (double x : r) m = std::max(m, std::abs(x));
    return m;
}

} // namespace

int AngleLockedSolver::jacobian_rank() const {
    auto F = [&](const std::vector<double>& w) { return residual_of(w, 0.0); };
    Eigen::MatrixXd J = jacobian(F, cache_.at(0), equations(), opt_.jac_step);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(J);
    cod.setThreshold(1e-9);
    return static_cast<int>(cod.rank());
}

std::vector<double> AngleLockedSolver::jacobian_singular_values() const {
    auto F = [&](const std::vector<double>& w) { return residual_of(w, 0.0); };
    Eigen::MatrixXd J = jacobian(F, cache_.at(0), equations(), opt_.jac_step);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
    Eigen::VectorXd s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

// Gauss-Newton with minimum-norm steps; the isometry gauge is left free.
std::vector<double> AngleLockedSolver::newton(std::vector<double> z, double t) const {
    auto F = [&](const std::vector<double>& w) { return residual_of(w, t); };
    auto r = F(z);
    double err = max_abs(r), merit = sum_sq(r);
    for (int it = 0; it < opt_.max_iter && err > opt_.tol; ++it) {
        Eigen::MatrixXd J = jacobian(F, z, r.size(), opt_.jac_step);
        Eigen::VectorXd rv = Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));
        Eigen::VectorXd dz = J.completeOrthogonalDecomposition().solve(-rv);
        double lambda = 1.0;
        bool improved = false;
        for (int ls = 0; ls < 30; ++ls, lambda *= 0.5) {
            std::vector<double> w = z;
            for (std::size_t i = 0; i < z.size(); ++i) w[i] += lambda * dz[static_cast<Eigen::Index>(i)];
            std::vector<double> rw;
            try {
                rw = F(w);
            } catch (const GeometryError&) {
                continue;
            }
            double e = sum_sq(rw);
            if (e < merit) {
                z = std::move(w);
                r = std::move(rw);
                merit = e;
                err = max_abs(r);
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    if (err > std::max(opt_.tol, 1e-11))
        throw GeometryError("angle-locked closure did not converge at t = " + std::to_string(t) +
                            " (residual " + std::to_string(err) + ")");
    return z;
}

std::vector<double> AngleLockedSolver::grid_solution(int k) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
    }
    std::vector<double> prev = grid_solution(k - 1);
    std::vector<double> z = newton(prev, k * opt_.max_step);
    std::lock_guard<std::mutex> lk(mu_);
    return cache_.emplace(k, std::move(z)).first->second;
}

PrismDecomposition AngleLockedSolver::assemble(const std::vector<double>& z) const {
    std::vector<Point> v(nv_);
    for (std::size_t i = 0; i < nv_; ++i) v[i] = Point::from_spatial(z[3 * i], z[3 * i + 1], z[3 * i + 2]);
    std::vector<Point> bottom(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m_));
    std::vector<Point> top(v.begin() + static_cast<std::ptrdiff_t>(m_), v.begin() + static_cast<std::ptrdiff_t>(2 * m_));
    return prism_decompose(PleatedRectangle::from_points(bottom, top), v[2 * m_], v[2 * m_ + 1]);
}

PrismDecomposition AngleLockedSolver::solve(double t) const {
    if (t < 0) throw DomainError("angle-locked family is defined for t >= 0");
    int k = static_cast<int>(std::floor(t / opt_.max_step + 1e-12));
    std::vector<double> z = grid_solution(k);
    if (std::abs(t - k * opt_.max_step) > 1e-15) z = newton(z, t);
    return assemble(z);
}

harness::DeformationFamily<PrismDecomposition> pleat_family(const PleatScenario& s, const ClosureOptions& opt) {
    harness::DeformationFamily<PrismDecomposition> fam;
    if (s.closure) {
        auto solver = std::make_shared<AngleLockedSolver>(s, opt);
        fam = harness::DeformationFamily<PrismDecomposition>([solver](double t) { return solver->solve(t); }, 0.0,
                                                             s.t_max, -1);
    } else {
        fam = harness::DeformationFamily<PrismDecomposition>(
            [s](double t) { return prism_decompose(PleatedRectangle(s.chart, s.bends(t)), s.x, s.y); }, -s.t_max,
            s.t_max, s.degree());
    }
    fam.id = s.id;
    fam.seed = s.seed;
    return fam;
}

} // namespace hyp::pleated
