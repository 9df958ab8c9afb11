#include "hyp/lamination/track.hpp"

#include <cmath>
#include <numbers>

#include "hyp/kernel/errors.hpp"
#include "hyp/volume/chain.hpp"

namespace hyp::lamination {

namespace {

void check_indexed(const TrainTrack& t, const TransverseCocycle& c) {
    if (c.weights.size() != t.branches.size())
        throw GeometryError("cocycle has " + std::to_string(c.weights.size()) + " weights for " +
                            std::to_string(t.branches.size()) + " branches");
}

double circle_distance(double x) {
    const double tau = 2 * std::numbers::pi;
    return std::abs(x - tau * std::round(x / tau));
}

} // namespace

TransverseCocycle TransverseCocycle::operator+(const TransverseCocycle& o) const {
    if (o.weights.size() != weights.size() || o.ring != ring) throw GeometryError("cocycle sum: mismatched cocycles");
    TransverseCocycle r = *this;
    for (std::size_t i = 0; i < weights.size(); ++i) r.weights[i] += o.weights[i];
    return r;
}

TransverseCocycle TransverseCocycle::operator*(double a) const {
    TransverseCocycle r = *this;
    for (double& w : r.weights) w *= a;
    return r;
}

MeasuredLamination::MeasuredLamination(TransverseCocycle c) : c_(std::move(c)) {
    for (double w : c_.weights)
        if (!(w >= 0)) throw DomainError("measured lamination: negative weight");
}

TrackReport validate_track(const TrainTrack& t, const TransverseCocycle& c) {
    check_indexed(t, c);
    TrackReport rep;
    std::vector<int> seen(2 * t.branches.size(), 0);
    for (const auto& s : t.switches) {
        for (const auto* side : {&s.in, &s.out})
            for (const auto& e : *side) {
                if (e.branch >= t.branches.size() || (e.end != 0 && e.end != 1))
                    throw GeometryError("switch refers to a missing branch end");
                ++seen[2 * e.branch + e.end];
            }
    }
    for (std::size_t b = 0; b < t.branches.size(); ++b)
        for (int e = 0; e < 2; ++e) {
            int want = t.branches[b].closed ? 0 : 1;
            if (seen[2 * b + e] != want) {
                rep.well_formed = false;
                rep.problems.push_back("branch " + std::to_string(b) + " end " + std::to_string(e) + " attached " +
                                       std::to_string(seen[2 * b + e]) + " times");
            }
        }
    for (std::size_t i = 0; i < t.switches.size(); ++i) {
        volume::CompensatedSum d;
        for (const auto& e : t.switches[i].in) d.add(c.weights[e.branch]);
        for (const auto& e : t.switches[i].out) d.add(-c.weights[e.branch]);
        double v = c.ring == ValueRing::Circle ? circle_distance(d.value()) : std::abs(d.value());
        if (v > rep.max_violation) {
            rep.max_violation = v;
            rep.worst_switch = i;
        }
    }
    return rep;
}

double cocycle_eval(const TrainTrack& t, const TransverseCocycle& c, const std::vector<std::size_t>& crossings) {
    check_indexed(t, c);
    volume::CompensatedSum s;
    for (std::size_t b : crossings) {
        if (b >= t.branches.size()) throw GeometryError("crossing list names a missing branch");
        s.add(c.weights[b]);
    }
    return s.value();
}

double reduce(ValueRing ring, double x) {
    if (ring == ValueRing::Real) return x;
    const double tau = 2 * std::numbers::pi;
    double r = x - tau * std::floor(x / tau);  // [0, 2 pi)
    return r > std::numbers::pi ? r - tau : r;
}

double cocycle_length(const TrainTrack& t, const TransverseCocycle& c) {
    check_indexed(t, c);
    volume::CompensatedSum s;
    for (std::size_t b = 0; b < t.branches.size(); ++b) {
        double l = t.branches[b].length;
        if (!(l > 0) || !std::isfinite(l)) throw DomainError("branch " + std::to_string(b) + " has no length");
        s.add(c.weights[b] * l);
    }
    return s.value();
}

TransverseCocycle scc_cocycle(const TrainTrack& t, const std::vector<Traversal>& curve, double w) {
    if (curve.empty()) throw GeometryError("scc_cocycle: empty curve");
    for (const auto& tr : curve)
        if (tr.branch >= t.branches.size()) throw GeometryError("scc_cocycle: missing branch");
    if (curve.size() == 1 && t.branches[curve[0].branch].closed) {
        TransverseCocycle c{std::vector<double>(t.branches.size(), 0.0), ValueRing::Real};
        c.weights[curve[0].branch] = w;
        return c;
    }
    auto on_side = [](const std::vector<BranchEnd>& side, BranchEnd e) {
        for (const auto& x : side)
            if (x == e) return true;
        return false;
    };
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const Traversal& a = curve[i];
        const Traversal& b = curve[(i + 1) % curve.size()];
        if (t.branches[a.branch].closed || t.branches[b.branch].closed)
            throw GeometryError("scc_cocycle: closed branch inside a longer path");
        BranchEnd arrive{a.branch, a.forward ? 1 : 0}, leave{b.branch, b.forward ? 0 : 1};
        bool ok = false;
        for (const auto& s : t.switches)
            if ((on_side(s.in, arrive) && on_side(s.out, leave)) || (on_side(s.out, arrive) && on_side(s.in, leave)))
                ok = true;
        if (!ok) throw GeometryError("scc_cocycle: path is not closed through the switches");
    }
    TransverseCocycle c{std::vector<double>(t.branches.size(), 0.0), ValueRing::Real};
    for (const auto& tr : curve) c.weights[tr.branch] += w;
    return c;
}

int max_components_per_radius(const std::vector<RectangleComponent>& comps) {
    std::map<int, int> count;
    int best = 0;
    for (const auto& c : comps) {
        if (c.divergence_radius < 1) throw DomainError("divergence radius below 1");
        best = std::max(best, ++count[c.divergence_radius]);
    }
    return best;
}

nlohmann::json track_to_json(const TrainTrack& t, const TransverseCocycle* c) {
    nlohmann::json j;
    j["branches"] = nlohmann::json::array();
    for (const auto& b : t.branches) j["branches"].push_back({{"length", b.length}, {"closed", b.closed}});
    j["switches"] = nlohmann::json::array();
    auto ends = [](const std::vector<BranchEnd>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& e : v) a.push_back({{"branch", e.branch}, {"end", e.end}});
        return a;
    };
    for (const auto& s : t.switches) j["switches"].push_back({{"in", ends(s.in)}, {"out", ends(s.out)}});
    if (c) {
        j["weights"] = c->weights;
        j["value_ring"] = c->ring == ValueRing::Real ? "R" : "R/2piZ";
    }
    return j;
}

TrainTrack track_from_json(const nlohmann::json& j) {
    TrainTrack t;
    for (const auto& b : j.at("branches")) t.branches.push_back({b.at("length").get<double>(), b.value("closed", false)});
    auto ends = [](const nlohmann::json& a) {
        std::vector<BranchEnd> v;
        for (const auto& e : a) v.push_back({e.at("branch").get<std::size_t>(), e.at("end").get<int>()});
        return v;
    };
    if (j.contains("switches"))
        for (const auto& s : j.at("switches")) t.switches.push_back({ends(s.at("in")), ends(s.at("out"))});
    return t;
}

TransverseCocycle cocycle_from_json(const nlohmann::json& j) {
    TransverseCocycle c;
    c.weights = j.at("weights").get<std::vector<double>>();
    std::string ring = j.value("value_ring", std::string("R"));
    if (ring == "R")
        c.ring = ValueRing::Real;
    else if (ring == "R/2piZ")
        c.ring = ValueRing::Circle;
    else
        throw GeometryError("unknown value_ring '" + ring + "'");
    return c;
}

} // namespace hyp::lamination
