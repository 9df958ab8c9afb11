#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace hyp::lamination {

struct Branch {
    double length = 0;    // geodesic length of the leaf segment it stands for
    bool closed = false;  // a loop with no switches (simple closed leaf)
};

// end 0 is where the branch starts, end 1 where it finishes
struct BranchEnd {
    std::size_t branch;
    int end;
    bool operator==(const BranchEnd&) const = default;
};

// Branch ends arriving on the `in` side continue out through the `out` side.
struct Switch {
    std::vector<BranchEnd> in, out;
};

struct TrainTrack {
    std::vector<Branch> branches;
    std::vector<Switch> switches;
};

enum class ValueRing { Real, Circle };  // R or R / 2 pi Z

struct TransverseCocycle {
    std::vector<double> weights;  // real representatives, one per branch
    ValueRing ring = ValueRing::Real;

    TransverseCocycle operator+(const TransverseCocycle& o) const;
    TransverseCocycle operator*(double a) const;
};

// Cocycle with nonnegative weights. Throws DomainError otherwise.
class MeasuredLamination {
public:
    explicit MeasuredLamination(TransverseCocycle c);
    const TransverseCocycle& cocycle() const { return c_; }

private:
    TransverseCocycle c_;
};

struct RectangleComponent {
    std::size_t rectangle;
    std::size_t gap;
    int divergence_radius;  // >= 1
};

struct TrackReport {
    bool well_formed = true;       // every branch end sits on exactly one switch side
    double max_violation = 0;      // worst |in - out| at a switch (mod 2 pi for circle values)
    std::size_t worst_switch = 0;
    std::vector<std::string> problems;
    bool pass(double tol = 1e-12) const { return well_formed && max_violation <= tol; }
};

// Throws GeometryError when the cocycle is not indexed by the branches.
TrackReport validate_track(const TrainTrack& t, const TransverseCocycle& c);

// Sum of crossed branch weights with multiplicity, as a real lift.
double cocycle_eval(const TrainTrack& t, const TransverseCocycle& c, const std::vector<std::size_t>& crossings);

// Representative in (-pi, pi] for circle values, identity for real ones.
double reduce(ValueRing ring, double x);

// sum weight * length. Throws DomainError on a missing (non-positive) length.
double cocycle_length(const TrainTrack& t, const TransverseCocycle& c);

struct Traversal {
    std::size_t branch;
    bool forward = true;
};

// w times the traversal counts of a closed branch path.
// Throws GeometryError unless consecutive traversals pass through a switch.
TransverseCocycle scc_cocycle(const TrainTrack& t, const std::vector<Traversal>& curve, double w);

// Largest number of components sharing one divergence radius.
int max_components_per_radius(const std::vector<RectangleComponent>& comps);

nlohmann::json track_to_json(const TrainTrack& t, const TransverseCocycle* c = nullptr);
TrainTrack track_from_json(const nlohmann::json& j);
TransverseCocycle cocycle_from_json(const nlohmann::json& j);  // reads `weights`, `value_ring`

} // namespace hyp::lamination
