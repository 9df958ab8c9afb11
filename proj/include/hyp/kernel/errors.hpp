#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

// Base for everything the geometry code throws on bad input.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input that is valid but sits on a degenerate locus (coplanar, collinear, ...).
struct DegenerateError : GeometryError {
    using GeometryError::GeometryError;
};

struct DomainError : GeometryError {
    using GeometryError::GeometryError;
};

} // namespace hyp
