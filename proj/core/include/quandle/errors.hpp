#pragma once
#include <stdexcept>
#include <string>

namespace qdl {

// Domain errors (bad mathematical input, violated precondition): CLI exit 1.
// Usage errors (malformed flags/arguments): CLI exit 2.

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed data: non-square table, bad JSON, inconsistent PD code...
struct format_error : error {
    using error::error;
};

// a value out of range / unusable: t not invertible, non-prime modulus...
struct parameter_error : error {
    using error::error;
};

// operation requires a stronger structure than the argument has
// (e.g. rack needed, shelf given), or an unmet precondition (z not a cycle)
struct precondition_error : error {
    using error::error;
};

// basis-size guard / degree cap exceeded
struct resource_error : error {
    using error::error;
};

// Reidemeister move site does not match the move's local pattern
struct move_error : error {
    using error::error;
};

} // namespace qdl
