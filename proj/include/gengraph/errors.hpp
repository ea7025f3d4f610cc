#pragma once

#include <stdexcept>
#include <string>

namespace gengraph {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated a precondition (n = 0, mismatched group, g = h, ...).
struct invalid_input : error {
    using error::error;
};

// Input is well-formed but outside the supported domain of a closed form
// (e.g. distance spectrum of the dihedral family below n = 3).
struct out_of_domain : error {
    using error::error;
};

// Problem size exceeds what an exact search is willing to attempt.
struct capacity_error : error {
    using error::error;
};

// A consistency check that can only fail on an implementation bug
// (inexact division in an exact recurrence, theorem violation, ...).
struct internal_error : error {
    using error::error;
};

} // namespace gengraph
