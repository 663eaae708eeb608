#pragma once

#include <stdexcept>
#include <string>

namespace eigenmix {

/// Input or invariant violation: bad dimensions, non-normalized kets,
/// weights outside the open unit interval, and the like.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to meet its accuracy contract
/// (iteration budget exhausted, cross-check beyond tolerance).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eigenmix
