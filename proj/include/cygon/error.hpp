#pragma once

#include <stdexcept>
#include <string>

namespace cygon {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction request that does not describe a loopless matroid:
// loops, exchange-axiom violations, malformed block or base lists.
struct ConstructionError : Error {
    using Error::Error;
};

// An operation was called outside its documented domain (bad element id,
// overlapping minor sets, instance too large for an exhaustive routine, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// An internal consistency check failed.  This always indicates a bug in the
// library, never bad input; it is thrown so a wrong answer cannot be
// returned silently.
struct EngineDefect : Error {
    using Error::Error;
};

// The push loop hit its configured state budget before converging.
struct StateLimitExceeded : Error {
    using Error::Error;
};

}  // namespace cygon
