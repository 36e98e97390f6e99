#pragma once

#include <string>

#include "cygon/rational.hpp"
#include "cygon/subset.hpp"

namespace cygon {

// A refuted feasibility condition: the named inequality fails on `witness`,
// with both sides evaluated exactly.  A Violation can always be re-checked
// against the rank oracle by hand.
struct Violation {
    std::string condition;
    Subset witness = 0;
    Rational lhs{0};
    Rational rhs{0};

    std::string to_text() const {
        return "VIOLATION " + condition + "\nwitness = " + format_subset(witness) +
               "\nlhs = " + format_rational(lhs) + "\nrhs = " + format_rational(rhs);
    }
};

// The instance falls outside a theorem hypothesis (e.g. a gcd condition);
// the question is still meaningful, but this toolkit's constructive route
// does not apply.  Distinct from a Violation: nothing has been refuted.
struct NotApplicable {
    std::string reason;
};

}  // namespace cygon
