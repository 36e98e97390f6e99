#pragma once

#include <utility>
#include <vector>

#include "cygon/error.hpp"
#include "cygon/rational.hpp"
#include "cygon/subset.hpp"

namespace cygon {

// An assignment of cyclic intervals on the D-gon: element e occupies the
// weight(e) consecutive points starting at position(e).  Points are 1..D.
struct GonMapping {
    long long gon = 1;                // D
    std::vector<long long> position;  // phi(e) in 1..D
    std::vector<long long> weight;    // omega(e) in 0..D

    int size() const { return static_cast<int>(position.size()); }
};

// E_phi(x): everything whose interval covers point x.
inline Subset window(const GonMapping& m, long long x) {
    if (x < 1 || x > m.gon) throw PreconditionError("window: point outside the gon");
    Subset out = 0;
    for (int e = 0; e < m.size(); ++e) {
        long long offset = (x - m.position[static_cast<std::size_t>(e)]) % m.gon;
        if (offset < 0) offset += m.gon;
        if (offset < m.weight[static_cast<std::size_t>(e)]) out |= singleton(e);
    }
    return out;
}

enum class WindowMode { Independent, Spanning };

// Positions on a circle of rational circumference d; every element occupies
// the unit arc [position, position + 1).  Mode says what each unit window
// must satisfy: be independent, or span the whole matroid.
struct CircleMapping {
    Rational circumference{1};
    std::vector<Rational> position;  // in [0, d)
    WindowMode mode = WindowMode::Independent;

    int size() const { return static_cast<int>(position.size()); }
};

enum class OrderingMode { Base, Independent };

struct CyclicOrdering {
    std::vector<int> sequence;  // a permutation of 0..m-1
};

struct BaseCover {
    std::vector<Subset> bases;
};

// Sparse non-negative weights on bases.
struct FractionalWeights {
    std::vector<std::pair<Subset, Rational>> entries;  // ascending by base mask

    Rational total() const {
        Rational sum(0);
        for (const auto& [base, x] : entries) sum += x;
        return sum;
    }
};

}  // namespace cygon
