#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cygon {

// Subsets of the ground set, element i stored in bit i.  Ground sets are
// capped at 64 elements so a subset is always a single machine word.
using Subset = std::uint64_t;

constexpr int kMaxGroundSetSize = 64;

// Exhaustive routines (full subset enumeration, brute-force searches)
// refuse to run past this size.  The toolkit targets desk-scale instances
// and declares the limit instead of engineering around it.
constexpr int kMaxExhaustiveSize = 20;

constexpr Subset kEmptySet = 0;

constexpr Subset full_set(int m) {
    return m >= kMaxGroundSetSize ? ~Subset{0} : (Subset{1} << m) - 1;
}

constexpr Subset singleton(int e) { return Subset{1} << e; }

constexpr bool contains(Subset s, int e) { return (s >> e) & Subset{1}; }

constexpr int set_size(Subset s) { return std::popcount(s); }

inline std::vector<int> elements(Subset s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

// Space-separated element ids, e.g. "0 2 5"; empty string for the empty set.
inline std::string format_subset(Subset s) {
    std::string out;
    for (int e : elements(s)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

}  // namespace cygon
