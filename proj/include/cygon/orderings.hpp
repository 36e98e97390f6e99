#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "cygon/certificates.hpp"
#include "cygon/mappings.hpp"
#include "cygon/push_engine.hpp"
#include "cygon/verify.hpp"

namespace cygon {

using OrderingResult = std::variant<CyclicOrdering, Violation, NotApplicable>;

namespace detail {

// Read an ordering off an interval mapping for the uniform-weight, D = |E|
// case: total coverage r*m over m points with every window independent
// forces every window to be a base, and together with gcd(m, r) = 1 that
// forces the start positions to be a bijection onto the gon.
inline CyclicOrdering ordering_from_mapping(const GonMapping& mapping, const char* who) {
    int n = mapping.size();
    std::vector<int> at(static_cast<std::size_t>(n), -1);
    for (int e = 0; e < n; ++e) {
        long long p = mapping.position[static_cast<std::size_t>(e)];
        if (at[static_cast<std::size_t>(p - 1)] != -1)
            throw EngineDefect(std::string(who) + ": start positions are not a bijection");
        at[static_cast<std::size_t>(p - 1)] = e;
    }
    return CyclicOrdering{at};
}

}  // namespace detail

// Order the ground set in a cycle so that every r(E) consecutive elements
// form a base.  Works whenever gcd(|E|, r(E)) = 1; a gcd above 1 puts the
// instance outside this routine's reach (explore_cyclic_ordering can still
// search for one), and a counting violation rules any ordering out.
inline OrderingResult cyclic_base_ordering(const Matroid& m, const EngineOptions& opts = {}) {
    if (m.size() == 0) return CyclicOrdering{{}};
    require_loopless(m, "cyclic_base_ordering");

    int n = m.size();
    int r = m.rank();
    WeightedInstance inst{m, std::vector<long long>(static_cast<std::size_t>(n), r), n};
    // A counting violation rules out every cyclic ordering, so it outranks
    // the gcd hypothesis as an answer.
    if (auto violation = check_weighted(inst)) return *violation;
    if (std::gcd(n, r) != 1)
        return NotApplicable{"gcd(|E|, r(E)) = " + std::to_string(std::gcd(n, r)) +
                             "; this construction needs coprime size and rank"};

    auto assigned = assign_intervals(inst, opts);
    if (!std::holds_alternative<GonMapping>(assigned))
        throw EngineDefect("cyclic_base_ordering: engine refused a pre-checked instance");

    CyclicOrdering ordering =
        detail::ordering_from_mapping(std::get<GonMapping>(assigned), "cyclic_base_ordering");
    if (auto failure = verify_cyclic_ordering(m, ordering, r, OrderingMode::Base))
        throw EngineDefect("cyclic_base_ordering: window starting at offset " +
                           std::to_string(failure->start) + " is not a base");
    return ordering;
}

// Same ordering problem with windows of length w <= r(E) that only need to
// be independent.  Runs the base construction on the rank-w truncation;
// any counting violation found there already satisfies r(A) <= w, so it is
// reported in terms of the original matroid unchanged.
inline OrderingResult cyclic_independent_ordering(const Matroid& m, int w,
                                                  const EngineOptions& opts = {}) {
    require_loopless(m, "cyclic_independent_ordering");
    if (w < 1 || w > m.rank())
        throw PreconditionError("cyclic_independent_ordering: window length must be in [1, r(E)]");

    int n = m.size();
    Matroid cut = truncate(m, w);
    WeightedInstance inst{cut, std::vector<long long>(static_cast<std::size_t>(n), w), n};
    // Any violation witness has rank at most w in the truncation and hence
    // the same rank here, so the reported inequality holds verbatim for m.
    if (auto violation = check_weighted(inst)) return *violation;
    if (std::gcd(n, w) != 1)
        return NotApplicable{"gcd(|E|, w) = " + std::to_string(std::gcd(n, w)) +
                             "; this construction needs coprime size and window length"};

    auto assigned = assign_intervals(inst, opts);
    if (!std::holds_alternative<GonMapping>(assigned))
        throw EngineDefect("cyclic_independent_ordering: engine refused a pre-checked instance");

    CyclicOrdering ordering = detail::ordering_from_mapping(std::get<GonMapping>(assigned),
                                                            "cyclic_independent_ordering");
    if (auto failure = verify_cyclic_ordering(m, ordering, w, OrderingMode::Independent))
        throw EngineDefect("cyclic_independent_ordering: window starting at offset " +
                           std::to_string(failure->start) + " is dependent");
    return ordering;
}

// Linear exchange walk from one base to another: a sequence
// b_1 .. b_r  b'_1 .. b'_r with every r consecutive entries a base, where
// the b's enumerate `from` and the b''s enumerate `to` in ascending order.
// Exists for every pair of bases by the symmetric exchange property.
inline std::vector<int> exchange_linear_sequence(const Matroid& m, Subset from, Subset to) {
    if (!is_base(m, from))
        throw PreconditionError("exchange_linear_sequence: {" + format_subset(from) +
                                "} is not a base");
    if (!is_base(m, to))
        throw PreconditionError("exchange_linear_sequence: {" + format_subset(to) +
                                "} is not a base");

    int r = m.rank();
    std::vector<int> incoming = elements(to);
    std::vector<int> removed;
    removed.reserve(static_cast<std::size_t>(r));

    Subset current = from;
    Subset remaining = from;  // elements of `from` not yet written into the sequence
    for (int j = 0; j < r; ++j) {
        int y = incoming[static_cast<std::size_t>(j)];
        bool found = false;
        for (int x : elements(remaining)) {
            // Keep the window a set of size r: once y is still sitting in
            // the current base, the only legal move is swapping y for y.
            if (contains(current, y) && x != y) continue;
            Subset candidate = (current & ~singleton(x)) | singleton(y);
            if (is_base(m, candidate)) {
                removed.push_back(x);
                remaining &= ~singleton(x);
                current = candidate;
                found = true;
                break;
            }
        }
        if (!found)
            throw EngineDefect("exchange_linear_sequence: no admissible swap for element " +
                               std::to_string(y));
    }

    std::vector<int> seq = removed;
    seq.insert(seq.end(), incoming.begin(), incoming.end());
    if (auto failure = verify_linear_base_sequence(m, seq))
        throw EngineDefect("exchange_linear_sequence: window at offset " +
                           std::to_string(failure->start) + " is not a base");
    return seq;
}

// Exhaustive search for a cyclic ordering, first element pinned to cancel
// rotations.  Intended for small diagnostics runs; |E| is capped hard.
inline std::optional<CyclicOrdering> explore_cyclic_ordering(const Matroid& m, int window_length,
                                                             OrderingMode mode) {
    constexpr int kMaxExploreSize = 10;
    int n = m.size();
    if (n > kMaxExploreSize)
        throw PreconditionError("explore_cyclic_ordering: ground set above " +
                                std::to_string(kMaxExploreSize) + " elements");
    if (n == 0) return CyclicOrdering{{}};
    require_loopless(m, "explore_cyclic_ordering");
    if (window_length < 1 || window_length > n)
        throw PreconditionError("explore_cyclic_ordering: window length must be in [1, |E|]");

    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    do {
        CyclicOrdering candidate;
        candidate.sequence.push_back(0);
        candidate.sequence.insert(candidate.sequence.end(), rest.begin(), rest.end());
        if (!verify_cyclic_ordering(m, candidate, window_length, mode)) return candidate;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

}  // namespace cygon
