#pragma once

#include <map>
#include <variant>
#include <vector>

#include "cygon/certificates.hpp"
#include "cygon/density.hpp"
#include "cygon/graph.hpp"
#include "cygon/mappings.hpp"
#include "cygon/push_engine.hpp"
#include "cygon/rational.hpp"
#include "cygon/verify.hpp"

namespace cygon {

struct CircularArboricity {
    Rational d;
    CircleMapping mapping;
};

namespace detail {

// Place each element's unit interval on a circle of circumference d = P/Q so
// every window is independent, by running the interval engine with weight Q
// on a P-gon and dividing positions by Q.  The caller must have established
// Q|A| <= P r(A) already; a violation here is a bug.
inline CircleMapping independent_circle_mapping(const Matroid& m, const Rational& d,
                                                const EngineOptions& opts) {
    long long p = d.numerator(), q = d.denominator();
    WeightedInstance inst{m, std::vector<long long>(static_cast<std::size_t>(m.size()), q), p};
    auto assigned = assign_intervals(inst, opts);
    if (std::holds_alternative<Violation>(assigned))
        throw EngineDefect("independent_circle_mapping: instance infeasible despite density check");

    const GonMapping& gon = std::get<GonMapping>(assigned);
    CircleMapping circle;
    circle.circumference = d;
    circle.mode = WindowMode::Independent;
    circle.position.reserve(static_cast<std::size_t>(m.size()));
    for (int e = 0; e < m.size(); ++e)
        circle.position.emplace_back(gon.position[static_cast<std::size_t>(e)] - 1, q);

    if (auto failure = verify_circle_mapping(m, circle))
        throw EngineDefect("independent_circle_mapping: window at " +
                           format_rational(failure->point) + " is dependent");
    return circle;
}

// Extend an independent set to a base, taking the smallest usable ids.
inline Subset extend_to_base(const Matroid& m, Subset independent) {
    Subset b = independent;
    int r = m.rank();
    for (int e = 0; e < m.size() && m.rank(b) < r; ++e) {
        Subset grown = b | singleton(e);
        if (m.rank(grown) > m.rank(b)) b = grown;
    }
    if (!is_base(m, b)) throw EngineDefect("extend_to_base: extension did not reach a base");
    return b;
}

}  // namespace detail

// The sharpest circumference: d = gamma(M) = max |A| / r(A), with a mapping
// whose unit windows are all independent.  No smaller circumference admits
// one, by counting on the densest set.
inline CircularArboricity circular_arboricity(const Matroid& m, const EngineOptions& opts = {}) {
    require_loopless(m, "circular_arboricity");
    if (m.size() == 0) throw PreconditionError("circular_arboricity: empty ground set");
    Rational gamma = max_density(m).gamma;
    return CircularArboricity{gamma, detail::independent_circle_mapping(m, gamma, opts)};
}

inline long long integral_arboricity(const Matroid& m) {
    require_loopless(m, "integral_arboricity");
    if (m.size() == 0) throw PreconditionError("integral_arboricity: empty ground set");
    return ceil_rational(max_density(m).gamma);
}

// Partition-style cover by exactly ceil(gamma) bases, read off the circular
// mapping: the elements with position in [i, i+1) form the window at the
// point i + 1 - 1/Q, hence an independent slice, and slices cover E.
inline BaseCover integral_arboricity_cover(const Matroid& m, const EngineOptions& opts = {}) {
    CircularArboricity circ = circular_arboricity(m, opts);
    long long k = ceil_rational(circ.d);

    std::vector<Subset> slices(static_cast<std::size_t>(k), kEmptySet);
    for (int e = 0; e < m.size(); ++e) {
        long long slice = floor_rational(circ.mapping.position[static_cast<std::size_t>(e)]);
        slices[static_cast<std::size_t>(slice)] |= singleton(e);
    }

    BaseCover cover;
    cover.bases.reserve(slices.size());
    for (Subset s : slices) {
        if (!is_independent(m, s))
            throw EngineDefect("integral_arboricity_cover: slice {" + format_subset(s) +
                               "} is dependent");
        cover.bases.push_back(detail::extend_to_base(m, s));
    }
    if (auto failure = verify_cover(m, cover))
        throw EngineDefect("integral_arboricity_cover: " + failure->reason);
    return cover;
}

// Fractional base weights of total gamma covering every element at least
// once: each of the P gon windows, extended to a base, carries weight 1/Q.
// Every element lies in exactly Q consecutive windows, so its coverage is
// exactly 1 before extensions and at least 1 after.
inline FractionalWeights fractional_weights(const Matroid& m, const EngineOptions& opts = {}) {
    require_loopless(m, "fractional_weights");
    if (m.size() == 0) throw PreconditionError("fractional_weights: empty ground set");
    Rational gamma = max_density(m).gamma;
    long long p = gamma.numerator(), q = gamma.denominator();

    WeightedInstance inst{m, std::vector<long long>(static_cast<std::size_t>(m.size()), q), p};
    auto assigned = assign_intervals(inst, opts);
    if (std::holds_alternative<Violation>(assigned))
        throw EngineDefect("fractional_weights: instance infeasible despite density definition");
    const GonMapping& gon = std::get<GonMapping>(assigned);

    std::map<Subset, Rational> acc;
    for (long long x = 1; x <= p; ++x)
        acc[detail::extend_to_base(m, window(gon, x))] += Rational(1, q);

    FractionalWeights fw;
    fw.entries.assign(acc.begin(), acc.end());
    if (auto failure = verify_fractional(m, fw, gamma))
        throw EngineDefect("fractional_weights: " + failure->reason);
    return fw;
}

// Spanning counterpart: unit intervals on a circle of circumference d so
// every window spans.  Exists exactly when d is at most the strength
// min |A| / (r(E) - r(E \ A)); realized through the dual matroid, whose
// independent windows complement to spanning windows here.
inline std::variant<CircleMapping, Violation> spanning_windows(const Matroid& m, const Rational& d,
                                                               const EngineOptions& opts = {}) {
    require_loopless(m, "spanning_windows");
    if (m.size() == 0) throw PreconditionError("spanning_windows: empty ground set");
    if (d <= Rational(0)) throw PreconditionError("spanning_windows: circumference must be positive");

    StrengthReport s = strength(m);
    if (d > s.value)
        return Violation{"strength", s.witness, s.value, d};

    long long p = d.numerator(), q = d.denominator();
    CircleMapping circle;
    circle.circumference = d;
    circle.mode = WindowMode::Spanning;

    if (p <= q) {
        // d <= 1: a unit interval wraps the whole circle, every window is E.
        circle.position.assign(static_cast<std::size_t>(m.size()), Rational(0));
    } else {
        Matroid star = dual(m);
        if (!is_loopless(star))
            throw EngineDefect("spanning_windows: dual has a loop although d > 1 passed the "
                               "strength check");
        WeightedInstance inst{star, std::vector<long long>(static_cast<std::size_t>(m.size()), p - q),
                              p};
        auto assigned = assign_intervals(inst, opts);
        if (std::holds_alternative<Violation>(assigned))
            throw EngineDefect("spanning_windows: dual instance infeasible despite strength check");
        const GonMapping& gon = std::get<GonMapping>(assigned);

        // e's length-q interval is the complement of its dual length-(p-q)
        // interval, so each window here is the complement of an independent
        // dual window, which is spanning.
        circle.position.reserve(static_cast<std::size_t>(m.size()));
        for (int e = 0; e < m.size(); ++e) {
            long long start =
                (gon.position[static_cast<std::size_t>(e)] - 1 + (p - q)) % p;
            circle.position.emplace_back(start, q);
        }
    }

    if (auto failure = verify_circle_mapping(m, circle))
        throw EngineDefect("spanning_windows: window at " + format_rational(failure->point) +
                           " does not span");
    return circle;
}

// Graph fronts.  Acyclic windows: every unit window of edges is a forest.
inline std::variant<CircleMapping, Violation> graph_acyclic_windows(const Graph& g,
                                                                    const Rational& d,
                                                                    const EngineOptions& opts = {}) {
    if (g.edges.empty()) throw PreconditionError("graph_acyclic_windows: graph has no edges");
    if (d <= Rational(0))
        throw PreconditionError("graph_acyclic_windows: circumference must be positive");
    Matroid m = Matroid::graphic(g);
    std::vector<Rational> unit(static_cast<std::size_t>(m.size()), Rational(1));
    if (auto violation = check_rational(m, unit, d)) return *violation;
    return detail::independent_circle_mapping(m, d, opts);
}

// Connected windows: every unit window of edges is a connected spanning
// subgraph.  Needs a connected graph to start from.
inline std::variant<CircleMapping, Violation> graph_connected_windows(
    const Graph& g, const Rational& d, const EngineOptions& opts = {}) {
    if (g.edges.empty()) throw PreconditionError("graph_connected_windows: graph has no edges");
    if (g.components() != 1)
        throw PreconditionError("graph_connected_windows: graph is not connected");
    return spanning_windows(Matroid::graphic(g), d, opts);
}

}  // namespace cygon
