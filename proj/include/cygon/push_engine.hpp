#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cygon/density.hpp"
#include "cygon/error.hpp"
#include "cygon/mappings.hpp"
#include "cygon/matroid.hpp"
#include "cygon/verify.hpp"

namespace cygon {

// Full engine state: the interval mapping plus the scan ordering that picks
// which pushable element moves next.
struct PushState {
    GonMapping mapping;
    std::vector<int> ordering;

    bool same_configuration(const PushState& other) const {
        return mapping.position == other.mapping.position && ordering == other.ordering;
    }
};

struct PushStep {
    int element = -1;
    long long from = 0;
    long long to = 0;
    bool strict = false;  // the entered window's rank went up
    std::size_t state_hash = 0;
};

// Optional log of one run of assign_intervals.  Steps from recursive calls
// are appended in order; period/cycle_start describe the first detected
// repetition, 0/-1 when every level converged directly.
struct PushTrace {
    std::vector<PushStep> steps;
    long long period = 0;
    long long cycle_start = -1;
};

struct Decomposition {
    Subset unbounded = 0;           // E^U: pushed within the repeated segment
    Subset bounded = 0;             // E^B: frozen at their cycle-start positions
    std::vector<long long> frozen;  // cycle-start positions, all elements
};

struct EngineOptions {
    std::size_t max_states = 1'000'000;
    PushTrace* trace = nullptr;
    std::ostream* trace_stream = nullptr;
};

// e is pushable when it lies in a circuit of the window at its own start
// point, i.e. the window keeps its rank without e.  Such a push never
// lowers any window's rank.
inline bool pushable(const Matroid& m, const GonMapping& mapping, int e) {
    if (e < 0 || e >= mapping.size()) throw PreconditionError("pushable: element out of range");
    if (mapping.weight[static_cast<std::size_t>(e)] < 1) return false;
    Subset w = window(mapping, mapping.position[static_cast<std::size_t>(e)]);
    return m.rank(w) == m.rank(w & ~singleton(e));
}

// Advance e one step around the gon and move it to the back of the ordering.
inline PushState push(const Matroid& m, const PushState& state, int e) {
    if (!pushable(m, state.mapping, e))
        throw PreconditionError("push: element " + std::to_string(e) + " is not pushable");
    PushState next = state;
    long long p = next.mapping.position[static_cast<std::size_t>(e)];
    next.mapping.position[static_cast<std::size_t>(e)] = p % next.mapping.gon + 1;
    auto& ord = next.ordering;
    ord.erase(std::find(ord.begin(), ord.end(), e));
    ord.push_back(e);
    return next;
}

// First pushable element in the current ordering.  When no element is
// pushable every window is independent (a dependent window always contains
// a circuit, and walking back from its last covered point exposes a
// pushable member), so the mapping is done.
inline std::optional<int> first_pushable(const Matroid& m, const PushState& state) {
    for (int e : state.ordering)
        if (pushable(m, state.mapping, e)) return e;
    return std::nullopt;
}

// Split the ground set at a detected repetition.  `cycle_start` is the state
// the run returned to, `pushed` the elements pushed at least once within the
// repeated segment.  The claims below are load-bearing for the recursion;
// every one of them failing means an engine bug, never bad input.
inline Decomposition decompose_on_cycle(const Matroid& m, const PushState& cycle_start,
                                        Subset pushed) {
    Subset full = full_set(m.size());
    Subset unbounded = pushed;
    Subset bounded = full & ~pushed;

    if (unbounded == kEmptySet) throw EngineDefect("decompose_on_cycle: cycle without pushes");
    if (bounded == kEmptySet)
        throw EngineDefect("decompose_on_cycle: every element pushed within the period");
    if (closure(m, unbounded) != unbounded)
        throw EngineDefect("decompose_on_cycle: pushed elements do not form a closed set");
    // No circuit of any cycle-start window may touch a frozen element.
    for (long long x = 1; x <= cycle_start.mapping.gon; ++x) {
        Subset w = window(cycle_start.mapping, x);
        for (int e : elements(w & bounded))
            if (m.rank(w) == m.rank(w & ~singleton(e)))
                throw EngineDefect("decompose_on_cycle: frozen element " + std::to_string(e) +
                                   " lies in a circuit of the window at point " + std::to_string(x));
    }

    Decomposition d;
    d.unbounded = unbounded;
    d.bounded = bounded;
    d.frozen = cycle_start.mapping.position;
    return d;
}

namespace detail {

inline std::size_t hash_state(const PushState& s) {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (long long p : s.mapping.position) mix(static_cast<std::size_t>(p));
    mix(0xabcdef);  // separator between the two vectors
    for (int e : s.ordering) mix(static_cast<std::size_t>(e));
    return h;
}

inline void trace_line(const EngineOptions& opts, const std::string& line) {
    if (opts.trace_stream) *opts.trace_stream << line << '\n';
}

GonMapping solve(const WeightedInstance& inst, const EngineOptions& opts, int depth);

// The push loop proper: start from the all-at-1 mapping and keep pushing the
// first pushable element.  Ends either with every window independent, or
// with a state repetition that is split off and recursed on.
inline GonMapping run_push_loop(const WeightedInstance& inst, const EngineOptions& opts,
                                int depth) {
    const Matroid& m = inst.matroid;
    const long long gon = inst.gon;

    PushState state;
    state.mapping.gon = gon;
    state.mapping.weight = inst.weights;
    state.mapping.position.assign(static_cast<std::size_t>(m.size()), 1);
    state.ordering.resize(static_cast<std::size_t>(m.size()));
    for (int e = 0; e < m.size(); ++e) state.ordering[static_cast<std::size_t>(e)] = e;

    std::vector<PushState> log{state};
    std::vector<int> pushed_at;  // element pushed at step k: log[k] -> log[k+1]
    std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
    seen[hash_state(state)].push_back(0);

    for (;;) {
        std::optional<int> next = first_pushable(m, state);
        if (!next) break;

        int e = *next;
        long long p = state.mapping.position[static_cast<std::size_t>(e)];
        long long w = state.mapping.weight[static_cast<std::size_t>(e)];
        long long entered = (p - 1 + w) % gon + 1;  // the one newly covered point
        Subset vacated_before = window(state.mapping, p);
        Subset entered_before = window(state.mapping, entered);

        state = push(m, state, e);

        // The potential sum_x r(E_phi(x)) must never decrease: the vacated
        // window keeps its rank exactly (that is what pushable means) and
        // the entered window can only gain.
        if (m.rank(window(state.mapping, p)) != m.rank(vacated_before))
            throw EngineDefect("push engine: rank changed at the vacated point");
        bool strict =
            m.rank(window(state.mapping, entered)) > m.rank(entered_before);

        std::size_t h = hash_state(state);
        if (opts.trace) {
            opts.trace->steps.push_back(
                PushStep{e, p, state.mapping.position[static_cast<std::size_t>(e)], strict, h});
        }
        trace_line(opts, "step " + std::to_string(pushed_at.size()) + ": push " +
                             std::to_string(e) + " from " + std::to_string(p) + " to " +
                             std::to_string(state.mapping.position[static_cast<std::size_t>(e)]) +
                             (strict ? " [strict]" : " [neutral]"));
        pushed_at.push_back(e);

        // Hash hit does not mean state hit; compare the full configuration.
        auto& bucket = seen[h];
        std::size_t repeat_of = log.size();
        for (std::size_t idx : bucket)
            if (log[idx].same_configuration(state)) {
                repeat_of = idx;
                break;
            }

        if (repeat_of == log.size()) {
            bucket.push_back(log.size());
            log.push_back(state);
            if (log.size() > opts.max_states)
                throw StateLimitExceeded(
                    "push engine: state budget of " + std::to_string(opts.max_states) +
                    " exceeded after " + std::to_string(pushed_at.size()) +
                    " pushes (m = " + std::to_string(m.size()) + ", D = " + std::to_string(gon) +
                    "); raise EngineOptions::max_states to continue");
            continue;
        }

        // Repetition: every element pushed in [repeat_of, end) cycles
        // forever, everything else never moves again.
        long long period = static_cast<long long>(pushed_at.size()) -
                           static_cast<long long>(repeat_of);
        if (opts.trace && opts.trace->period == 0) {
            opts.trace->period = period;
            opts.trace->cycle_start = static_cast<long long>(repeat_of);
        }
        Subset pushed_in_period = 0;
        for (std::size_t k = repeat_of; k < pushed_at.size(); ++k)
            pushed_in_period |= singleton(pushed_at[k]);

        Decomposition split = decompose_on_cycle(m, log[repeat_of], pushed_in_period);
        trace_line(opts, "period of length " + std::to_string(period) + " detected at step " +
                             std::to_string(repeat_of) + "; frozen = {" +
                             format_subset(split.bounded) + "}, recursing on {" +
                             format_subset(split.unbounded) + "}");

        // Solve the unbounded part on its restriction; the frozen part keeps
        // its cycle-start positions.
        std::vector<int> survivors = elements(split.unbounded);
        std::vector<long long> sub_weights;
        sub_weights.reserve(survivors.size());
        for (int e2 : survivors) sub_weights.push_back(inst.weights[static_cast<std::size_t>(e2)]);
        WeightedInstance sub{minor(m, kEmptySet, split.bounded), std::move(sub_weights), gon};
        GonMapping sub_mapping = solve(sub, opts, depth + 1);

        GonMapping combined;
        combined.gon = gon;
        combined.weight = inst.weights;
        combined.position = split.frozen;
        for (std::size_t i = 0; i < survivors.size(); ++i)
            combined.position[static_cast<std::size_t>(survivors[i])] = sub_mapping.position[i];
        return combined;
    }

    return state.mapping;
}

// One level of the algorithm: peel off weight-0 elements (they sit in no
// window), contract weight-D elements (they sit in every window), then run
// the push loop.  Every level re-verifies its own output.
inline GonMapping solve(const WeightedInstance& inst, const EngineOptions& opts, int depth) {
    const Matroid& m = inst.matroid;
    const long long gon = inst.gon;

    if (m.size() == 0) return GonMapping{gon, {}, {}};

    if (!is_loopless(m))
        throw EngineDefect("push engine: recursion produced a loop");
    if (check_weighted(inst))
        throw EngineDefect("push engine: recursion produced an infeasible sub-instance");

    Subset zeros = 0, fulls = 0;
    for (int e = 0; e < m.size(); ++e) {
        long long w = inst.weights[static_cast<std::size_t>(e)];
        if (w > gon) throw EngineDefect("push engine: weight above D survived the feasibility check");
        if (w == 0) zeros |= singleton(e);
        if (w == gon) fulls |= singleton(e);
    }

    GonMapping result;
    if (zeros) {
        // Deletion leaves every other rank alone; park the deleted elements
        // at position 1, their empty intervals meet no window.
        trace_line(opts, "delete zero-weight {" + format_subset(zeros) + "}");
        std::vector<int> survivors = elements(full_set(m.size()) & ~zeros);
        std::vector<long long> sub_weights;
        for (int e : survivors) sub_weights.push_back(inst.weights[static_cast<std::size_t>(e)]);
        WeightedInstance sub{minor(m, kEmptySet, zeros), std::move(sub_weights), gon};
        GonMapping sub_mapping = solve(sub, opts, depth + 1);

        result.gon = gon;
        result.weight = inst.weights;
        result.position.assign(static_cast<std::size_t>(m.size()), 1);
        for (std::size_t i = 0; i < survivors.size(); ++i)
            result.position[static_cast<std::size_t>(survivors[i])] = sub_mapping.position[i];
    } else if (fulls) {
        // A full-circle element is in every window, so it must be spanned by
        // nothing less than contraction: solve M/e and put e anywhere.
        int e = std::countr_zero(fulls);
        trace_line(opts, "contract full-weight " + std::to_string(e));
        std::vector<int> survivors = elements(full_set(m.size()) & ~singleton(e));
        std::vector<long long> sub_weights;
        for (int e2 : survivors) sub_weights.push_back(inst.weights[static_cast<std::size_t>(e2)]);
        WeightedInstance sub{minor(m, singleton(e), kEmptySet), std::move(sub_weights), gon};
        GonMapping sub_mapping = solve(sub, opts, depth + 1);

        result.gon = gon;
        result.weight = inst.weights;
        result.position.assign(static_cast<std::size_t>(m.size()), 1);
        for (std::size_t i = 0; i < survivors.size(); ++i)
            result.position[static_cast<std::size_t>(survivors[i])] = sub_mapping.position[i];
    } else {
        result = run_push_loop(inst, opts, depth);
    }

    if (auto failure = verify_gon_mapping(m, result, WindowMode::Independent))
        throw EngineDefect("push engine: produced mapping fails at point " +
                           std::to_string(failure->point) + " with window {" +
                           format_subset(failure->window) + "}");
    return result;
}

}  // namespace detail

// Assign every element a cyclic interval of its weight on the D-gon so that
// each of the D windows is independent, or report the violated counting
// condition.  Deterministic: the same instance always yields the same
// mapping.
inline std::variant<GonMapping, Violation> assign_intervals(const WeightedInstance& inst,
                                                            const EngineOptions& opts = {}) {
    detail::validate_instance(inst, "assign_intervals");
    require_loopless(inst.matroid, "assign_intervals");
    if (auto violation = check_weighted(inst)) return *violation;
    return detail::solve(inst, opts, 0);
}

}  // namespace cygon
