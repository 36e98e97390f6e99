#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cygon/certificates.hpp"
#include "cygon/error.hpp"
#include "cygon/matroid.hpp"
#include "cygon/rational.hpp"
#include "cygon/subset.hpp"

namespace cygon {

// A matroid with non-negative integer element weights and a D-gon size.
struct WeightedInstance {
    Matroid matroid;
    std::vector<long long> weights;  // one per element
    long long gon = 1;               // D
};

struct DensityReport {
    Rational gamma{0};
    Subset witness = 0;
};

struct StrengthReport {
    Rational value{0};
    Subset witness = 0;
};

namespace detail {

inline void require_exhaustive_size(const Matroid& m, const char* who) {
    if (m.size() > kMaxExhaustiveSize)
        throw PreconditionError(std::string(who) + ": ground set too large for exhaustive enumeration");
}

// Visits every closed set ascending by bitmask, passing (set, rank).
// Ascending order is what makes "smallest bitmask" witness tie-breaks fall
// out of a plain strictly-better update.
template <typename F>
void for_each_closed(const Matroid& m, F&& visit) {
    Subset full = full_set(m.size());
    Subset a = 0;
    for (;;) {
        int r = m.rank(a);
        bool closed = true;
        for (int e : elements(full & ~a)) {
            if (m.rank(a | singleton(e)) == r) {
                closed = false;
                break;
            }
        }
        if (closed) visit(a, r);
        if (a == full) break;
        ++a;
    }
}

inline void validate_instance(const WeightedInstance& inst, const char* who) {
    if (inst.weights.size() != static_cast<std::size_t>(inst.matroid.size()))
        throw PreconditionError(std::string(who) + ": weight count does not match the ground set");
    for (long long w : inst.weights)
        if (w < 0) throw PreconditionError(std::string(who) + ": negative weight");
    if (inst.gon < 1) throw PreconditionError(std::string(who) + ": gon size must be positive");
}

inline long long weight_of(const std::vector<long long>& weights, Subset a) {
    long long total = 0;
    for (int e : elements(a)) total += weights[static_cast<std::size_t>(e)];
    return total;
}

}  // namespace detail

// gamma(M) = max over nonempty A of |A|/r(A).  Enumeration is restricted to
// closed sets; closing a set keeps its rank and can only grow it, so the
// maximum is unchanged.  The witness is the smallest-bitmask closed maximizer.
inline DensityReport max_density(const Matroid& m) {
    if (m.size() == 0) throw PreconditionError("max_density: empty ground set");
    detail::require_exhaustive_size(m, "max_density");
    require_loopless(m, "max_density");

    DensityReport report;
    detail::for_each_closed(m, [&](Subset a, int r) {
        if (a == kEmptySet) return;
        Rational density(set_size(a), r);  // r >= 1: loopless and a nonempty
        if (density > report.gamma) {
            report.gamma = density;
            report.witness = a;
        }
    });
    return report;
}

// Does omega(A) <= D * r(A) hold for every A?  On failure the witness
// maximizes the slack omega(A) - D * r(A); ties go to the smallest bitmask.
// Closed-set enumeration is verdict-preserving here too: closure keeps the
// rank and weights are non-negative, so slack never drops under closure.
inline std::optional<Violation> check_weighted(const WeightedInstance& inst) {
    detail::validate_instance(inst, "check_weighted");
    detail::require_exhaustive_size(inst.matroid, "check_weighted");

    long long best_slack = 0;
    std::optional<Violation> result;
    detail::for_each_closed(inst.matroid, [&](Subset a, int r) {
        long long slack = detail::weight_of(inst.weights, a) - inst.gon * r;
        if (slack > best_slack) {
            best_slack = slack;
            result = Violation{"weighted-independence", a,
                               Rational(detail::weight_of(inst.weights, a)),
                               Rational(inst.gon * r)};
        }
    });
    return result;
}

// Uniformly dense means no subset is denser than the whole ground set.
inline std::optional<Violation> check_uniformly_dense(const Matroid& m) {
    DensityReport report = max_density(m);
    Rational whole(m.size(), m.rank());
    if (report.gamma == whole) return std::nullopt;
    return Violation{"uniform-density", report.witness, report.gamma, whole};
}

// Does d * r(A) >= omega(A) hold for every nonempty A, with rational weights?
inline std::optional<Violation> check_rational(const Matroid& m,
                                               const std::vector<Rational>& weights,
                                               const Rational& d) {
    if (weights.size() != static_cast<std::size_t>(m.size()))
        throw PreconditionError("check_rational: weight count does not match the ground set");
    for (const Rational& w : weights)
        if (w < Rational(0)) throw PreconditionError("check_rational: negative weight");
    if (d <= Rational(0)) throw PreconditionError("check_rational: d must be positive");
    detail::require_exhaustive_size(m, "check_rational");

    Rational best_slack(0);
    std::optional<Violation> result;
    detail::for_each_closed(m, [&](Subset a, int r) {
        Rational total(0);
        for (int e : elements(a)) total += weights[static_cast<std::size_t>(e)];
        Rational slack = total - d * r;
        if (slack > best_slack) {
            best_slack = slack;
            result = Violation{"rational-density", a, total, d * r};
        }
    });
    return result;
}

// Does omega(A) >= D * (r(E) - r(E \ A)) hold for every A?  This is the
// mirror of check_weighted under matroid duality; spanning-window schedules
// rest on it.
inline std::optional<Violation> check_dual(const WeightedInstance& inst) {
    detail::validate_instance(inst, "check_dual");
    detail::require_exhaustive_size(inst.matroid, "check_dual");

    const Matroid& m = inst.matroid;
    Subset full = full_set(m.size());
    int full_rank = m.rank();

    long long best_deficiency = 0;
    std::optional<Violation> result;
    Subset a = 0;
    for (;;) {
        long long demand = inst.gon * (full_rank - m.rank(full & ~a));
        long long supply = detail::weight_of(inst.weights, a);
        if (demand - supply > best_deficiency) {
            best_deficiency = demand - supply;
            result = Violation{"dual-spanning", a, Rational(supply), Rational(demand)};
        }
        if (a == full) break;
        ++a;
    }
    return result;
}

// strength(M) = min |A| / (r(E) - r(E \ A)) over rank-dropping A.  The
// largest d for which spanning windows of circumference d can exist.
inline StrengthReport strength(const Matroid& m) {
    if (m.size() == 0 || m.rank() == 0)
        throw PreconditionError("strength: needs a matroid of positive rank");
    detail::require_exhaustive_size(m, "strength");
    require_loopless(m, "strength");

    Subset full = full_set(m.size());
    int full_rank = m.rank();
    std::optional<StrengthReport> best;
    Subset a = 1;
    for (;;) {
        int drop = full_rank - m.rank(full & ~a);
        if (drop >= 1) {
            Rational ratio(set_size(a), drop);
            if (!best || ratio < best->value) best = StrengthReport{ratio, a};
        }
        if (a == full) break;
        ++a;
    }
    return *best;  // A = E always drops the rank to 0
}

}  // namespace cygon
