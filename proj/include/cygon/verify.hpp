#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cygon/error.hpp"
#include "cygon/mappings.hpp"
#include "cygon/matroid.hpp"
#include "cygon/rational.hpp"
#include "cygon/subset.hpp"

// Independent validators and brute-force oracles.  Nothing here shares
// window or scheduling code with the producing algorithms: windows are
// recomputed from scratch, so a bug in a producer cannot hide itself.

namespace cygon {

struct GonFailure {
    long long point = 0;  // 1..D
    Subset window = 0;
};

struct CircleFailure {
    Rational point{0};
    Subset window = 0;
};

struct OrderingFailure {
    int start = 0;  // index into the sequence
    Subset window = 0;
};

struct CoverFailure {
    std::string reason;
};

struct FractionalFailure {
    std::string reason;
};

namespace detail {

constexpr long long kMaxVerifyGon = 10'000'000;

// Windows built by marking each element's covered points, never by the
// producers' point-membership test.
inline std::vector<Subset> gon_windows(const GonMapping& m) {
    if (m.gon < 1) throw PreconditionError("gon mapping: D must be positive");
    if (m.gon > kMaxVerifyGon)
        throw PreconditionError("gon mapping: D too large for exhaustive verification");
    if (m.weight.size() != m.position.size())
        throw PreconditionError("gon mapping: weight and position counts differ");
    std::vector<Subset> windows(static_cast<std::size_t>(m.gon) + 1, kEmptySet);
    for (int e = 0; e < m.size(); ++e) {
        long long p = m.position[static_cast<std::size_t>(e)];
        long long w = m.weight[static_cast<std::size_t>(e)];
        if (p < 1 || p > m.gon)
            throw PreconditionError("gon mapping: position of element " + std::to_string(e) +
                                    " outside 1..D");
        if (w < 0) throw PreconditionError("gon mapping: negative weight");
        long long cover = std::min(w, m.gon);
        for (long long k = 0; k < cover; ++k) {
            long long x = (p - 1 + k) % m.gon + 1;
            windows[static_cast<std::size_t>(x)] |= singleton(e);
        }
    }
    return windows;
}

inline bool window_ok(const Matroid& m, Subset w, WindowMode mode) {
    return mode == WindowMode::Independent ? is_independent(m, w) : m.rank(w) == m.rank();
}

}  // namespace detail

// Checks every point of the D-gon.  Returns the first failing point, or
// nothing when the mapping is valid for the requested mode.
inline std::optional<GonFailure> verify_gon_mapping(const Matroid& m, const GonMapping& mapping,
                                                    WindowMode mode = WindowMode::Independent) {
    if (mapping.size() != m.size())
        throw PreconditionError("verify_gon_mapping: mapping size does not match the ground set");
    std::vector<Subset> windows = detail::gon_windows(mapping);
    for (long long x = 1; x <= mapping.gon; ++x)
        if (!detail::window_ok(m, windows[static_cast<std::size_t>(x)], mode))
            return GonFailure{x, windows[static_cast<std::size_t>(x)]};
    return std::nullopt;
}

// Window contents on the circle only change when the left end of a unit
// window crosses some position(e) or position(e) - 1, so checking those
// critical points exactly covers every window.
inline std::optional<CircleFailure> verify_circle_mapping(const Matroid& m,
                                                          const CircleMapping& mapping) {
    if (mapping.size() != m.size())
        throw PreconditionError("verify_circle_mapping: mapping size does not match the ground set");
    const Rational d = mapping.circumference;
    if (d <= Rational(0)) throw PreconditionError("verify_circle_mapping: circumference not positive");
    for (const Rational& p : mapping.position)
        if (p < Rational(0) || p >= d)
            throw PreconditionError("verify_circle_mapping: position outside [0, d)");

    std::vector<Rational> critical;
    critical.reserve(2 * mapping.position.size());
    for (const Rational& p : mapping.position) {
        critical.push_back(p);
        Rational back = p - Rational(1);
        while (back < Rational(0)) back += d;
        critical.push_back(back);
    }
    std::sort(critical.begin(), critical.end());
    critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

    for (const Rational& x : critical) {
        Subset w = 0;
        for (int e = 0; e < mapping.size(); ++e) {
            Rational offset = mapping.position[static_cast<std::size_t>(e)] - x;
            while (offset < Rational(0)) offset += d;
            if (offset < Rational(1)) w |= singleton(e);
        }
        if (!detail::window_ok(m, w, mapping.mode)) return CircleFailure{x, w};
    }
    return std::nullopt;
}

// All m cyclic windows of the given length must be bases (Base mode) or
// independent (Independent mode).
inline std::optional<OrderingFailure> verify_cyclic_ordering(const Matroid& m,
                                                             const CyclicOrdering& ordering,
                                                             int window_length,
                                                             OrderingMode mode) {
    int n = m.size();
    if (static_cast<int>(ordering.sequence.size()) != n)
        throw PreconditionError("verify_cyclic_ordering: sequence length does not match the ground set");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int e : ordering.sequence) {
        if (e < 0 || e >= n || seen[static_cast<std::size_t>(e)])
            throw PreconditionError("verify_cyclic_ordering: sequence is not a permutation");
        seen[static_cast<std::size_t>(e)] = true;
    }
    if (window_length < 1 || window_length > n)
        throw PreconditionError("verify_cyclic_ordering: bad window length");

    for (int i = 0; i < n; ++i) {
        Subset w = 0;
        for (int k = 0; k < window_length; ++k)
            w |= singleton(ordering.sequence[static_cast<std::size_t>((i + k) % n)]);
        bool ok = mode == OrderingMode::Base ? is_independent(m, w) && m.rank(w) == m.rank()
                                             : is_independent(m, w);
        if (!ok) return OrderingFailure{i, w};
    }
    return std::nullopt;
}

// For an exchange sequence (b_1..b_r, b'_1..b'_r): every r consecutive
// entries, linearly (r + 1 windows), must form a base.
inline std::optional<OrderingFailure> verify_linear_base_sequence(const Matroid& m,
                                                                  const std::vector<int>& seq) {
    int r = m.rank();
    if (static_cast<int>(seq.size()) != 2 * r)
        throw PreconditionError("verify_linear_base_sequence: expected 2 * r(E) entries");
    for (int e : seq)
        if (e < 0 || e >= m.size())
            throw PreconditionError("verify_linear_base_sequence: element out of range");
    for (int i = 0; i + r <= 2 * r; ++i) {
        Subset w = 0;
        for (int k = 0; k < r; ++k) w |= singleton(seq[static_cast<std::size_t>(i + k)]);
        if (set_size(w) != r || !is_base(m, w)) return OrderingFailure{i, w};
    }
    return std::nullopt;
}

inline std::optional<CoverFailure> verify_cover(const Matroid& m, const BaseCover& cover) {
    Subset covered = 0;
    for (std::size_t i = 0; i < cover.bases.size(); ++i) {
        if (!is_base(m, cover.bases[i]))
            return CoverFailure{"entry " + std::to_string(i) + " ({" +
                                format_subset(cover.bases[i]) + "}) is not a base"};
        covered |= cover.bases[i];
    }
    Subset missing = full_set(m.size()) & ~covered;
    if (missing)
        return CoverFailure{"element " + std::to_string(std::countr_zero(missing)) +
                            " is not covered"};
    return std::nullopt;
}

// Weights must sit on bases, be non-negative, total exactly `target`, and
// give every element coverage at least 1.
inline std::optional<FractionalFailure> verify_fractional(const Matroid& m,
                                                          const FractionalWeights& fw,
                                                          const Rational& target) {
    std::vector<Rational> coverage(static_cast<std::size_t>(m.size()), Rational(0));
    Rational total(0);
    for (const auto& [base, x] : fw.entries) {
        if (!is_base(m, base))
            return FractionalFailure{"weight on non-base {" + format_subset(base) + "}"};
        if (x < Rational(0)) return FractionalFailure{"negative weight on {" + format_subset(base) + "}"};
        total += x;
        for (int e : elements(base)) coverage[static_cast<std::size_t>(e)] += x;
    }
    if (total != target)
        return FractionalFailure{"weights total " + format_rational(total) + ", expected " +
                                 format_rational(target)};
    for (int e = 0; e < m.size(); ++e)
        if (coverage[static_cast<std::size_t>(e)] < Rational(1))
            return FractionalFailure{"element " + std::to_string(e) + " has coverage " +
                                     format_rational(coverage[static_cast<std::size_t>(e)]) +
                                     " < 1"};
    return std::nullopt;
}

// Exhaustive search over all D^m gon mappings in lexicographic order
// (element 0 varies slowest).  The oracle the push engine is tested against.
inline std::optional<GonMapping> brute_force_assign(const Matroid& m,
                                                    const std::vector<long long>& weights,
                                                    long long gon) {
    if (weights.size() != static_cast<std::size_t>(m.size()))
        throw PreconditionError("brute_force_assign: weight count does not match the ground set");
    if (gon < 1) throw PreconditionError("brute_force_assign: D must be positive");

    long long count = 1;
    for (int e = 0; e < m.size(); ++e) {
        count *= gon;
        if (count > 10'000'000)
            throw PreconditionError("brute_force_assign: D^m exceeds the search budget");
    }

    GonMapping candidate;
    candidate.gon = gon;
    candidate.weight = weights;
    candidate.position.assign(static_cast<std::size_t>(m.size()), 1);
    for (;;) {
        if (!verify_gon_mapping(m, candidate, WindowMode::Independent)) return candidate;
        // Odometer step: last element fastest, so mappings appear in
        // lexicographic order of (phi(0), phi(1), ...).
        int i = m.size() - 1;
        while (i >= 0 && candidate.position[static_cast<std::size_t>(i)] == gon) {
            candidate.position[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) return std::nullopt;
        ++candidate.position[static_cast<std::size_t>(i)];
    }
}

// Smallest number of independent sets whose union is E, by subset dynamic
// programming.  Extending each independent set to a base never hurts, so
// this equals the smallest number of bases covering E.
inline int brute_force_min_cover(const Matroid& m) {
    if (m.size() < 1 || m.size() > 8)
        throw PreconditionError("brute_force_min_cover: supported for 1 <= m <= 8");
    require_loopless(m, "brute_force_min_cover");

    Subset full = full_set(m.size());
    std::vector<bool> independent(static_cast<std::size_t>(full) + 1);
    for (Subset a = 0; a <= full; ++a) independent[static_cast<std::size_t>(a)] = is_independent(m, a);

    const int kInf = m.size() + 1;
    std::vector<int> best(static_cast<std::size_t>(full) + 1, kInf);
    best[0] = 0;
    for (Subset covered = 0; covered < full; ++covered) {
        if (best[static_cast<std::size_t>(covered)] == kInf) continue;
        Subset rest = full & ~covered;
        Subset must = singleton(std::countr_zero(rest));
        // Every submask of `rest` containing the lowest missing element.
        for (Subset s = rest;; s = (s - 1) & rest) {
            if ((s & must) && independent[static_cast<std::size_t>(s)]) {
                int& target = best[static_cast<std::size_t>(covered | s)];
                target = std::min(target, best[static_cast<std::size_t>(covered)] + 1);
            }
            if (s == 0) break;
        }
    }
    return best[static_cast<std::size_t>(full)];
}

}  // namespace cygon
