#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cygon/error.hpp"
#include "cygon/graph.hpp"
#include "cygon/rational.hpp"
#include "cygon/subset.hpp"

namespace cygon {

enum class MatroidKind {
    Uniform,
    Graphic,
    LinearGF,
    LinearRational,
    Partition,
    ExplicitBases,
    Dual,
    Minor,
    Truncation,
};

namespace detail {

struct RankOracle {
    virtual ~RankOracle() = default;
    virtual int rank(Subset a) const = 0;
};

struct UniformOracle final : RankOracle {
    int bound;
    explicit UniformOracle(int r) : bound(r) {}
    int rank(Subset a) const override { return std::min(set_size(a), bound); }
};

struct GraphicOracle final : RankOracle {
    Graph graph;
    explicit GraphicOracle(Graph g) : graph(std::move(g)) {}
    // Recomputed per query with a fresh union-find; simplicity over speed.
    int rank(Subset a) const override { return graph.forest_size(a); }
};

// Columns over GF(p), one column per element.
struct LinearGFOracle final : RankOracle {
    long long p;
    std::vector<std::vector<long long>> columns;

    LinearGFOracle(long long prime, std::vector<std::vector<long long>> cols)
        : p(prime), columns(std::move(cols)) {}

    int rank(Subset a) const override {
        std::vector<std::vector<long long>> pivots;
        int r = 0;
        for (int e : elements(a)) {
            std::vector<long long> v = columns[static_cast<std::size_t>(e)];
            for (const auto& pv : pivots) reduce(v, pv);
            std::size_t lead = leading(v);
            if (lead == v.size()) continue;
            normalize(v, lead);
            pivots.push_back(std::move(v));
            ++r;
        }
        return r;
    }

private:
    static std::size_t leading(const std::vector<long long>& v) {
        std::size_t i = 0;
        while (i < v.size() && v[i] == 0) ++i;
        return i;
    }

    long long inverse(long long a) const {
        // Fermat: p is prime and a != 0 mod p.
        long long result = 1, base = a % p, exp = p - 2;
        while (exp > 0) {
            if (exp & 1) result = result * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        return result;
    }

    void normalize(std::vector<long long>& v, std::size_t lead) const {
        long long inv = inverse(v[lead]);
        for (auto& x : v) x = x * inv % p;
    }

    void reduce(std::vector<long long>& v, const std::vector<long long>& pivot) const {
        std::size_t lead = leading(pivot);
        if (v[lead] == 0) return;
        long long factor = v[lead];
        for (std::size_t i = lead; i < v.size(); ++i)
            v[i] = ((v[i] - factor * pivot[i]) % p + p) % p;
    }
};

// Columns over the rationals, eliminated exactly.
struct LinearRationalOracle final : RankOracle {
    std::vector<std::vector<Rational>> columns;

    explicit LinearRationalOracle(std::vector<std::vector<Rational>> cols)
        : columns(std::move(cols)) {}

    int rank(Subset a) const override {
        std::vector<std::vector<Rational>> pivots;
        int r = 0;
        for (int e : elements(a)) {
            std::vector<Rational> v = columns[static_cast<std::size_t>(e)];
            for (const auto& pv : pivots) {
                std::size_t lead = leading(pv);
                if (v[lead] == Rational(0)) continue;
                Rational factor = v[lead] / pv[lead];
                for (std::size_t i = lead; i < v.size(); ++i) v[i] -= factor * pv[i];
            }
            if (leading(v) == v.size()) continue;
            pivots.push_back(std::move(v));
            ++r;
        }
        return r;
    }

private:
    static std::size_t leading(const std::vector<Rational>& v) {
        std::size_t i = 0;
        while (i < v.size() && v[i] == Rational(0)) ++i;
        return i;
    }
};

struct PartitionOracle final : RankOracle {
    // Block mask and capacity, blocks partition the ground set.
    std::vector<std::pair<Subset, int>> blocks;

    explicit PartitionOracle(std::vector<std::pair<Subset, int>> b) : blocks(std::move(b)) {}

    int rank(Subset a) const override {
        int r = 0;
        for (const auto& [mask, cap] : blocks) r += std::min(set_size(a & mask), cap);
        return r;
    }
};

struct BasesOracle final : RankOracle {
    std::vector<Subset> bases;

    explicit BasesOracle(std::vector<Subset> b) : bases(std::move(b)) {}

    // The rank of A is its largest intersection with a base.
    int rank(Subset a) const override {
        int r = 0;
        for (Subset b : bases) r = std::max(r, set_size(a & b));
        return r;
    }
};

}  // namespace detail

// Ground set bookkeeping: the element ids are always 0..size-1; labels are
// optional display strings (graph edges get "u-v").
struct GroundSet {
    int size = 0;
    std::vector<std::string> labels;  // empty, or one per element
};

// An immutable matroid given by a rank oracle.  Copies share the oracle, so
// passing matroids by value is cheap and concurrency-safe for readers.
class Matroid {
public:
    int size() const { return ground_.size; }
    MatroidKind kind() const { return kind_; }
    const GroundSet& ground() const { return ground_; }

    int rank(Subset a) const {
        if (a & ~full_set(ground_.size))
            throw PreconditionError("rank: subset has bits outside the ground set");
        return oracle_->rank(a);
    }

    int rank() const { return oracle_->rank(full_set(ground_.size)); }

    // --- construction -----------------------------------------------------

    static Matroid uniform(int r, int m);
    static Matroid graphic(Graph g);
    static Matroid linear_gf(long long p, const std::vector<std::vector<long long>>& rows);
    static Matroid linear_rational(const std::vector<std::vector<Rational>>& rows);
    static Matroid linear_rational(const std::vector<std::vector<long long>>& rows);
    // Consecutive blocks: {capacity, size} laid out left to right.
    static Matroid partition(const std::vector<std::pair<int, int>>& blocks);
    static Matroid explicit_bases(int m, std::vector<Subset> bases);

    // Used by dual/minor/truncation below, which may legitimately produce
    // loops; every operation that needs looplessness checks it at entry.
    static Matroid wrap(std::shared_ptr<const detail::RankOracle> oracle, GroundSet ground,
                        MatroidKind kind) {
        return Matroid(std::move(oracle), std::move(ground), kind);
    }

private:
    Matroid(std::shared_ptr<const detail::RankOracle> oracle, GroundSet ground, MatroidKind kind)
        : oracle_(std::move(oracle)), ground_(std::move(ground)), kind_(kind) {}

    std::shared_ptr<const detail::RankOracle> oracle_;
    GroundSet ground_;
    MatroidKind kind_;
};

inline bool is_independent(const Matroid& m, Subset a) { return m.rank(a) == set_size(a); }

inline bool is_base(const Matroid& m, Subset a) {
    return set_size(a) == m.rank() && is_independent(m, a);
}

inline bool is_loopless(const Matroid& m) {
    for (int e = 0; e < m.size(); ++e)
        if (m.rank(singleton(e)) == 0) return false;
    return true;
}

inline void require_loopless(const Matroid& m, const char* who) {
    for (int e = 0; e < m.size(); ++e)
        if (m.rank(singleton(e)) == 0)
            throw PreconditionError(std::string(who) + ": element " + std::to_string(e) +
                                    " is a loop");
}

// cl(A) = { e : r(A + e) = r(A) }.
inline Subset closure(const Matroid& m, Subset a) {
    int r0 = m.rank(a);
    Subset out = a;
    Subset rest = full_set(m.size()) & ~a;
    for (int e : elements(rest))
        if (m.rank(a | singleton(e)) == r0) out |= singleton(e);
    return out;
}

// A circuit of A through e, if one exists.  e must belong to A.
inline std::optional<Subset> circuit_through(const Matroid& m, int e, Subset a) {
    if (!contains(a, e)) throw PreconditionError("circuit_through: element not in the subset");
    Subset es = singleton(e);
    auto spanned = [&](Subset c) { return m.rank(c) == m.rank(c & ~es); };
    if (!spanned(a)) return std::nullopt;
    // Greedy deletion: drop anything whose removal keeps e spanned.  One
    // ascending pass is enough because spans only shrink as C shrinks.
    Subset c = a;
    for (int f : elements(a & ~es)) {
        Subset without = c & ~singleton(f);
        if (spanned(without)) c = without;
    }
    return c;
}

// r*(A) = |A| + r(E \ A) - r(E).
inline Matroid dual(const Matroid& m) {
    struct DualOracle final : detail::RankOracle {
        Matroid parent;
        Subset full;
        int full_rank;
        DualOracle(Matroid p, Subset f) : parent(std::move(p)), full(f), full_rank(parent.rank(f)) {}
        int rank(Subset a) const override {
            return set_size(a) + parent.rank(full & ~a) - full_rank;
        }
    };
    GroundSet ground = m.ground();
    auto oracle = std::make_shared<DualOracle>(m, full_set(m.size()));
    return Matroid::wrap(std::move(oracle), std::move(ground), MatroidKind::Dual);
}

// Contract `contract`, delete `del`; the survivors are renumbered 0..m'-1 in
// ascending order of their original ids.
inline Matroid minor(const Matroid& m, Subset contract, Subset del) {
    Subset full = full_set(m.size());
    if ((contract | del) & ~full)
        throw PreconditionError("minor: contract/delete outside the ground set");
    if (contract & del) throw PreconditionError("minor: contract and delete sets overlap");

    struct MinorOracle final : detail::RankOracle {
        Matroid parent;
        Subset contracted;
        int contracted_rank;
        std::vector<int> old_id;
        MinorOracle(Matroid p, Subset c, std::vector<int> ids)
            : parent(std::move(p)), contracted(c), contracted_rank(parent.rank(c)),
              old_id(std::move(ids)) {}
        int rank(Subset a) const override {
            Subset lifted = contracted;
            for (int e : elements(a)) lifted |= singleton(old_id[static_cast<std::size_t>(e)]);
            return parent.rank(lifted) - contracted_rank;
        }
    };

    std::vector<int> survivors = elements(full & ~(contract | del));
    GroundSet ground;
    ground.size = static_cast<int>(survivors.size());
    if (!m.ground().labels.empty())
        for (int e : survivors) ground.labels.push_back(m.ground().labels[static_cast<std::size_t>(e)]);
    auto oracle = std::make_shared<MinorOracle>(m, contract, survivors);
    return Matroid::wrap(std::move(oracle), std::move(ground), MatroidKind::Minor);
}

// Rank capped at w; ground set unchanged.
inline Matroid truncate(const Matroid& m, int w) {
    if (w < 1 || w > m.rank())
        throw PreconditionError("truncate: target rank must be between 1 and r(E)");
    struct TruncationOracle final : detail::RankOracle {
        Matroid parent;
        int cap;
        TruncationOracle(Matroid p, int w_) : parent(std::move(p)), cap(w_) {}
        int rank(Subset a) const override { return std::min(parent.rank(a), cap); }
    };
    GroundSet ground = m.ground();
    auto oracle = std::make_shared<TruncationOracle>(m, w);
    return Matroid::wrap(std::move(oracle), std::move(ground), MatroidKind::Truncation);
}

// All bases, ascending by bitmask.  Exhaustive; desk scale only.
inline std::vector<Subset> all_bases(const Matroid& m) {
    if (m.size() > kMaxExhaustiveSize)
        throw PreconditionError("all_bases: ground set too large for enumeration");
    int r = m.rank();
    std::vector<Subset> out;
    for (Subset a = 0; a <= full_set(m.size()); ++a) {
        if (set_size(a) == r && m.rank(a) == r) out.push_back(a);
        if (a == full_set(m.size())) break;  // avoid wrap at m = 64
    }
    return out;
}

// --- factories -------------------------------------------------------------

inline Matroid Matroid::uniform(int r, int m) {
    if (m < 0 || m > kMaxGroundSetSize) throw ConstructionError("uniform: bad ground set size");
    if (r < 0) throw ConstructionError("uniform: negative rank");
    if (r == 0 && m > 0) throw ConstructionError("uniform: rank 0 makes every element a loop");
    GroundSet ground{m, {}};
    return Matroid(std::make_shared<detail::UniformOracle>(r), std::move(ground),
                   MatroidKind::Uniform);
}

inline Matroid Matroid::graphic(Graph g) {
    GroundSet ground;
    ground.size = g.edge_count();
    ground.labels.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) ground.labels.push_back(g.edge_label(e));
    // Self-loops were rejected by the Graph constructor, so this is loopless.
    return Matroid(std::make_shared<detail::GraphicOracle>(std::move(g)), std::move(ground),
                   MatroidKind::Graphic);
}

inline Matroid Matroid::linear_gf(long long p, const std::vector<std::vector<long long>>& rows) {
    if (p < 2) throw ConstructionError("linear: field order must be at least 2");
    for (long long f = 2; f * f <= p; ++f)
        if (p % f == 0) throw ConstructionError("linear: field order must be prime");
    if (rows.empty()) throw ConstructionError("linear: empty matrix");
    std::size_t cols = rows.front().size();
    if (cols == 0 || cols > static_cast<std::size_t>(kMaxGroundSetSize))
        throw ConstructionError("linear: bad column count");
    for (const auto& row : rows)
        if (row.size() != cols) throw ConstructionError("linear: ragged matrix");

    std::vector<std::vector<long long>> columns(cols, std::vector<long long>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) columns[j][i] = ((rows[i][j] % p) + p) % p;
    for (std::size_t j = 0; j < cols; ++j)
        if (std::all_of(columns[j].begin(), columns[j].end(), [](long long x) { return x == 0; }))
            throw ConstructionError("linear: column " + std::to_string(j) +
                                    " is zero, element would be a loop");

    GroundSet ground{static_cast<int>(cols), {}};
    return Matroid(std::make_shared<detail::LinearGFOracle>(p, std::move(columns)),
                   std::move(ground), MatroidKind::LinearGF);
}

inline Matroid Matroid::linear_rational(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw ConstructionError("linear: empty matrix");
    std::size_t cols = rows.front().size();
    if (cols == 0 || cols > static_cast<std::size_t>(kMaxGroundSetSize))
        throw ConstructionError("linear: bad column count");
    for (const auto& row : rows)
        if (row.size() != cols) throw ConstructionError("linear: ragged matrix");

    std::vector<std::vector<Rational>> columns(cols, std::vector<Rational>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) columns[j][i] = rows[i][j];
    for (std::size_t j = 0; j < cols; ++j)
        if (std::all_of(columns[j].begin(), columns[j].end(),
                        [](const Rational& x) { return x == Rational(0); }))
            throw ConstructionError("linear: column " + std::to_string(j) +
                                    " is zero, element would be a loop");

    GroundSet ground{static_cast<int>(cols), {}};
    return Matroid(std::make_shared<detail::LinearRationalOracle>(std::move(columns)),
                   std::move(ground), MatroidKind::LinearRational);
}

inline Matroid Matroid::linear_rational(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Rational>> converted(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        converted[i].assign(rows[i].begin(), rows[i].end());
    return linear_rational(converted);
}

inline Matroid Matroid::partition(const std::vector<std::pair<int, int>>& blocks) {
    std::vector<std::pair<Subset, int>> masks;
    int next = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto [cap, size] = blocks[i];
        if (size <= 0) throw ConstructionError("partition: block " + std::to_string(i) +
                                               " has non-positive size");
        if (cap < 0) throw ConstructionError("partition: negative capacity");
        if (cap == 0)
            throw ConstructionError("partition: block " + std::to_string(i) +
                                    " has capacity 0, its elements would be loops");
        if (next + size > kMaxGroundSetSize) throw ConstructionError("partition: ground set too large");
        Subset mask = 0;
        for (int k = 0; k < size; ++k) mask |= singleton(next + k);
        masks.emplace_back(mask, cap);
        next += size;
    }
    if (next == 0) throw ConstructionError("partition: no blocks");
    GroundSet ground{next, {}};
    return Matroid(std::make_shared<detail::PartitionOracle>(std::move(masks)), std::move(ground),
                   MatroidKind::Partition);
}

inline Matroid Matroid::explicit_bases(int m, std::vector<Subset> bases) {
    if (m < 0 || m > kMaxGroundSetSize) throw ConstructionError("bases: bad ground set size");
    if (bases.empty()) throw ConstructionError("bases: empty base list");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

    Subset full = full_set(m);
    int r = set_size(bases.front());
    Subset covered = 0;
    for (Subset b : bases) {
        if (b & ~full) throw ConstructionError("bases: base uses an element outside the ground set");
        if (set_size(b) != r) throw ConstructionError("bases: bases must all have the same size");
        covered |= b;
    }
    if (covered != full) {
        int loop = std::countr_zero(full & ~covered);
        throw ConstructionError("bases: element " + std::to_string(loop) +
                                " lies in no base, it would be a loop");
    }
    // Exchange axiom, checked exhaustively on small instances.  Beyond the
    // size cap the list is trusted as given.
    if (m <= 12) {
        for (Subset b1 : bases) {
            for (Subset b2 : bases) {
                for (int x : elements(b1 & ~b2)) {
                    bool found = false;
                    for (int y : elements(b2 & ~b1)) {
                        Subset swapped = (b1 & ~singleton(x)) | singleton(y);
                        if (std::binary_search(bases.begin(), bases.end(), swapped)) {
                            found = true;
                            break;
                        }
                    }
                    if (!found)
                        throw ConstructionError(
                            "bases: exchange axiom fails for bases {" + format_subset(b1) +
                            "} and {" + format_subset(b2) + "} at element " + std::to_string(x));
                }
            }
        }
    }
    GroundSet ground{m, {}};
    return Matroid(std::make_shared<detail::BasesOracle>(std::move(bases)), std::move(ground),
                   MatroidKind::ExplicitBases);
}

}  // namespace cygon
