#pragma once

// Shared builders and deliberately naive reference implementations.  The
// naive routines recompute everything from first principles (full subset
// enumeration, DFS component counts, dense circle sampling) so the library
// code they cross-check shares nothing with them.

#include <numeric>
#include <optional>
#include <vector>

#include "cygon/cygon.hpp"

namespace support {

using namespace cygon;

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph path_graph(int vertices) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < vertices; ++v) edges.emplace_back(v, v + 1);
    return Graph(vertices, edges);
}

inline Graph triangle_with_pendant() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

inline Graph two_triangles() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// Rank of an edge subset as vertices minus components, counted by DFS.
inline int naive_graph_rank(const Graph& g, Subset a) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count));
    for (int e : elements(a)) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<bool> visited(static_cast<std::size_t>(g.vertex_count), false);
    int components = 0;
    for (int start = 0; start < g.vertex_count; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        ++components;
        std::vector<int> stack{start};
        visited[static_cast<std::size_t>(start)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
    }
    return g.vertex_count - components;
}

// Densest-set ratio over every nonempty subset, no closed-set shortcut.
inline Rational naive_gamma(const Matroid& m) {
    Rational best(0);
    Subset full = full_set(m.size());
    for (Subset a = 1;; ++a) {
        best = std::max(best, Rational(set_size(a), m.rank(a)));
        if (a == full) break;
    }
    return best;
}

// Counting condition over every nonempty subset.
inline bool naive_weighted_ok(const WeightedInstance& inst) {
    Subset full = full_set(inst.matroid.size());
    if (full == kEmptySet) return true;
    for (Subset a = 1;; ++a) {
        long long w = 0;
        for (int e : elements(a)) w += inst.weights[static_cast<std::size_t>(e)];
        if (w > inst.gon * inst.matroid.rank(a)) return false;
        if (a == full) break;
    }
    return true;
}

inline Rational naive_strength(const Matroid& m) {
    int r = m.rank();
    Subset full = full_set(m.size());
    std::optional<Rational> best;
    for (Subset a = 1;; ++a) {
        int drop = r - m.rank(full & ~a);
        if (drop > 0) {
            Rational ratio(set_size(a), drop);
            if (!best || ratio < *best) best = ratio;
        }
        if (a == full) break;
    }
    return *best;
}

// Exhaustive circle check by sampling twice as finely as every denominator
// in sight: window membership only switches on the common grid, so hitting
// each half-step catches every window there is.
inline bool naive_circle_ok(const Matroid& m, const CircleMapping& c) {
    long long scale = c.circumference.denominator();
    for (const Rational& p : c.position) scale = std::lcm(scale, p.denominator());
    scale *= 2;
    long long samples = (c.circumference * scale).numerator();
    for (long long j = 0; j < samples; ++j) {
        Rational t(j, scale);
        Subset window = 0;
        for (int e = 0; e < m.size(); ++e) {
            Rational diff = t - c.position[static_cast<std::size_t>(e)];
            while (diff < Rational(0)) diff += c.circumference;
            while (diff >= c.circumference) diff -= c.circumference;
            if (diff < Rational(1)) window |= singleton(e);
        }
        bool ok = c.mode == WindowMode::Independent ? is_independent(m, window)
                                                    : m.rank(window) == m.rank();
        if (!ok) return false;
    }
    return true;
}

}  // namespace support
