#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cygon/error.hpp"
#include "cygon/subset.hpp"

namespace cygon {

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // True when the two vertices were in different components.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace detail

// A multigraph on vertices 0..vertex_count-1.  Parallel edges are fine
// (they become parallel matroid elements); self-loops are rejected because
// the matroids in this library are loopless.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> e) : vertex_count(n), edges(std::move(e)) {
        if (n < 0) throw ConstructionError("graph: negative vertex count");
        if (edges.size() > static_cast<std::size_t>(kMaxGroundSetSize))
            throw ConstructionError("graph: more than 64 edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ConstructionError("graph: edge " + std::to_string(i) + " endpoint out of range");
            if (u == v)
                throw ConstructionError("graph: edge " + std::to_string(i) + " is a self-loop");
        }
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    // Number of successful unions over an edge subset; this equals the rank
    // of the subset in the cycle matroid.
    int forest_size(Subset edge_set) const {
        detail::UnionFind uf(vertex_count);
        int merges = 0;
        for (int e : elements(edge_set))
            if (uf.unite(edges[static_cast<std::size_t>(e)].first,
                         edges[static_cast<std::size_t>(e)].second))
                ++merges;
        return merges;
    }

    // Component count of (V, edge_set), counting isolated vertices.
    int components(Subset edge_set) const { return vertex_count - forest_size(edge_set); }

    int components() const { return components(full_set(edge_count())); }

    std::string edge_label(int e) const {
        auto [u, v] = edges[static_cast<std::size_t>(e)];
        return std::to_string(u) + '-' + std::to_string(v);
    }
};

}  // namespace cygon
