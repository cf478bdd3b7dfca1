#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "vedeg/graph.hpp"

namespace vedeg {

inline constexpr int kMaxSmallVertices = 16;
inline constexpr int kMaxTreeOrder = 10;       // n^(n-2) = 1e8 at n = 10
inline constexpr int kMaxConnectedOrder = 7;   // 2^21 edge subsets at n = 7

/// Compact graph for the enumeration kernels: one adjacency bitmask row per
/// vertex. Supports at most kMaxSmallVertices vertices.
struct SmallGraph {
    int n = 0;
    std::array<std::uint32_t, kMaxSmallVertices> adj{};

    void add_edge(int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    bool has_edge(int u, int v) const { return adj[u] >> v & 1u; }
    int degree(int v) const { return std::popcount(adj[v]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; ++v)
            total += degree(v);
        return total / 2;
    }

    bool is_connected() const {
        if (n <= 0)
            return false;
        std::uint32_t seen = 1u, frontier = 1u;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t m = frontier; m; m &= m - 1)
                next |= adj[std::countr_zero(m)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (n == 32 ? ~0u : (1u << n) - 1u);
    }

    /// Edges as (u,v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (std::uint32_t m = adj[u] >> (u + 1) << (u + 1); m; m &= m - 1)
                out.emplace_back(u, std::countr_zero(m));
        return out;
    }

    Graph to_graph() const { return Graph::from_edge_list(n, edge_list()); }

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

/// Number of labeled trees on n vertices, n^(n-2) (Cayley).
std::uint64_t labeled_tree_count(int n);

/// Decode a Prufer sequence (length n-2, entries in 0..n-1) into its tree.
SmallGraph tree_from_prufer(int n, std::span<const int> seq);

/// Tree number `index` in [0, n^(n-2)): the index is read as the little-endian
/// base-n digits of the Prufer sequence.
SmallGraph tree_from_index(int n, std::uint64_t index);

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Edge assigned to mask bit `bit`: pairs (u,v), u < v, in lexicographic order.
std::pair<int, int> mask_bit_edge(int n, int bit);

/// Graph whose edge set is the given bitmask over the lexicographic pair list.
/// Not necessarily connected.
SmallGraph graph_from_mask(int n, std::uint64_t mask);

/// All n^(n-2) labeled trees, each exactly once. 2 <= n <= kMaxTreeOrder.
template <typename F>
void for_each_labeled_tree(int n, F&& fn) {
    const std::uint64_t total = labeled_tree_count(n);  // validates n
    for (std::uint64_t i = 0; i < total; ++i)
        fn(tree_from_index(n, i));
}

/// All labeled connected simple graphs on n vertices, by filtering edge
/// subsets for connectivity. 2 <= n <= kMaxConnectedOrder.
template <typename F>
void for_each_connected_graph(int n, F&& fn) {
    if (n < 2 || n > kMaxConnectedOrder)
        throw GraphError("connected-graph enumeration supports 2 <= n <= " +
                         std::to_string(kMaxConnectedOrder) + ", got " + std::to_string(n));
    const std::uint64_t masks = 1ull << pair_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        SmallGraph g = graph_from_mask(n, mask);
        if (g.is_connected())
            fn(g);
    }
}

}  // namespace vedeg
