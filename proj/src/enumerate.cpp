#include "vedeg/enumerate.hpp"

#include <string>

namespace vedeg {

std::uint64_t labeled_tree_count(int n) {
    if (n < 2 || n > kMaxTreeOrder)
        throw GraphError("labeled-tree enumeration supports 2 <= n <= " +
                         std::to_string(kMaxTreeOrder) + ", got " + std::to_string(n));
    std::uint64_t total = 1;
    for (int i = 0; i < n - 2; ++i)
        total *= static_cast<std::uint64_t>(n);
    return total;
}

SmallGraph tree_from_prufer(int n, std::span<const int> seq) {
    SmallGraph g;
    g.n = n;
    std::array<int, kMaxSmallVertices> deg{};
    for (int v = 0; v < n; ++v)
        deg[v] = 1;
    for (int x : seq)
        ++deg[x];

    for (int x : seq) {
        int leaf = 0;
        while (deg[leaf] != 1)
            ++leaf;
        g.add_edge(leaf, x);
        deg[leaf] = 0;
        --deg[x];
    }
    int a = 0;
    while (deg[a] != 1)
        ++a;
    int b = a + 1;
    while (deg[b] != 1)
        ++b;
    g.add_edge(a, b);
    return g;
}

SmallGraph tree_from_index(int n, std::uint64_t index) {
    std::array<int, kMaxSmallVertices> seq{};
    for (int i = 0; i < n - 2; ++i) {
        seq[i] = static_cast<int>(index % static_cast<std::uint64_t>(n));
        index /= static_cast<std::uint64_t>(n);
    }
    return tree_from_prufer(n, std::span<const int>(seq.data(), static_cast<size_t>(n - 2)));
}

std::pair<int, int> mask_bit_edge(int n, int bit) {
    for (int u = 0; u < n; ++u) {
        int row = n - 1 - u;
        if (bit < row)
            return {u, u + 1 + bit};
        bit -= row;
    }
    return {-1, -1};  // unreachable for valid input
}

SmallGraph graph_from_mask(int n, std::uint64_t mask) {
    SmallGraph g;
    g.n = n;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1ull)
                g.add_edge(u, v);
    return g;
}

}  // namespace vedeg
