#include "vedeg/tree_canon.hpp"

#include <algorithm>

namespace vedeg {

std::vector<VertexId> tree_centroids(const Graph& g) {
    if (!g.is_tree())
        throw GraphError("tree operation on a non-tree graph");
    const int n = g.vertex_count();
    if (n == 1)
        return {0};

    // Subtree sizes from a DFS rooted at 0, then the largest component left
    // by removing v is max(n - size[v], largest child subtree).
    std::vector<int> parent(n, -1), order, size(n, 1);
    order.reserve(n);
    std::vector<VertexId> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (VertexId w : g.neighbors(u))
            if (parent[w] < 0) {
                parent[w] = u;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != 0)
            size[parent[*it]] += size[*it];

    std::vector<int> worst(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        worst[v] = (v == 0) ? 0 : n - size[v];
        for (VertexId w : g.neighbors(v))
            if (parent[w] == v)  // w is a DFS child of v
                worst[v] = std::max(worst[v], size[w]);
    }
    int best = *std::min_element(worst.begin(), worst.end());
    std::vector<VertexId> centroids;
    for (VertexId v = 0; v < n; ++v)
        if (worst[v] == best)
            centroids.push_back(v);
    return centroids;  // one or two for any tree
}

std::string rooted_canonical_form(const Graph& g, VertexId root, VertexId parent) {
    std::vector<std::string> child_forms;
    for (VertexId w : g.neighbors(root))
        if (w != parent)
            child_forms.push_back(rooted_canonical_form(g, w, root));
    std::sort(child_forms.begin(), child_forms.end());
    std::string out = "(";
    for (const auto& f : child_forms)
        out += f;
    out += ")";
    return out;
}

std::string tree_canonical_form(const Graph& g) {
    auto centroids = tree_centroids(g);
    std::string form = rooted_canonical_form(g, centroids[0]);
    if (centroids.size() == 2)
        form = std::min(form, rooted_canonical_form(g, centroids[1]));
    return form;
}

}  // namespace vedeg
