#pragma once

#include <string>
#include <vector>

#include "vedeg/graph.hpp"

namespace vedeg {

/// The one or two centroids of a tree (vertices minimizing the largest
/// component left by their removal). Throws GraphError on a non-tree.
std::vector<VertexId> tree_centroids(const Graph& g);

/// AHU-style encoding of the subtree rooted at `root`, entered from `parent`
/// (-1 for the whole tree): "(" + sorted child encodings + ")".
std::string rooted_canonical_form(const Graph& g, VertexId root, VertexId parent = -1);

/// Canonical encoding rooted at a centroid (the smaller of the two rooted
/// strings when the tree has two centroids). Two trees are isomorphic iff
/// their canonical forms are equal. Throws GraphError on a non-tree.
std::string tree_canonical_form(const Graph& g);

}  // namespace vedeg
