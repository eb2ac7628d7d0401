#pragma once

#include <vector>

#include "resolvent/graph.hpp"
#include "resolvent/vertex_cover.hpp"

namespace resolvent {

struct TreeView {
    Graph tree;
    VertexSet leaves;
    VertexSet supports;                // vertices adjacent to a leaf
    Graph pruned;                      // tree minus its leaves
    std::vector<Vertex> pruned_origin; // pruned vertex i is tree vertex pruned_origin[i]
};

/// Throws NotATree unless `t` is a tree of order >= 3.
TreeView tree_view(const Graph& t);

/// Linear-time in/out dynamic program rooted at vertex 0. Vertices in
/// `forced` may not be left out. Throws NotATree.
CoverResult tree_vertex_cover(const Graph& t, const VertexSet& forced = {});

/// Some support vertex lies in a minimum vertex cover of the pruned tree.
/// Throws NotATree, or Not2MMF when the tree is not 2MMF.
bool is_good_tree(const Graph& t);

}  // namespace resolvent
