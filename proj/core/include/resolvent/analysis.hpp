#pragma once

#include "resolvent/distance.hpp"
#include "resolvent/graph.hpp"

namespace resolvent {

struct GraphAnalysis {
    bool connected = true;
    bool bipartite = true;
    Distance diameter;  // infinite when disconnected
    VertexSet triangle_vertices;
};

GraphAnalysis analyze(const Graph& g);

[[nodiscard]] bool is_connected(const Graph& g);
[[nodiscard]] bool is_bipartite(const Graph& g);
[[nodiscard]] bool is_triangle_free(const Graph& g);
[[nodiscard]] bool is_tree(const Graph& g);

/// True iff every pair of distinct vertices lies on a common 5-cycle and
/// every vertex lies on some 5-cycle.
[[nodiscard]] bool is_c5_connected(const Graph& g);

/// Partition into connected components, each listed in increasing order.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace resolvent
