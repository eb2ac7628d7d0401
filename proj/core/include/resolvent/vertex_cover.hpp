#pragma once

#include <vector>

#include "resolvent/graph.hpp"
#include "resolvent/search.hpp"

namespace resolvent {

struct CoverResult {
    std::size_t value = 0;
    VertexSet cover;
    bool optimal = true;
};

struct CoverOptions {
    SearchLimits limits;
    /// Report the lexicographically smallest minimum cover. Costs up to one
    /// extra bounded solve per vertex.
    bool lexicographic = true;
};

/// Result of the isolated-vertex and pendant rules applied to a fixpoint:
/// beta(g) = forced.size() + beta(reduced).
struct CoverKernel {
    Graph reduced;
    std::vector<Vertex> origin;  // reduced vertex i is g vertex origin[i]
    VertexSet forced;
};

CoverKernel kernelize_cover(const Graph& g);

[[nodiscard]] bool is_vertex_cover(const Graph& g, const VertexSet& cover);

/// Exact vertex cover number.
///
/// Branch and bound over induced subgraphs. Each node first applies the
/// isolated-vertex rule and the pendant rule (take the neighbour of a
/// degree-1 vertex), splits into connected components, solves cycles
/// directly, and otherwise branches on a maximum-degree vertex: either it
/// joins the cover or its whole neighbourhood does. Pruning uses the larger
/// of a greedy matching and a greedy clique-partition lower bound.
/// Throws BudgetExceeded carrying the root bounds and a greedy cover.
CoverResult vertex_cover_number(const Graph& g, const CoverOptions& options = {});

}  // namespace resolvent
