#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "resolvent/graph.hpp"

namespace resolvent {

struct IsomorphismOptions {
    std::size_t max_order = 60;
};

/// Exact isomorphism by backtracking over colour-refined vertex classes.
/// Candidate classes start from degrees and are refined by the multiset of
/// neighbour classes; each branch individualises one vertex per side.
/// Returns perm with a ~ b edges mapping (u, v) to (perm[u], perm[v]).
/// Throws TooLarge when either graph exceeds options.max_order.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    const IsomorphismOptions& options = {});

bool is_isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options = {});

}  // namespace resolvent
