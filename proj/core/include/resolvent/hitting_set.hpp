#pragma once

#include <cstddef>
#include <vector>

#include "resolvent/bitset.hpp"
#include "resolvent/search.hpp"
#include "resolvent/vertex_set.hpp"

namespace resolvent {

/// Find a minimum subset of 0..universe-1 meeting every set.
struct HittingSetProblem {
    std::size_t universe = 0;
    std::vector<Bitset> sets;
};

struct HittingSetResult {
    VertexSet witness;  // lexicographically smallest among minimum hitting sets
    std::uint64_t nodes = 0;
};

/// Exact minimum hitting set.
///
/// Supersets of other sets are dropped first. The optimum is found by
/// iterative deepening on k from max(lower_bound, packing bound); each
/// decision branches on the unhit set with fewest available elements and
/// prunes with a greedy disjoint-set packing bound. The lexicographically
/// smallest optimum is then fixed element by element with the same decision
/// procedure. Throws BadParams for an empty set and BudgetExceeded on caps.
HittingSetResult minimum_hitting_set(const HittingSetProblem& problem, std::size_t lower_bound = 0,
                                     const SearchLimits& limits = {});

}  // namespace resolvent
