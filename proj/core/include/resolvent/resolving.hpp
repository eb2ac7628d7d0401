#pragma once

#include <string_view>
#include <vector>

#include "resolvent/distances.hpp"
#include "resolvent/graph.hpp"
#include "resolvent/search.hpp"

namespace resolvent {

enum class Method { search, formula, reduction };

std::string_view to_string(Method m) noexcept;

struct DimensionResult {
    std::size_t value = 0;
    VertexSet witness;
    Method method = Method::search;
};

/// Distances from v to each landmark, in landmark order.
std::vector<std::uint32_t> metric_representation(const DistanceMatrix& d, std::span<const Vertex> landmarks,
                                                 Vertex v);

/// True iff d(u,w) != d(v,w). Throws Disconnected if any distance is infinite.
bool distinguishes(const Graph& g, Vertex w, Vertex u, Vertex v);

bool is_metric_generator(const Graph& g, const VertexSet& landmarks);

/// u and v share a class iff d(u,x) = d(v,x) for every x outside {u,v}.
std::vector<VertexSet> twin_classes(const Graph& g);

/// Sum over twin classes of (size - 1); every generator meets each class in
/// all but at most one vertex.
std::size_t twin_lower_bound(const std::vector<VertexSet>& classes);

/// Exact metric dimension with the lexicographically smallest basis.
DimensionResult metric_dimension(const Graph& g, const SearchLimits& limits = {});

}  // namespace resolvent
