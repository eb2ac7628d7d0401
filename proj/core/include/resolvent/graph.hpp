#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resolvent/bitset.hpp"
#include "resolvent/vertex_set.hpp"

namespace resolvent {

using Edge = std::pair<Vertex, Vertex>;

/// Coordinates of a product vertex. Flat index is g * |V(H)| + h.
struct ProductVertexLabel {
    Vertex g = 0;
    Vertex h = 0;

    friend auto operator<=>(const ProductVertexLabel&, const ProductVertexLabel&) = default;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Neighbor lists are sorted; a per-vertex adjacency bitset backs adjacent()
/// and the bitset-based search engines. Optional labels carry product
/// coordinates for display.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] std::size_t order() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    [[nodiscard]] const Bitset& neighbor_bits(Vertex v) const { return adjacency_bits_[v]; }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return adjacency_bits_[u].test(v); }

    /// Edges as (u, v) with u < v in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] const std::optional<std::vector<ProductVertexLabel>>& labels() const noexcept
    {
        return labels_;
    }
    /// "(g,h)" when labelled, otherwise the index.
    [[nodiscard]] std::string vertex_name(Vertex v) const;

    [[nodiscard]] Graph with_labels(std::vector<ProductVertexLabel> labels) const;
    [[nodiscard]] Graph without_labels() const;

    /// Same vertex count and edge set; labels are ignored.
    [[nodiscard]] bool same_edges(const Graph& other) const;

private:
    friend Graph build_graph(std::size_t order, std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Bitset> adjacency_bits_;
    std::size_t edge_count_ = 0;
    std::optional<std::vector<ProductVertexLabel>> labels_;
};

/// Deduplicates and symmetrizes; throws IndexOutOfRange or SelfLoop.
Graph build_graph(std::size_t order, std::span<const Edge> edges);
Graph build_graph(std::size_t order, std::initializer_list<Edge> edges);

/// Edge-set union on a shared vertex set. Throws SizeMismatch.
Graph overlay_union(const Graph& a, const Graph& b);

/// Subgraph induced by `keep`; origin[i] is the host index of vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> origin;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Graph relabelled through a permutation: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace resolvent
