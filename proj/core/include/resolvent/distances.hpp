#pragma once

#include <cstdint>
#include <vector>

#include "resolvent/distance.hpp"
#include "resolvent/graph.hpp"

namespace resolvent {

struct DistanceRow {
    Vertex source = 0;
    std::vector<Distance> dist;
};

/// Shortest even and odd walk lengths from one source.
struct ParityDistances {
    Vertex source = 0;
    std::vector<Distance> even;
    std::vector<Distance> odd;
};

DistanceRow bfs_distances(const Graph& g, Vertex source);

/// Breadth-first search over (vertex, parity) states.
ParityDistances parity_distances(const Graph& g, Vertex source);

/// Distance in G x H from walk parities of the factors:
/// min(max(even_G, even_H), max(odd_G, odd_H)), except that a vertex with an
/// isolated coordinate reaches only itself.
Distance direct_distance(const Graph& g, const Graph& h, ProductVertexLabel from, ProductVertexLabel to);

/// All-pairs distances of a connected graph. Construction throws
/// Disconnected, so every stored entry is finite.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] std::uint32_t operator()(Vertex u, Vertex v) const noexcept
    {
        return data_[static_cast<std::size_t>(u) * order_ + v];
    }
    [[nodiscard]] std::uint32_t diameter() const noexcept { return diameter_; }

private:
    std::size_t order_ = 0;
    std::uint32_t diameter_ = 0;
    std::vector<std::uint32_t> data_;
};

}  // namespace resolvent
