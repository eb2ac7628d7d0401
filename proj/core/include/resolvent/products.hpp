#pragma once

#include <cstddef>

#include "resolvent/graph.hpp"

namespace resolvent {

/// Row-major flat index of (g, h) in a product whose second factor has
/// `second_order` vertices.
[[nodiscard]] constexpr Vertex product_index(ProductVertexLabel x, std::size_t second_order) noexcept
{
    return static_cast<Vertex>(x.g * second_order + x.h);
}

[[nodiscard]] constexpr ProductVertexLabel product_label(Vertex v, std::size_t second_order) noexcept
{
    return {static_cast<Vertex>(v / second_order), static_cast<Vertex>(v % second_order)};
}

/// (g,h) ~ (g',h') iff gg' in E(G) and hh' in E(H).
Graph direct_product(const Graph& g, const Graph& h);

/// (g,h) ~ (g',h') iff g = g' and hh' in E(H), or h = h' and gg' in E(G).
Graph cartesian_product(const Graph& g, const Graph& h);

/// (g,h) ~ (g',h') iff g = g' and hh' in E(H), or gg' in E(G). Not commutative.
Graph lexicographic_product(const Graph& g, const Graph& h);

}  // namespace resolvent
