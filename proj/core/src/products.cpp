#include "resolvent/products.hpp"

#include <vector>

namespace resolvent {

namespace {

template <class Adjacent>
Graph product(const Graph& g, const Graph& h, Adjacent adjacent)
{
    const auto m = h.order();
    const auto order = g.order() * m;
    std::vector<Edge> edges;
    std::vector<ProductVertexLabel> labels(order);
    for (Vertex x = 0; x < order; ++x) {
        labels[x] = product_label(x, m);
        for (Vertex y = x + 1; y < order; ++y)
            if (adjacent(labels[x], product_label(y, m)))
                edges.emplace_back(x, y);
    }
    return build_graph(order, edges).with_labels(std::move(labels));
}

}  // namespace

Graph direct_product(const Graph& g, const Graph& h)
{
    return product(g, h, [&](ProductVertexLabel a, ProductVertexLabel b) {
        return g.adjacent(a.g, b.g) && h.adjacent(a.h, b.h);
    });
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    return product(g, h, [&](ProductVertexLabel a, ProductVertexLabel b) {
        return (a.g == b.g && h.adjacent(a.h, b.h)) || (a.h == b.h && g.adjacent(a.g, b.g));
    });
}

Graph lexicographic_product(const Graph& g, const Graph& h)
{
    return product(g, h, [&](ProductVertexLabel a, ProductVertexLabel b) {
        return (a.g == b.g && h.adjacent(a.h, b.h)) || g.adjacent(a.g, b.g);
    });
}

}  // namespace resolvent
