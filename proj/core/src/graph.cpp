#include "resolvent/graph.hpp"

#include <algorithm>
#include <ostream>

#include "resolvent/distance.hpp"
#include "resolvent/error.hpp"

namespace resolvent {

std::uint32_t Distance::value() const
{
    if (is_infinite())
        throw Error(ErrorCode::disconnected, "value() of an infinite distance");
    return length_;
}

std::ostream& operator<<(std::ostream& os, Distance d)
{
    if (d.is_infinite())
        return os << "inf";
    return os << d.value();
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::from_bits(const Bitset& bits)
{
    VertexSet s;
    bits.for_each([&](std::size_t i) { s.members_.push_back(static_cast<Vertex>(i)); });
    return s;
}

bool VertexSet::contains(Vertex v) const noexcept
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

Bitset VertexSet::to_bits(std::size_t universe) const
{
    check_within(universe);
    Bitset b(universe);
    for (auto v : members_)
        b.set(v);
    return b;
}

void VertexSet::check_within(std::size_t order) const
{
    if (!members_.empty() && members_.back() >= order)
        throw Error(ErrorCode::index_out_of_range,
                    "vertex " + std::to_string(members_.back()) + " outside graph of order " +
                        std::to_string(order));
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s)
{
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    return os << '}';
}

Graph build_graph(std::size_t order, std::span<const Edge> edges)
{
    Graph g;
    g.adjacency_.assign(order, {});
    g.adjacency_bits_.assign(order, Bitset(order));
    for (auto [u, v] : edges) {
        if (u >= order || v >= order)
            throw Error(ErrorCode::index_out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") in graph of order " +
                            std::to_string(order));
        if (u == v)
            throw Error(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(u));
        if (g.adjacency_bits_[u].test(v))
            continue;
        g.adjacency_bits_[u].set(v);
        g.adjacency_bits_[v].set(u);
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto& list : g.adjacency_)
        std::sort(list.begin(), list.end());
    return g;
}

Graph build_graph(std::size_t order, std::initializer_list<Edge> edges)
{
    return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::vertex_name(Vertex v) const
{
    if (labels_)
        return "(" + std::to_string((*labels_)[v].g) + "," + std::to_string((*labels_)[v].h) + ")";
    return std::to_string(v);
}

Graph Graph::with_labels(std::vector<ProductVertexLabel> labels) const
{
    if (labels.size() != order())
        throw Error(ErrorCode::size_mismatch, "label count differs from graph order");
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

Graph Graph::without_labels() const
{
    Graph copy = *this;
    copy.labels_.reset();
    return copy;
}

bool Graph::same_edges(const Graph& other) const
{
    return adjacency_ == other.adjacency_;
}

Graph overlay_union(const Graph& a, const Graph& b)
{
    if (a.order() != b.order())
        throw Error(ErrorCode::size_mismatch,
                    "overlay of graphs with orders " + std::to_string(a.order()) + " and " +
                        std::to_string(b.order()));
    auto edges = a.edges();
    auto more = b.edges();
    edges.insert(edges.end(), more.begin(), more.end());
    Graph out = build_graph(a.order(), edges);
    if (a.labels())
        out = out.with_labels(*a.labels());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    keep.check_within(g.order());
    std::vector<Vertex> local(g.order(), static_cast<Vertex>(-1));
    InducedSubgraph out;
    out.origin = keep.members();
    for (std::size_t i = 0; i < out.origin.size(); ++i)
        local[out.origin[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v))
            edges.emplace_back(local[u], local[v]);
    out.graph = build_graph(out.origin.size(), edges);
    return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != g.order())
        throw Error(ErrorCode::size_mismatch, "permutation length differs from graph order");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return build_graph(g.order(), edges);
}

}  // namespace resolvent
