#include "resolvent/distances.hpp"

#include <algorithm>
#include <string>

#include "resolvent/error.hpp"

namespace resolvent {

namespace {

void check_vertex(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw Error(ErrorCode::index_out_of_range,
                    "vertex " + std::to_string(v) + " outside graph of order " + std::to_string(g.order()));
}

}  // namespace

DistanceRow bfs_distances(const Graph& g, Vertex source)
{
    check_vertex(g, source);
    DistanceRow row{source, std::vector<Distance>(g.order(), Distance::infinity())};
    std::vector<Vertex> queue{source};
    row.dist[source] = Distance(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto u = queue[head];
        auto next = Distance(row.dist[u].value() + 1);
        for (auto w : g.neighbors(u))
            if (row.dist[w].is_infinite()) {
                row.dist[w] = next;
                queue.push_back(w);
            }
    }
    return row;
}

ParityDistances parity_distances(const Graph& g, Vertex source)
{
    check_vertex(g, source);
    const auto n = g.order();
    ParityDistances out{source, std::vector<Distance>(n, Distance::infinity()),
                        std::vector<Distance>(n, Distance::infinity())};
    // State (v, p): p = 0 for even walks, 1 for odd.
    std::vector<std::pair<Vertex, int>> queue{{source, 0}};
    out.even[source] = Distance(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [u, parity] = queue[head];
        auto here = parity == 0 ? out.even[u] : out.odd[u];
        auto next = Distance(here.value() + 1);
        auto& target = parity == 0 ? out.odd : out.even;
        for (auto w : g.neighbors(u))
            if (target[w].is_infinite()) {
                target[w] = next;
                queue.emplace_back(w, 1 - parity);
            }
    }
    return out;
}

Distance direct_distance(const Graph& g, const Graph& h, ProductVertexLabel from, ProductVertexLabel to)
{
    check_vertex(g, to.g);
    check_vertex(h, to.h);
    auto pg = parity_distances(g, from.g);
    auto ph = parity_distances(h, from.h);
    // An isolated coordinate cannot pad a zero-length walk, so (g,h) is isolated.
    if (g.degree(from.g) == 0 || h.degree(from.h) == 0)
        return from == to ? Distance(0) : Distance::infinity();
    auto even = std::max(pg.even[to.g], ph.even[to.h]);
    auto odd = std::max(pg.odd[to.g], ph.odd[to.h]);
    return std::min(even, odd);
}

DistanceMatrix::DistanceMatrix(const Graph& g) : order_(g.order()), data_(order_ * order_, 0)
{
    std::vector<Vertex> queue;
    queue.reserve(order_);
    std::vector<std::uint32_t> dist(order_);
    constexpr auto unseen = static_cast<std::uint32_t>(-1);
    for (Vertex s = 0; s < order_; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        queue.assign(1, s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            for (auto w : g.neighbors(u))
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        if (queue.size() != order_)
            throw Error(ErrorCode::disconnected, "graph of order " + std::to_string(order_) + " is disconnected");
        std::copy(dist.begin(), dist.end(), data_.begin() + static_cast<std::ptrdiff_t>(s * order_));
        diameter_ = std::max(diameter_, dist[queue.back()]);
    }
}

}  // namespace resolvent
