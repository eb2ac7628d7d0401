#include "resolvent/analysis.hpp"

#include <algorithm>

#include "resolvent/distances.hpp"

namespace resolvent {

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> members{s};
        seen[s] = true;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (auto w : g.neighbors(members[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    members.push_back(w);
                }
        out.emplace_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() == 0 || connected_components(g).size() == 1;
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> color(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[s] != -1)
            continue;
        color[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            for (auto w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

VertexSet triangle_vertices(const Graph& g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nbrs = g.neighbors(v);
        bool found = false;
        for (std::size_t i = 0; i < nbrs.size() && !found; ++i)
            found = g.neighbor_bits(nbrs[i]).intersects(g.neighbor_bits(v));
        if (found)
            out.push_back(v);
    }
    return VertexSet(std::move(out));
}

}  // namespace

bool is_triangle_free(const Graph& g)
{
    return triangle_vertices(g).empty();
}

bool is_tree(const Graph& g)
{
    return g.order() > 0 && g.size() + 1 == g.order() && is_connected(g);
}

GraphAnalysis analyze(const Graph& g)
{
    GraphAnalysis out;
    out.connected = is_connected(g);
    out.bipartite = is_bipartite(g);
    out.triangle_vertices = triangle_vertices(g);
    if (!out.connected) {
        out.diameter = Distance::infinity();
    } else if (g.order() > 0) {
        out.diameter = Distance(DistanceMatrix(g).diameter());
    }
    return out;
}

bool is_c5_connected(const Graph& g)
{
    const auto n = g.order();
    if (n < 5)
        return false;
    // covered[u * n + v]: u and v seen together on a 5-cycle (u == v: u on one).
    std::vector<char> covered(n * n, 0);
    std::size_t remaining = n * (n + 1) / 2;
    auto mark = [&](const Vertex (&cycle)[5]) {
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j) {
                auto a = std::min(cycle[i], cycle[j]);
                auto b = std::max(cycle[i], cycle[j]);
                if (!covered[a * n + b]) {
                    covered[a * n + b] = 1;
                    --remaining;
                }
            }
    };
    // Each 5-cycle is enumerated from its smallest vertex a, walking a-b-c-d-e-a
    // with b < e so every cycle is visited once.
    for (Vertex a = 0; a < n && remaining > 0; ++a)
        for (auto b : g.neighbors(a)) {
            if (b <= a)
                continue;
            for (auto c : g.neighbors(b)) {
                if (c <= a || c == b)
                    continue;
                for (auto d : g.neighbors(c)) {
                    if (d <= a || d == b || d == c)
                        continue;
                    for (auto e : g.neighbors(d)) {
                        if (e <= b || e == c || e == d || !g.adjacent(e, a))
                            continue;
                        const Vertex cycle[5] = {a, b, c, d, e};
                        mark(cycle);
                    }
                }
            }
        }
    return remaining == 0;
}

}  // namespace resolvent
