#include "resolvent/resolving.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "resolvent/hitting_set.hpp"

namespace resolvent {

std::string_view to_string(Method m) noexcept
{
    switch (m) {
    case Method::search: return "search";
    case Method::formula: return "formula";
    case Method::reduction: return "reduction";
    }
    return "?";
}

std::vector<std::uint32_t> metric_representation(const DistanceMatrix& d, std::span<const Vertex> landmarks,
                                                 Vertex v)
{
    std::vector<std::uint32_t> out;
    out.reserve(landmarks.size());
    for (auto w : landmarks)
        out.push_back(d(v, w));
    return out;
}

bool distinguishes(const Graph& g, Vertex w, Vertex u, Vertex v)
{
    auto row = bfs_distances(g, w);
    if (u >= g.order() || v >= g.order())
        throw Error(ErrorCode::index_out_of_range, "vertex outside graph");
    if (row.dist[u].is_infinite() || row.dist[v].is_infinite())
        throw Error(ErrorCode::disconnected, "landmark does not reach both vertices");
    return row.dist[u] != row.dist[v];
}

bool is_metric_generator(const Graph& g, const VertexSet& landmarks)
{
    landmarks.check_within(g.order());
    DistanceMatrix d(g);
    std::set<std::vector<std::uint32_t>> seen;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!seen.insert(metric_representation(d, landmarks.members(), v)).second)
            return false;
    return true;
}

std::vector<VertexSet> twin_classes(const Graph& g)
{
    DistanceMatrix d(g);
    const auto n = g.order();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool twins = true;
            for (Vertex x = 0; x < n && twins; ++x)
                twins = x == u || x == v || d(u, x) == d(v, x);
            if (twins)
                parent[find(v)] = find(u);
        }
    std::vector<std::vector<Vertex>> groups(n);
    for (Vertex v = 0; v < n; ++v)
        groups[find(v)].push_back(v);
    std::vector<VertexSet> out;
    for (auto& grp : groups)
        if (!grp.empty())
            out.emplace_back(std::move(grp));
    return out;
}

std::size_t twin_lower_bound(const std::vector<VertexSet>& classes)
{
    std::size_t bound = 0;
    for (const auto& c : classes)
        bound += c.size() - 1;
    return bound;
}

DimensionResult metric_dimension(const Graph& g, const SearchLimits& limits)
{
    DistanceMatrix d(g);
    const auto n = g.order();
    HittingSetProblem problem{n, {}};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            Bitset hitters(n);
            for (Vertex w = 0; w < n; ++w)
                if (d(u, w) != d(v, w))
                    hitters.set(w);
            problem.sets.push_back(std::move(hitters));
        }
    auto result = minimum_hitting_set(problem, twin_lower_bound(twin_classes(g)), limits);
    return {result.witness.size(), std::move(result.witness), Method::search};
}

}  // namespace resolvent
