#include "resolvent/strong.hpp"

#include <algorithm>

#include "resolvent/distances.hpp"
#include "resolvent/hitting_set.hpp"

namespace resolvent {

namespace {

bool maximally_distant(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v)
{
    const auto here = d(v, u);
    return std::all_of(g.neighbors(u).begin(), g.neighbors(u).end(), [&](Vertex w) { return d(v, w) <= here; });
}

std::vector<Edge> mmd_pairs(const Graph& g, const DistanceMatrix& d)
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (maximally_distant(g, d, u, v) && maximally_distant(g, d, v, u))
                out.emplace_back(u, v);
    return out;
}

bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v)
{
    return d(w, u) == d(w, v) + d(v, u) || d(w, v) == d(w, u) + d(u, v);
}

void check(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw Error(ErrorCode::index_out_of_range, "vertex " + std::to_string(v) + " outside graph");
}

}  // namespace

bool is_maximally_distant(const Graph& g, Vertex u, Vertex v)
{
    check(g, u);
    check(g, v);
    return maximally_distant(g, DistanceMatrix(g), u, v);
}

std::vector<Edge> mmd_pairs(const Graph& g)
{
    return mmd_pairs(g, DistanceMatrix(g));
}

VertexSet boundary(const Graph& g)
{
    std::vector<Vertex> ends;
    for (auto [u, v] : mmd_pairs(g)) {
        ends.push_back(u);
        ends.push_back(v);
    }
    return VertexSet(std::move(ends));
}

VertexSet maximally_distant_vertices(const Graph& g)
{
    DistanceMatrix d(g);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
            if (u != v && maximally_distant(g, d, u, v)) {
                out.push_back(u);
                break;
            }
    return VertexSet(std::move(out));
}

Graph SRGraph::on_host(std::size_t host_order) const
{
    std::vector<Edge> edges;
    for (auto [u, v] : graph.edges())
        edges.emplace_back(origin[u], origin[v]);
    return build_graph(host_order, edges);
}

SRGraph strong_resolving_graph(const Graph& g)
{
    auto pairs = mmd_pairs(g);
    std::vector<Vertex> ends;
    for (auto [u, v] : pairs) {
        ends.push_back(u);
        ends.push_back(v);
    }
    SRGraph out;
    out.origin = VertexSet(std::move(ends)).members();
    std::vector<Vertex> local(g.order(), 0);
    for (std::size_t i = 0; i < out.origin.size(); ++i)
        local[out.origin[i]] = static_cast<Vertex>(i);
    for (auto& [u, v] : pairs) {
        u = local[u];
        v = local[v];
    }
    out.graph = build_graph(out.origin.size(), pairs);
    if (g.labels()) {
        std::vector<ProductVertexLabel> labels;
        for (auto v : out.origin)
            labels.push_back((*g.labels())[v]);
        out.graph = out.graph.with_labels(std::move(labels));
    }
    return out;
}

bool strongly_resolves(const Graph& g, Vertex w, Vertex u, Vertex v)
{
    check(g, w);
    check(g, u);
    check(g, v);
    return strongly_resolves(DistanceMatrix(g), w, u, v);
}

bool is_strong_generator(const Graph& g, const VertexSet& s)
{
    s.check_within(g.order());
    DistanceMatrix d(g);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (std::none_of(s.begin(), s.end(), [&](Vertex w) { return strongly_resolves(d, w, u, v); }))
                return false;
    return true;
}

DimensionResult strong_metric_dimension(const Graph& g, const CoverOptions& options)
{
    auto sr = strong_resolving_graph(g);
    auto cover = vertex_cover_number(sr.graph, options);
    std::vector<Vertex> witness;
    for (auto v : cover.cover)
        witness.push_back(sr.origin[v]);
    return {cover.value, VertexSet(std::move(witness)), Method::reduction};
}

DimensionResult strong_metric_dimension_bruteforce(const Graph& g, const SearchLimits& limits)
{
    DistanceMatrix d(g);
    const auto n = g.order();
    HittingSetProblem problem{n, {}};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            Bitset hitters(n);
            for (Vertex w = 0; w < n; ++w)
                if (strongly_resolves(d, w, u, v))
                    hitters.set(w);
            problem.sets.push_back(std::move(hitters));
        }
    auto result = minimum_hitting_set(problem, 0, limits);
    return {result.witness.size(), std::move(result.witness), Method::search};
}

bool is_2mmf(const Graph& g)
{
    DistanceMatrix d(g);
    auto pairs = mmd_pairs(g, d);
    return std::none_of(pairs.begin(), pairs.end(), [&](const Edge& e) { return d(e.first, e.second) == 2; });
}

}  // namespace resolvent
