#include "properties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "resolvent/analysis.hpp"
#include "resolvent/distances.hpp"
#include "resolvent/families.hpp"
#include "resolvent/products.hpp"
#include "resolvent/resolving.hpp"
#include "resolvent/strong.hpp"
#include "resolvent/vertex_cover.hpp"

namespace props {

using namespace resolvent;

namespace {

template <class... Args>
std::string say(Args&&... args)
{
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

int as_int(Distance d)
{
    return d.is_finite() ? static_cast<int>(d.value()) : oracle::kInf;
}

}  // namespace

std::vector<Graph> connected_corpus(std::size_t count, std::size_t max_order, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto order = 2 + rng() % (max_order - 1);
        auto percent = static_cast<unsigned>(10 + rng() % 61);
        out.push_back(random_connected_graph(order, percent, rng()));
    }
    return out;
}

std::vector<Graph> gnp_corpus(std::size_t count, std::size_t max_order, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto order = 1 + rng() % max_order;
        auto percent = 5 + rng() % 60;
        std::vector<Edge> edges;
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v)
                if (rng() % 100 < percent)
                    edges.emplace_back(u, v);
        out.push_back(build_graph(order, edges));
    }
    return out;
}

std::string parity_consistency(const Graph& g)
{
    const bool bip = is_bipartite(g);
    for (Vertex s = 0; s < g.order(); ++s) {
        auto bfs = bfs_distances(g, s);
        auto par = parity_distances(g, s);
        for (Vertex u = 0; u < g.order(); ++u) {
            if (std::min(par.even[u], par.odd[u]) != bfs.dist[u])
                return say("min(even, odd) differs from BFS for ", s, "->", u);
            if (par.even[u].is_finite() && par.even[u].value() % 2 != 0)
                return say("even entry with odd length for ", s, "->", u);
            if (par.odd[u].is_finite() && par.odd[u].value() % 2 != 1)
                return say("odd entry with even length for ", s, "->", u);
            if (bip && bfs.dist[u].is_finite()) {
                const bool same_class = bfs.dist[u].value() % 2 == 0;
                if (same_class != par.odd[u].is_infinite())
                    return say("bipartite colour class mismatch for ", s, "->", u);
            }
        }
    }
    return {};
}

std::string parity_matches_oracle(const Graph& g)
{
    for (Vertex s = 0; s < g.order(); ++s) {
        auto par = parity_distances(g, s);
        auto [even, odd] = oracle::parity_walks(g, static_cast<int>(s));
        for (Vertex u = 0; u < g.order(); ++u)
            if (as_int(par.even[u]) != even[u] || as_int(par.odd[u]) != odd[u])
                return say("parity walk mismatch for ", s, "->", u);
    }
    return {};
}

std::string direct_distance_consistency(const Graph& g, const Graph& h)
{
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < h.order(); ++b)
            for (Vertex c = 0; c < g.order(); ++c)
                for (Vertex d = 0; d < h.order(); ++d) {
                    auto got = direct_distance(g, h, {a, b}, {c, d});
                    auto want = oracle::direct_product_distance(g, h, static_cast<int>(a), static_cast<int>(b),
                                                                static_cast<int>(c), static_cast<int>(d));
                    if (as_int(got) != want)
                        return say("direct distance (", a, ",", b, ")->(", c, ",", d, ") is ", got, ", BFS gives ",
                                   want);
                }
    return {};
}

std::string cover_valid_minimal(const Graph& g)
{
    auto result = vertex_cover_number(g);
    if (!is_vertex_cover(g, result.cover))
        return "reported set misses an edge";
    if (result.cover.size() != result.value)
        return "cover size differs from the reported value";
    for (auto v : result.cover) {
        std::vector<Vertex> rest;
        for (auto w : result.cover)
            if (w != v)
                rest.push_back(w);
        if (is_vertex_cover(g, VertexSet(rest)))
            return say("vertex ", v, " can be removed from the cover");
    }
    if (result.value != oracle::vertex_cover(g))
        return say("cover of size ", result.value, " but the optimum is ", oracle::vertex_cover(g));
    return {};
}

std::string twins_are_mmd(const Graph& g)
{
    DistanceMatrix d(g);
    auto pairs = mmd_pairs(g);
    for (const auto& cls : twin_classes(g))
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                auto u = cls[i];
                auto v = cls[j];
                if (d(u, v) == 2 && std::find(pairs.begin(), pairs.end(), Edge{u, v}) == pairs.end())
                    return say("twins ", u, ",", v, " at distance 2 are not MMD");
            }
    return {};
}

std::string boundary_equality(const Graph& g)
{
    auto b = boundary(g);
    if (b != maximally_distant_vertices(g))
        return say("boundary ", b, " differs from maximally distant vertices ", maximally_distant_vertices(g));
    std::vector<Vertex> ends;
    for (auto [u, v] : oracle::mmd_pairs(g)) {
        ends.push_back(static_cast<Vertex>(u));
        ends.push_back(static_cast<Vertex>(v));
    }
    if (b != VertexSet(ends))
        return say("boundary ", b, " differs from the MMD endpoints ", VertexSet(ends));
    return {};
}

}  // namespace props
