#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "properties.hpp"
#include "resolvent/analysis.hpp"
#include "resolvent/families.hpp"
#include "resolvent/formulas.hpp"
#include "resolvent/isomorphism.hpp"
#include "resolvent/products.hpp"
#include "resolvent/resolving.hpp"
#include "resolvent/strong.hpp"
#include "resolvent/vertex_cover.hpp"

using namespace resolvent;

namespace {

constexpr std::size_t kCorpus = 100;

std::vector<Vertex> shuffled(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

std::vector<Graph> named_fixtures()
{
    return {path_graph(4),     path_graph(6),        cycle_graph(5),       cycle_graph(6),
            complete_graph(4), petersen_graph(),     subdivided_star(3),   star_graph(4),
            mobius_ladder(8),  complete_bipartite_graph(2, 3), direct_product(cycle_graph(5), path_graph(2)),
            cartesian_product(path_graph(3), path_graph(3))};
}

}  // namespace

TEST(ParityProperties, ConsistentWithBfs)
{
    for (const auto& g : props::gnp_corpus(kCorpus, 10, 101))
        EXPECT_EQ(props::parity_consistency(g), "");
}

TEST(ParityProperties, DirectDistanceFromFactors)
{
    auto corpus = props::gnp_corpus(2 * kCorpus, 8, 102);
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2)
        EXPECT_EQ(props::direct_distance_consistency(corpus[i], corpus[i + 1]), "");
}

TEST(CoverProperties, ValidAndMinimal)
{
    for (const auto& g : props::gnp_corpus(kCorpus, 10, 103))
        EXPECT_EQ(props::cover_valid_minimal(g), "");
}

TEST(CoverProperties, PendantRuleSound)
{
    for (const auto& g : props::gnp_corpus(kCorpus, 14, 104)) {
        auto k = kernelize_cover(g);
        EXPECT_EQ(k.forced.size() + oracle::vertex_cover(k.reduced), oracle::vertex_cover(g));
        for (Vertex v = 0; v < k.reduced.order(); ++v)
            EXPECT_GE(k.reduced.degree(v), 2u);
    }
}

TEST(StrongProperties, TwinsAreMutuallyMaximallyDistant)
{
    for (const auto& g : props::connected_corpus(kCorpus, 10, 105))
        EXPECT_EQ(props::twins_are_mmd(g), "");
}

TEST(StrongProperties, BoundaryEquality)
{
    for (const auto& g : props::connected_corpus(kCorpus, 10, 106))
        EXPECT_EQ(props::boundary_equality(g), "");
}

TEST(StrongProperties, ReductionMatchesBruteForce)
{
    auto corpus = named_fixtures();
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        corpus.push_back(random_connected_graph(3 + seed % 7, 20 + static_cast<unsigned>(seed % 41), seed));
    for (const auto& g : corpus) {
        auto a = strong_metric_dimension(g);
        EXPECT_EQ(a.value, strong_metric_dimension_bruteforce(g).value);
        EXPECT_TRUE(is_strong_generator(g, a.witness));
    }
}

TEST(StrongProperties, SrEdgesAreMmdPairs)
{
    for (const auto& g : props::connected_corpus(40, 9, 107)) {
        auto sr = strong_resolving_graph(g);
        auto host = sr.on_host(g.order());
        auto pairs = mmd_pairs(g);
        EXPECT_EQ(host.edges(), pairs);
        EXPECT_EQ(VertexSet(sr.origin), boundary(g));
    }
}

TEST(IsomorphismProperties, ReflexiveSymmetricRelabelInvariant)
{
    std::mt19937_64 rng(108);
    auto corpus = props::gnp_corpus(kCorpus, 10, 108);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        auto h = relabel(g, shuffled(g.order(), rng));
        EXPECT_TRUE(is_isomorphic(g, g));
        EXPECT_TRUE(is_isomorphic(g, h));
        EXPECT_TRUE(is_isomorphic(h, g));
        const auto& other = corpus[(i + 1) % corpus.size()];
        EXPECT_EQ(is_isomorphic(g, other), is_isomorphic(other, g));
    }
}

TEST(ProductProperties, DirectNeighbourhoodsAreProducts)
{
    auto corpus = props::gnp_corpus(40, 6, 109);
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
        const auto& g = corpus[i];
        const auto& h = corpus[i + 1];
        auto p = direct_product(g, h);
        for (Vertex v = 0; v < p.order(); ++v) {
            auto x = product_label(v, h.order());
            std::vector<Vertex> expected;
            for (auto a : g.neighbors(x.g))
                for (auto b : h.neighbors(x.h))
                    expected.push_back(product_index({a, b}, h.order()));
            std::sort(expected.begin(), expected.end());
            auto got = p.neighbors(v);
            EXPECT_EQ(std::vector<Vertex>(got.begin(), got.end()), expected);
        }
    }
}

TEST(ProductProperties, ConnectivityLaw)
{
    auto corpus = props::connected_corpus(40, 7, 110);
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
        const auto& g = corpus[i];
        const auto& h = corpus[i + 1];
        if (g.order() < 2 || h.order() < 2)
            continue;
        auto parts = connected_components(direct_product(g, h)).size();
        if (is_bipartite(g) && is_bipartite(h))
            EXPECT_EQ(parts, 2u);
        else
            EXPECT_EQ(parts, 1u);
    }
}

TEST(ProductProperties, Commutativity)
{
    auto corpus = props::gnp_corpus(30, 5, 111);
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
        const auto& g = corpus[i];
        const auto& h = corpus[i + 1];
        EXPECT_TRUE(is_isomorphic(direct_product(g, h), direct_product(h, g)));
        EXPECT_TRUE(is_isomorphic(cartesian_product(g, h), cartesian_product(h, g)));
    }
    EXPECT_FALSE(is_isomorphic(lexicographic_product(path_graph(3), complete_graph(2)),
                               lexicographic_product(complete_graph(2), path_graph(3))));
}

TEST(ProductProperties, OddCycleSquares)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        auto c = cycle_graph(2 * k + 1);
        EXPECT_TRUE(is_isomorphic(cartesian_product(c, c), direct_product(c, c)));
    }
    EXPECT_FALSE(is_isomorphic(cartesian_product(cycle_graph(4), cycle_graph(4)),
                               direct_product(cycle_graph(4), cycle_graph(4))));
}

TEST(ResolvingProperties, WitnessMinimalAndSupersetsResolve)
{
    std::mt19937_64 rng(112);
    for (const auto& g : props::connected_corpus(60, 9, 112)) {
        auto r = metric_dimension(g);
        ASSERT_TRUE(is_metric_generator(g, r.witness));
        EXPECT_GE(r.value, twin_lower_bound(twin_classes(g)));
        for (std::size_t drop = 0; drop < r.witness.size(); ++drop) {
            std::vector<Vertex> less;
            for (std::size_t i = 0; i < r.witness.size(); ++i)
                if (i != drop)
                    less.push_back(r.witness[i]);
            EXPECT_FALSE(is_metric_generator(g, VertexSet(less)));
        }
        auto wider = r.witness.members();
        wider.push_back(static_cast<Vertex>(rng() % g.order()));
        EXPECT_TRUE(is_metric_generator(g, VertexSet(wider)));
    }
}

TEST(FormulaProperties, CompleteParamsTerminateQuicklyAndSymmetric)
{
    for (std::size_t r = 2; r <= 60; ++r)
        for (std::size_t t = std::max<std::size_t>(r, 3); t <= 60; ++t) {
            auto p = complete_direct_params(r, t);
            EXPECT_LE(p.iterations, (r + 2) / 3);
            EXPECT_LE(p.r_prime, p.t_prime / 2 + 1);
            if (r >= 3)
                EXPECT_EQ(dim_complete_complete(r, t), dim_complete_complete(t, r));
        }
}

TEST(FormulaProperties, LiftedOverlayCoverScales)
{
    for (auto g : {path_graph(4), path_graph(5), path_graph(6), cycle_graph(6), cycle_graph(8), subdivided_star(3)}) {
        auto sr = strong_resolving_graph(g).on_host(g.order());
        auto base = vertex_cover_number(overlay_union(g, sr)).value;
        for (std::size_t n : {3u, 4u}) {
            auto lifted = overlay_union(cartesian_product(g, edgeless_graph(n)), lexicographic_product(sr, edgeless_graph(n)));
            EXPECT_EQ(vertex_cover_number(lifted).value, n * base);
        }
    }
}
