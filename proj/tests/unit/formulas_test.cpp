#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "resolvent/analysis.hpp"
#include "resolvent/families.hpp"
#include "resolvent/formulas.hpp"
#include "resolvent/isomorphism.hpp"
#include "resolvent/products.hpp"
#include "resolvent/resolving.hpp"
#include "resolvent/strong.hpp"

using namespace resolvent;

namespace {

void expect_code(ErrorCode code, const std::function<void()>& f)
{
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

Graph kk(std::size_t r, std::size_t t)
{
    return direct_product(complete_graph(r), complete_graph(t));
}

Graph ck(std::size_t r, std::size_t t)
{
    return direct_product(cycle_graph(r), complete_graph(t));
}

Graph pk(std::size_t r, std::size_t t)
{
    return direct_product(path_graph(r), complete_graph(t));
}

SelfCheck checked()
{
    SelfCheck c;
    c.enabled = true;
    c.size_cap = 40;
    return c;
}

}  // namespace

TEST(CompleteDirect, Parameters)
{
    auto p = complete_direct_params(4, 3);
    EXPECT_EQ(p.r, 3u);
    EXPECT_EQ(p.t, 4u);
    EXPECT_EQ(p.a, 0u);
    EXPECT_EQ(p.r_prime, 3);
    EXPECT_EQ(p.t_prime, 4);
    auto q = complete_direct_params(3, 3);
    EXPECT_EQ(q.a, 1u);
    EXPECT_EQ(q.r_prime, 0);
    EXPECT_EQ(q.t_prime, 0);
    expect_code(ErrorCode::bad_params, [] { complete_direct_params(1, 5); });
    expect_code(ErrorCode::bad_params, [] { complete_direct_params(2, 2); });
}

TEST(CompleteDirect, SmallValues)
{
    EXPECT_EQ(dim_complete_complete(3, 3), 3u);
    EXPECT_EQ(dim_complete_complete(4, 4), 4u);
    EXPECT_EQ(dim_complete_complete(3, 4), 4u);
    EXPECT_EQ(dim_complete_complete(4, 3), 4u);
    EXPECT_EQ(dim_complete_complete(2, 3), 2u);
}

TEST(CompleteDirect, MatchesSearchOnSmallGrid)
{
    for (std::size_t r = 2; r <= 5; ++r)
        for (std::size_t t = std::max<std::size_t>(r, 3); t <= 5; ++t) {
            auto formula = dim_complete_complete(r, t);
            EXPECT_EQ(formula, oracle::metric_dimension(kk(r, t))) << r << "," << t;
            EXPECT_NO_THROW(dim_complete_complete(r, t, checked()));
        }
}

TEST(CompleteDirect, ExplicitGeneratorsResolve)
{
    for (std::size_t r = 2; r <= 7; ++r)
        for (std::size_t t = std::max<std::size_t>(r, 3); t <= 7; ++t) {
            auto c = construct_complete_complete(r, t);
            EXPECT_TRUE(c.explicit_set) << r << "," << t << ": " << c.failure;
            EXPECT_EQ(c.set.size(), dim_complete_complete(r, t));
            EXPECT_TRUE(is_metric_generator(kk(r, t), c.set));
        }
}

TEST(CompleteDirect, TwoByFiveGenerator)
{
    auto s = generator_complete_complete(2, 5);
    EXPECT_EQ(s.size(), 4u);
    EXPECT_TRUE(is_metric_generator(kk(2, 5), s));
    auto swapped = generator_complete_complete(5, 2);
    EXPECT_TRUE(is_metric_generator(kk(5, 2), swapped));
}

TEST(CycleComplete, ClosedForm)
{
    EXPECT_EQ(dim_cycle_complete(4, 3), 4u);
    EXPECT_EQ(dim_cycle_complete(6, 3), 4u);
    EXPECT_EQ(dim_cycle_complete(7, 3), 6u);
    EXPECT_EQ(dim_cycle_complete(9, 5), 12u);
    expect_code(ErrorCode::bad_params, [] { dim_cycle_complete(3, 3); });
    expect_code(ErrorCode::bad_params, [] { dim_cycle_complete(5, 2); });
}

TEST(CycleComplete, ExactValuesDifferFromClosedForm)
{
    // Subset enumeration, independent of the library search.
    EXPECT_EQ(oracle::metric_dimension(ck(4, 3)), 6u);
    EXPECT_EQ(oracle::metric_dimension(ck(7, 3)), 5u);
    EXPECT_EQ(oracle::metric_dimension(ck(6, 3)), 6u);
    EXPECT_EQ(metric_dimension(ck(4, 3)).value, 6u);
    EXPECT_EQ(metric_dimension(ck(7, 3)).value, 5u);
    EXPECT_EQ(metric_dimension(ck(6, 4)).value, 7u);
    expect_code(ErrorCode::formula_mismatch, [] { dim_cycle_complete(4, 3, checked()); });
    expect_code(ErrorCode::formula_mismatch, [] { dim_cycle_complete(7, 3, checked()); });
}

TEST(CycleComplete, ExactValuesMatchClosedForm)
{
    EXPECT_EQ(oracle::metric_dimension(ck(5, 3)), 4u);
    EXPECT_EQ(metric_dimension(ck(8, 3)).value, dim_cycle_complete(8, 3));
    EXPECT_EQ(metric_dimension(ck(5, 4)).value, dim_cycle_complete(5, 4));
    EXPECT_NO_THROW(dim_cycle_complete(5, 3, checked()));
}

TEST(CycleComplete, SpecialSixCycleSet)
{
    // The special set resolves only once t reaches 6; below that the exact
    // dimension also exceeds the closed form, so no basis of that size exists.
    expect_code(ErrorCode::formula_mismatch, [] { construct_cycle_complete(6, 3); });
    auto big = construct_cycle_complete(6, 6);
    EXPECT_TRUE(big.explicit_set) << big.failure;
    EXPECT_TRUE(is_metric_generator(ck(6, 6), big.set));
}

TEST(CycleComplete, FallbackBasisWhenExplicitSetFails)
{
    auto c = construct_cycle_complete(5, 3);
    EXPECT_FALSE(c.explicit_set);
    EXPECT_NE(c.failure.find("ConstructionFailed"), std::string::npos);
    EXPECT_EQ(c.set.size(), 4u);
    EXPECT_TRUE(is_metric_generator(ck(5, 3), c.set));
    auto ok = construct_cycle_complete(7, 4);
    EXPECT_TRUE(ok.explicit_set);
    EXPECT_TRUE(is_metric_generator(ck(7, 4), ok.set));
}

TEST(PathComplete, ClosedFormAndExactValues)
{
    EXPECT_EQ(dim_path_complete(3, 3), 2u);
    EXPECT_EQ(dim_path_complete(4, 3), 4u);
    EXPECT_EQ(dim_path_complete(6, 4), 6u);
    EXPECT_EQ(oracle::metric_dimension(pk(3, 3)), 5u);
    EXPECT_EQ(oracle::metric_dimension(pk(4, 3)), 4u);
    EXPECT_EQ(metric_dimension(pk(6, 4)).value, 6u);
    expect_code(ErrorCode::formula_mismatch, [] { dim_path_complete(3, 3, checked()); });
    EXPECT_NO_THROW(dim_path_complete(4, 3, checked()));
    expect_code(ErrorCode::bad_params, [] { dim_path_complete(2, 3); });
}

TEST(PathComplete, ExplicitGeneratorsForLongerPaths)
{
    for (std::size_t r = 4; r <= 8; ++r) {
        auto c = construct_path_complete(r, 3);
        EXPECT_TRUE(c.explicit_set) << r << ": " << c.failure;
        EXPECT_EQ(c.set.size(), dim_path_complete(r, 3));
        EXPECT_TRUE(is_metric_generator(pk(r, 3), c.set));
    }
}

TEST(OddCyclePair, SmallValues)
{
    EXPECT_EQ(dim_odd_cycle_pair(1), 3u);
    EXPECT_EQ(dim_odd_cycle_pair(2, checked()), 3u);
    auto g = direct_product(cycle_graph(7), cycle_graph(7));
    EXPECT_TRUE(oracle::has_resolving_set(g, 3));
    EXPECT_FALSE(oracle::has_resolving_set(g, 2));
    expect_code(ErrorCode::bad_params, [] { dim_odd_cycle_pair(0); });
}

TEST(SrOverlay, MatchesProductStructure)
{
    for (auto g : {path_graph(4), cycle_graph(6), path_graph(5), subdivided_star(3)}) {
        auto host = direct_product(g, complete_graph(3));
        auto sr = strong_resolving_graph(host).on_host(host.order());
        EXPECT_TRUE(is_isomorphic(sr_overlay_complete(g, 3), sr));
    }
}

TEST(SrOverlay, Preconditions)
{
    expect_code(ErrorCode::not_2mmf, [] { sr_overlay_complete(cycle_graph(5), 3); });
    expect_code(ErrorCode::bad_params, [] { sr_overlay_complete(path_graph(4), 2); });
    expect_code(ErrorCode::disconnected, [] { sr_overlay_complete(edgeless_graph(4), 3); });
}

TEST(TrianglesInFactor, OverlayDiffersFromProduct)
{
    // K3 x K3 has SR graph K3 box K3 (18 edges); the overlay is complete.
    auto host = kk(3, 3);
    auto sr = strong_resolving_graph(host).on_host(9);
    EXPECT_EQ(sr.size(), 18u);
    EXPECT_EQ(sr_overlay_complete(complete_graph(3), 3).size(), 36u);
    EXPECT_EQ(strong_metric_dimension(host).value, 6u);
    EXPECT_EQ(oracle::strong_dimension(host), 6u);
}

TEST(StrongStructure, SmallValues)
{
    EXPECT_EQ(sdim_structure_complete(path_graph(4), 3), 6u);
    EXPECT_EQ(sdim_structure_complete(path_graph(5), 3), 9u);
    EXPECT_EQ(sdim_structure_complete(cycle_graph(6), 3),
              strong_metric_dimension(direct_product(cycle_graph(6), complete_graph(3))).value);
}

TEST(StrongTrees, SmallValues)
{
    EXPECT_EQ(sdim_tree_complete(path_graph(6), 3), 9u);
    EXPECT_EQ(sdim_tree_complete(subdivided_star(3), 3), 12u);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto t = make_family(random_2mmf_tree_spec(4, 10, seed));
        EXPECT_EQ(sdim_tree_complete(t, 3), strong_metric_dimension(direct_product(t, complete_graph(3))).value);
    }
    expect_code(ErrorCode::not_a_tree, [] { sdim_tree_complete(cycle_graph(6), 3); });
    expect_code(ErrorCode::not_2mmf, [] { sdim_tree_complete(star_graph(3), 3); });
}

TEST(StrongTrees, PathsAndSpiders)
{
    for (std::size_t n1 = 4; n1 <= 8; ++n1)
        EXPECT_EQ(sdim_path_complete(n1, 3), 3 * ((n1 + 1) / 2));
    EXPECT_EQ(sdim_subdivided_star_complete(3, 3), 12u);
    EXPECT_EQ(sdim_subdivided_star_complete(2, 4), 12u);
    EXPECT_NO_THROW(sdim_path_complete(6, 3, checked()));
    expect_code(ErrorCode::bad_params, [] { sdim_path_complete(3, 3); });
}

TEST(StrongBipartite, SmallValues)
{
    EXPECT_EQ(sdim_bipartite_complete(1, 2, 3), 6u);
    EXPECT_EQ(sdim_bipartite_complete(2, 2, 3), 9u);
    EXPECT_EQ(sdim_bipartite_complete(1, 1, 5), 5u);
    auto host = direct_product(complete_bipartite_graph(2, 2), complete_graph(3));
    EXPECT_TRUE(is_isomorphic(sr_bipartite_complete(2, 2, 3), strong_resolving_graph(host).on_host(12)));
    EXPECT_EQ(strong_metric_dimension(host).value, 9u);
}

TEST(StrongC5, CompleteBipartiteFactor)
{
    EXPECT_EQ(sdim_c5_complete_bipartite(cycle_graph(5), 1, 2), 10u);
    EXPECT_EQ(sdim_c5_complete_bipartite(petersen_graph(), 1, 2), 20u);
    EXPECT_EQ(sdim_c5_complete_bipartite(cycle_graph(5), 2, 2), 15u);
    EXPECT_EQ(strong_metric_dimension(direct_product(cycle_graph(5), complete_bipartite_graph(2, 2))).value, 15u);
    expect_code(ErrorCode::precondition_failed, [] { sdim_c5_complete_bipartite(cycle_graph(6), 1, 2); });
    expect_code(ErrorCode::precondition_failed, [] { sdim_c5_complete_bipartite(cycle_graph(5), 1, 1); });
    expect_code(ErrorCode::precondition_failed, [] { sdim_c5_complete_bipartite(complete_graph(5), 1, 2); });
}

TEST(StrongC5, Pairs)
{
    auto c5 = cycle_graph(5);
    EXPECT_EQ(sdim_c5_pair(c5, c5), strong_metric_dimension(direct_product(c5, c5)).value);
    EXPECT_EQ(sdim_c5_pair(c5, petersen_graph()),
              strong_metric_dimension(direct_product(c5, petersen_graph())).value);
    expect_code(ErrorCode::precondition_failed, [] { sdim_c5_pair(cycle_graph(5), cycle_graph(7)); });
}
