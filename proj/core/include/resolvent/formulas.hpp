#pragma once

#include <cstddef>
#include <string>

#include "resolvent/graph.hpp"
#include "resolvent/search.hpp"

namespace resolvent {

/// Optional cross-check of a closed form against the exact solvers. When
/// enabled and the product has at most `size_cap` vertices, a disagreement
/// throws FormulaMismatch.
struct SelfCheck {
    bool enabled = false;
    std::size_t size_cap = 30;
    SearchLimits limits;
};

/// Parameters of the K_r x K_t closed form, with r <= t after reordering.
/// a is the least value with r - 3a <= floor((t - 3a) / 2) + 1.
struct CompleteDirectParams {
    std::size_t r = 0;
    std::size_t t = 0;
    std::size_t a = 0;
    long r_prime = 0;
    long t_prime = 0;
    std::size_t iterations = 0;  // loop steps taken to find a
};

/// Swaps r and t when r > t. Throws BadParams unless 2 <= r, t >= 3.
CompleteDirectParams complete_direct_params(std::size_t r, std::size_t t);

/// A basis built from the explicit index sets. When that set is not a
/// generator of the expected size, `set` is the exact-search basis instead
/// and `failure` says what went wrong (error code ConstructionFailed).
struct Construction {
    VertexSet set;
    bool explicit_set = true;
    std::string failure;
};

std::size_t dim_complete_complete(std::size_t r, std::size_t t, const SelfCheck& check = {});
/// S1 u S2 u S3, or S1 minus its last element when r = t = 3k.
Construction construct_complete_complete(std::size_t r, std::size_t t, const SearchLimits& limits = {});
VertexSet generator_complete_complete(std::size_t r, std::size_t t);

/// r >= 4, t >= 3.
std::size_t dim_cycle_complete(std::size_t r, std::size_t t, const SelfCheck& check = {});
/// A x (V - {h_1}) with A = {g_i : i = 1 mod 3}, g-indices mod r; for r = 6
/// the special set W, g-indices also mod 6.
Construction construct_cycle_complete(std::size_t r, std::size_t t, const SearchLimits& limits = {});
VertexSet generator_cycle_complete(std::size_t r, std::size_t t);

/// r >= 3, t >= 3.
std::size_t dim_path_complete(std::size_t r, std::size_t t, const SelfCheck& check = {});
/// A x (V - {h_1}) with A = {g_i : i = 2 mod 3} when 3 | r, else i = 1 mod 3.
Construction construct_path_complete(std::size_t r, std::size_t t, const SearchLimits& limits = {});
VertexSet generator_path_complete(std::size_t r, std::size_t t);

/// dim(C_{2k+1} x C_{2k+1}); k >= 1.
std::size_t dim_odd_cycle_pair(std::size_t k, const SelfCheck& check = {});

/// (G box N_n) u (G_SR o N_n) u (W box K_n) on V(G) x [n], vertex (g, i) at
/// g * n + i, W the vertices of G lying on triangles.
/// Throws Not2MMF, BadParams (n < 3, order < 3) or Disconnected.
Graph sr_overlay_complete(const Graph& g, std::size_t n);

/// dim_s(G x K_n) for connected 2MMF G. Triangle-free G uses
/// n * beta(G u G_SR); otherwise beta of the overlay above.
std::size_t sdim_structure_complete(const Graph& g, std::size_t n, const SelfCheck& check = {});

/// n (l - 1 + beta(T_-l)) for good trees, n (l + beta(T_-l)) otherwise.
std::size_t sdim_tree_complete(const Graph& t, std::size_t n, const SelfCheck& check = {});

/// n ceil(n1 / 2) for the path on n1 >= 4 vertices.
std::size_t sdim_path_complete(std::size_t n1, std::size_t n, const SelfCheck& check = {});
/// n (n1 + 1) / 2 for the subdivided star with `legs` >= 2 legs, n1 = 2 legs + 1.
std::size_t sdim_subdivided_star_complete(std::size_t legs, std::size_t n, const SelfCheck& check = {});

/// n (r + t - 1); r, t >= 1, n >= 3.
std::size_t sdim_bipartite_complete(std::size_t r, std::size_t t, std::size_t n, const SelfCheck& check = {});
/// n disjoint copies of K_{r+t}, one per K_n coordinate, indexed like
/// K_{r,t} x K_n.
Graph sr_bipartite_complete(std::size_t r, std::size_t t, std::size_t n);

/// |V(G)| (k + l - 1) for G connected, non-bipartite, triangle-free and
/// C5-connected, max(k, l) >= 2. Throws PreconditionFailed naming the
/// hypothesis that fails.
std::size_t sdim_c5_complete_bipartite(const Graph& g, std::size_t k, std::size_t l, const SelfCheck& check = {});

/// beta(G box H) when both factors also have diameter 2.
std::size_t sdim_c5_pair(const Graph& g, const Graph& h, const SelfCheck& check = {});

}  // namespace resolvent
