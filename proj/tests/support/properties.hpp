#pragma once

// Property checks shared by the property test binary and the acceptance
// runner. Each returns an empty string on success, otherwise a description
// of the first violation.

#include <cstdint>
#include <string>
#include <vector>

#include "resolvent/graph.hpp"

namespace props {

using resolvent::Graph;

/// Connected graphs, orders 2..max_order, mixed densities, reproducible.
std::vector<Graph> connected_corpus(std::size_t count, std::size_t max_order, std::uint64_t seed);
/// Plain G(n,p) samples, possibly disconnected.
std::vector<Graph> gnp_corpus(std::size_t count, std::size_t max_order, std::uint64_t seed);

/// min(even, odd) = BFS distance; finite entries have the right parity;
/// bipartite graphs have odd = infinity exactly on the source's colour class.
std::string parity_consistency(const Graph& g);
/// Walk-parity entries agree with the exhaustive walk oracle.
std::string parity_matches_oracle(const Graph& g);
/// direct_distance agrees with BFS in the explicit direct product.
std::string direct_distance_consistency(const Graph& g, const Graph& h);
/// Reported cover touches every edge, no vertex of it can be dropped, and
/// its size equals the exhaustive optimum.
std::string cover_valid_minimal(const Graph& g);
/// Twins at distance two are mutually maximally distant.
std::string twins_are_mmd(const Graph& g);
/// boundary() equals the maximally-distant-from-some-vertex set and the
/// endpoint set of mmd_pairs().
std::string boundary_equality(const Graph& g);

}  // namespace props
