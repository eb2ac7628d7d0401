#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resolvent/graph.hpp"

namespace resolvent {

enum class Family {
    complete,
    path,
    cycle,
    complete_bipartite,
    edgeless,
    star,
    subdivided_star,
    petersen,
    mobius_ladder,
    random_tree,
    random_connected,
};

struct FamilySpec {
    Family family = Family::complete;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
};

/// Accepts "K5", "P7", "C6", "K2,3", "N4", "star:5", "subdivstar:4",
/// "petersen", "mobius:8", "tree:10:seed=7", "gnp:9:35:seed=4". Throws
/// BadParams.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Throws BadParams when parameters are outside the family's range.
Graph make_family(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t r, std::size_t t);
Graph edgeless_graph(std::size_t n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(std::size_t leaves);
/// Star with `legs` edges each subdivided once: centre 0, inner i, outer legs+i.
Graph subdivided_star(std::size_t legs);
Graph petersen_graph();
/// Cycle on n (even) vertices plus the n/2 long diagonals.
Graph mobius_ladder(std::size_t n);
/// Labelled tree decoded from a Pruefer sequence drawn from std::mt19937_64.
/// Each symbol is the first draw below the largest multiple of `order`,
/// reduced mod `order` (rejection sampling), so sequences are identical on
/// every standard library for the same seed.
Graph random_tree(std::size_t order, std::uint64_t seed);

/// Random spanning tree (as random_tree) plus each remaining pair with
/// probability percent / 100, from a second stream seeded by the same seed.
Graph random_connected_graph(std::size_t order, unsigned percent, std::uint64_t seed);

/// First random_tree spec drawn from `seed` whose tree is 2MMF, with order
/// uniform in [min_order, max_order].
FamilySpec random_2mmf_tree_spec(std::size_t min_order, std::size_t max_order, std::uint64_t seed);

/// Tree on sequence.size() + 2 vertices.
Graph decode_pruefer(std::span<const Vertex> sequence);

}  // namespace resolvent
