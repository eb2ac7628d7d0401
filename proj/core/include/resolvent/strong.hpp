#pragma once

#include <vector>

#include "resolvent/graph.hpp"
#include "resolvent/resolving.hpp"
#include "resolvent/search.hpp"
#include "resolvent/vertex_cover.hpp"

namespace resolvent {

/// u is maximally distant from v: no neighbour of u is farther from v.
/// Not symmetric. Throws Disconnected.
bool is_maximally_distant(const Graph& g, Vertex u, Vertex v);

/// Unordered mutually maximally distant pairs (u < v), lexicographic.
std::vector<Edge> mmd_pairs(const Graph& g);

/// Endpoints of mmd_pairs.
VertexSet boundary(const Graph& g);

/// Vertices maximally distant from at least one other vertex. Equal to
/// boundary() on connected graphs; kept separate so that can be checked.
VertexSet maximally_distant_vertices(const Graph& g);

/// Strong resolving graph restricted to boundary vertices.
struct SRGraph {
    Graph graph;
    std::vector<Vertex> origin;  // SR vertex i is host vertex origin[i]

    /// Same edges on the full host vertex set; non-boundary vertices isolated.
    [[nodiscard]] Graph on_host(std::size_t host_order) const;
};

SRGraph strong_resolving_graph(const Graph& g);

/// d(w,u) = d(w,v) + d(v,u) or d(w,v) = d(w,u) + d(u,v).
bool strongly_resolves(const Graph& g, Vertex w, Vertex u, Vertex v);

bool is_strong_generator(const Graph& g, const VertexSet& s);

/// Vertex cover number of the strong resolving graph; witness is the cover
/// mapped back to host vertices.
DimensionResult strong_metric_dimension(const Graph& g, const CoverOptions& options = {});

/// Independent oracle: minimum hitting set over vertex pairs under the
/// strongly_resolves predicate, sharing the engine behind metric_dimension.
DimensionResult strong_metric_dimension_bruteforce(const Graph& g, const SearchLimits& limits = {});

/// No mutually maximally distant pair at distance exactly 2.
bool is_2mmf(const Graph& g);

}  // namespace resolvent
