#include "resolvent/trees.hpp"

#include <limits>

#include "resolvent/analysis.hpp"
#include "resolvent/strong.hpp"

namespace resolvent {

TreeView tree_view(const Graph& t)
{
    if (!is_tree(t) || t.order() < 3)
        throw Error(ErrorCode::not_a_tree, "expected a tree of order >= 3");
    TreeView view;
    view.tree = t;
    std::vector<Vertex> leaves;
    std::vector<Vertex> inner;
    std::vector<Vertex> supports;
    for (Vertex v = 0; v < t.order(); ++v) {
        if (t.degree(v) == 1) {
            leaves.push_back(v);
            supports.push_back(t.neighbors(v)[0]);
        } else {
            inner.push_back(v);
        }
    }
    view.leaves = VertexSet(std::move(leaves));
    view.supports = VertexSet(std::move(supports));
    auto pruned = induced_subgraph(t, VertexSet(std::move(inner)));
    view.pruned = std::move(pruned.graph);
    view.pruned_origin = std::move(pruned.origin);
    return view;
}

CoverResult tree_vertex_cover(const Graph& t, const VertexSet& forced)
{
    if (!is_tree(t))
        throw Error(ErrorCode::not_a_tree, "tree_vertex_cover on a non-tree");
    forced.check_within(t.order());
    const auto n = t.order();
    constexpr auto blocked = std::numeric_limits<std::size_t>::max() / 4;

    // Preorder from root 0; children are processed before parents in reverse.
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(n, 0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto w : t.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = order[i];
                order.push_back(w);
            }

    std::vector<std::size_t> in(n, 1);
    std::vector<std::size_t> out(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto v = *it;
        if (forced.contains(v))
            out[v] = blocked;
        for (auto c : t.neighbors(v)) {
            if (c == parent[v] && v != 0)
                continue;
            in[v] += std::min(in[c], out[c]);
            out[v] = std::min(blocked, out[v] + in[c]);
        }
    }

    std::vector<bool> take(n, false);
    take[0] = in[0] < out[0];
    for (auto v : order) {
        if (v == 0)
            continue;
        take[v] = !take[parent[v]] || in[v] < out[v];
    }
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < n; ++v)
        if (take[v])
            cover.push_back(v);
    return {std::min(in[0], out[0]), VertexSet(std::move(cover)), true};
}

bool is_good_tree(const Graph& t)
{
    auto view = tree_view(t);
    if (!is_2mmf(t))
        throw Error(ErrorCode::not_2mmf, "good-tree test needs a 2MMF tree");
    const auto base = tree_vertex_cover(view.pruned).value;
    for (Vertex i = 0; i < view.pruned.order(); ++i)
        if (view.supports.contains(view.pruned_origin[i]) && tree_vertex_cover(view.pruned, {i}).value == base)
            return true;
    return false;
}

}  // namespace resolvent
