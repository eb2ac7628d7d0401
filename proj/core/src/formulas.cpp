#include "resolvent/formulas.hpp"

#include <string>
#include <vector>

#include "resolvent/analysis.hpp"
#include "resolvent/families.hpp"
#include "resolvent/products.hpp"
#include "resolvent/resolving.hpp"
#include "resolvent/strong.hpp"
#include "resolvent/trees.hpp"
#include "resolvent/vertex_cover.hpp"

namespace resolvent {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorCode::bad_params, what);
}

std::string name(const char* a, std::size_t r, const char* b, std::size_t t)
{
    return std::string(a) + std::to_string(r) + " x " + b + std::to_string(t);
}

std::size_t ceil_div3(std::size_t r)
{
    return (r + 2) / 3;
}

// Proof sets are written with 1-based (i, j) for (g_i, h_j); this is the only
// place they become flat indices.
struct Indexer {
    std::size_t t;
    std::vector<Vertex> out;
    void add(long i, long j) { out.push_back(static_cast<Vertex>((i - 1) * static_cast<long>(t) + (j - 1))); }
};

std::size_t checked(std::size_t formula, const SelfCheck& check, std::size_t order, auto&& oracle)
{
    if (!check.enabled || order > check.size_cap)
        return formula;
    std::size_t actual = oracle();
    if (actual != formula)
        throw Error(ErrorCode::formula_mismatch,
                    "formula gives " + std::to_string(formula) + ", oracle gives " + std::to_string(actual));
    return formula;
}

std::size_t sdim_oracle(const Graph& product, const SelfCheck& check)
{
    return strong_metric_dimension(product, {check.limits, false}).value;
}

Construction finish(const Graph& product, std::vector<Vertex> members, std::size_t expected,
                    const std::string& what, const SearchLimits& limits)
{
    Construction out;
    out.set = VertexSet(std::move(members));
    if (out.set.size() == expected && is_metric_generator(product, out.set))
        return out;
    out.explicit_set = false;
    out.failure = std::string(to_string(ErrorCode::construction_failed)) + ": explicit set for " + what + " has " +
                  std::to_string(out.set.size()) + " vertices and " +
                  (is_metric_generator(product, out.set) ? "resolves" : "does not resolve") + "; using search basis";
    auto searched = metric_dimension(product, limits);
    if (searched.value != expected)
        throw Error(ErrorCode::formula_mismatch, what + ": search finds dimension " + std::to_string(searched.value));
    out.set = std::move(searched.witness);
    return out;
}

void require_2mmf_order(const Graph& g, std::size_t n)
{
    if (n < 3)
        bad("n must be at least 3");
    if (g.order() < 3)
        bad("G must have at least 3 vertices");
    if (!is_connected(g))
        throw Error(ErrorCode::disconnected, "G must be connected");
    if (!is_2mmf(g))
        throw Error(ErrorCode::not_2mmf, "G must be 2MMF");
}

void require(bool ok, const std::string& hypothesis)
{
    if (!ok)
        throw Error(ErrorCode::precondition_failed, hypothesis);
}

void require_c5_family(const Graph& g, const std::string& name)
{
    auto info = analyze(g);
    require(info.connected, name + " is not connected");
    require(!info.bipartite, name + " is bipartite");
    require(info.triangle_vertices.empty(), name + " is not triangle-free");
    require(is_c5_connected(g), name + " is not C5-connected");
}

}  // namespace

CompleteDirectParams complete_direct_params(std::size_t r, std::size_t t)
{
    if (r > t)
        std::swap(r, t);
    if (r < 2 || t < 3)
        bad("K_r x K_t needs 2 <= r <= t and t >= 3");
    CompleteDirectParams p;
    p.r = r;
    p.t = t;
    auto rp = [&] { return static_cast<long>(r) - 3 * static_cast<long>(p.a); };
    auto tp = [&] { return static_cast<long>(t) - 3 * static_cast<long>(p.a); };
    while (rp() > tp() / 2 + 1) {
        ++p.a;
        ++p.iterations;
    }
    p.r_prime = rp();
    p.t_prime = tp();
    return p;
}

std::size_t dim_complete_complete(std::size_t r, std::size_t t, const SelfCheck& check)
{
    auto p = complete_direct_params(r, t);
    bool even_tie = p.r_prime == p.t_prime / 2 + 1 && p.t_prime % 2 == 0;
    std::size_t value = p.t + p.a - (even_tie ? 0 : 1);
    return checked(value, check, r * t, [&] {
        return metric_dimension(direct_product(complete_graph(r), complete_graph(t)), check.limits).value;
    });
}

Construction construct_complete_complete(std::size_t r, std::size_t t, const SearchLimits& limits)
{
    auto p = complete_direct_params(r, t);
    const long a = static_cast<long>(p.a);
    const long rp = p.r_prime;
    Indexer s{p.t, {}};
    for (long al = 1; al <= a; ++al) {
        s.add(al, 2 * al - 1);
        s.add(al, 2 * al);
        s.add(a + 2 * al - 1, 2 * a + al);
        s.add(a + 2 * al, 2 * a + al);
    }
    if (p.r == p.t && rp == 0) {
        std::erase(s.out, static_cast<Vertex>((3 * a - 1) * static_cast<long>(p.t) + (3 * a - 1)));
    } else {
        for (long b = 1; b <= rp - 1; ++b) {
            s.add(3 * a + b, 3 * a + 2 * b - 1);
            s.add(3 * a + b, 3 * a + 2 * b);
        }
        for (long c = 3 * a + 2 * rp - 1; c <= static_cast<long>(p.t) - 1; ++c)
            s.add(static_cast<long>(p.r) - 1, c);
    }
    // The basis lives in K_r x K_t as called; transpose if we reordered.
    if (p.r != r) {
        for (auto& v : s.out) {
            auto x = product_label(v, p.t);
            v = product_index({x.h, x.g}, p.r);
        }
    }
    auto product = direct_product(complete_graph(r), complete_graph(t));
    return finish(product, std::move(s.out), dim_complete_complete(r, t), name("K", r, "K", t), limits);
}

std::size_t dim_cycle_complete(std::size_t r, std::size_t t, const SelfCheck& check)
{
    if (r < 4 || t < 3)
        bad("C_r x K_t needs r >= 4 and t >= 3");
    return checked(ceil_div3(r) * (t - 1), check, r * t, [&] {
        return metric_dimension(direct_product(cycle_graph(r), complete_graph(t)), check.limits).value;
    });
}

Construction construct_cycle_complete(std::size_t r, std::size_t t, const SearchLimits& limits)
{
    const auto value = dim_cycle_complete(r, t);
    // Cycle vertices are g_0..g_{r-1}, so i is used directly mod r.
    std::vector<Vertex> members;
    auto add = [&](long i, long j) {
        auto g = static_cast<Vertex>(((i % static_cast<long>(r)) + static_cast<long>(r)) % static_cast<long>(r));
        members.push_back(static_cast<Vertex>(g * t + static_cast<Vertex>(j - 1)));
    };
    const long tl = static_cast<long>(t);
    if (r == 6) {
        for (long i = 1; i <= tl - 2; ++i) {
            add(i, i);
            add(i + 3, i);
        }
        add(tl - 1, tl - 1);
        add(tl + 2, tl);
    } else {
        for (std::size_t k = 0; k < ceil_div3(r); ++k)
            for (long j = 2; j <= tl; ++j)
                add(static_cast<long>(3 * k + 1), j);
    }
    auto product = direct_product(cycle_graph(r), complete_graph(t));
    return finish(product, std::move(members), value, name("C", r, "K", t), limits);
}

std::size_t dim_path_complete(std::size_t r, std::size_t t, const SelfCheck& check)
{
    if (r < 3 || t < 3)
        bad("P_r x K_t needs r >= 3 and t >= 3");
    return checked(ceil_div3(r) * (t - 1), check, r * t, [&] {
        return metric_dimension(direct_product(path_graph(r), complete_graph(t)), check.limits).value;
    });
}

Construction construct_path_complete(std::size_t r, std::size_t t, const SearchLimits& limits)
{
    const auto value = dim_path_complete(r, t);
    const std::size_t residue = r % 3 == 0 ? 2 : 1;
    Indexer s{t, {}};
    for (std::size_t i = 1; i <= r; ++i)
        if (i % 3 == residue)
            for (std::size_t j = 2; j <= t; ++j)
                s.add(static_cast<long>(i), static_cast<long>(j));
    auto product = direct_product(path_graph(r), complete_graph(t));
    return finish(product, std::move(s.out), value, name("P", r, "K", t), limits);
}

VertexSet generator_complete_complete(std::size_t r, std::size_t t)
{
    return construct_complete_complete(r, t).set;
}

VertexSet generator_cycle_complete(std::size_t r, std::size_t t)
{
    return construct_cycle_complete(r, t).set;
}

VertexSet generator_path_complete(std::size_t r, std::size_t t)
{
    return construct_path_complete(r, t).set;
}

std::size_t dim_odd_cycle_pair(std::size_t k, const SelfCheck& check)
{
    if (k < 1)
        bad("k must be at least 1");
    const auto c = 2 * k + 1;
    return checked(3, check, c * c, [&] {
        auto cyc = cycle_graph(c);
        return metric_dimension(direct_product(cyc, cyc), check.limits).value;
    });
}

Graph sr_overlay_complete(const Graph& g, std::size_t n)
{
    require_2mmf_order(g, n);
    const auto sr = strong_resolving_graph(g).on_host(g.order());
    const auto w = analyze(g).triangle_vertices;
    std::vector<Edge> edges;
    auto at = [n](Vertex x, std::size_t i) { return static_cast<Vertex>(x * n + i); };
    for (auto [u, v] : g.edges())
        for (std::size_t i = 0; i < n; ++i)
            edges.emplace_back(at(u, i), at(v, i));
    for (auto [u, v] : sr.edges())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                edges.emplace_back(at(u, i), at(v, j));
    for (auto x : w)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                edges.emplace_back(at(x, i), at(x, j));
    return build_graph(g.order() * n, edges);
}

std::size_t sdim_structure_complete(const Graph& g, std::size_t n, const SelfCheck& check)
{
    require_2mmf_order(g, n);
    std::size_t value = 0;
    if (is_triangle_free(g)) {
        auto joined = overlay_union(g.without_labels(), strong_resolving_graph(g).on_host(g.order()));
        value = n * vertex_cover_number(joined, {check.limits, false}).value;
    } else {
        value = vertex_cover_number(sr_overlay_complete(g, n), {check.limits, false}).value;
    }
    return checked(value, check, g.order() * n,
                   [&] { return sdim_oracle(direct_product(g, complete_graph(n)), check); });
}

std::size_t sdim_tree_complete(const Graph& t, std::size_t n, const SelfCheck& check)
{
    auto view = tree_view(t);
    if (n < 3)
        bad("n must be at least 3");
    const bool good = is_good_tree(t);  // throws Not2MMF
    const auto leaves = view.leaves.size();
    const auto beta = tree_vertex_cover(view.pruned).value;
    const auto value = n * (leaves + beta - (good ? 1 : 0));
    return checked(value, check, t.order() * n,
                   [&] { return sdim_oracle(direct_product(t, complete_graph(n)), check); });
}

std::size_t sdim_path_complete(std::size_t n1, std::size_t n, const SelfCheck& check)
{
    if (n1 < 4 || n < 3)
        bad("P_n1 x K_n needs n1 >= 4 and n >= 3");
    return checked(n * ((n1 + 1) / 2), check, n1 * n,
                   [&] { return sdim_oracle(direct_product(path_graph(n1), complete_graph(n)), check); });
}

std::size_t sdim_subdivided_star_complete(std::size_t legs, std::size_t n, const SelfCheck& check)
{
    if (legs < 2 || n < 3)
        bad("subdivided star x K_n needs at least two legs and n >= 3");
    const auto n1 = 2 * legs + 1;
    return checked(n * (n1 + 1) / 2, check, n1 * n,
                   [&] { return sdim_oracle(direct_product(subdivided_star(legs), complete_graph(n)), check); });
}

std::size_t sdim_bipartite_complete(std::size_t r, std::size_t t, std::size_t n, const SelfCheck& check)
{
    if (r < 1 || t < 1 || n < 3)
        bad("K_{r,t} x K_n needs r, t >= 1 and n >= 3");
    return checked(n * (r + t - 1), check, (r + t) * n, [&] {
        return sdim_oracle(direct_product(complete_bipartite_graph(r, t), complete_graph(n)), check);
    });
}

Graph sr_bipartite_complete(std::size_t r, std::size_t t, std::size_t n)
{
    if (r < 1 || t < 1 || n < 3)
        bad("K_{r,t} x K_n needs r, t >= 1 and n >= 3");
    const auto m = r + t;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = x + 1; y < m; ++y)
                edges.emplace_back(static_cast<Vertex>(x * n + i), static_cast<Vertex>(y * n + i));
    return build_graph(m * n, edges);
}

std::size_t sdim_c5_complete_bipartite(const Graph& g, std::size_t k, std::size_t l, const SelfCheck& check)
{
    require_c5_family(g, "G");
    require(k >= 1 && l >= 1, "K_{k,l} needs k, l >= 1");
    require(std::max(k, l) >= 2, "max(k, l) must be at least 2");
    return checked(g.order() * (k + l - 1), check, g.order() * (k + l),
                   [&] { return sdim_oracle(direct_product(g, complete_bipartite_graph(k, l)), check); });
}

std::size_t sdim_c5_pair(const Graph& g, const Graph& h, const SelfCheck& check)
{
    require_c5_family(g, "G");
    require_c5_family(h, "H");
    require(analyze(g).diameter == Distance(2), "G does not have diameter 2");
    require(analyze(h).diameter == Distance(2), "H does not have diameter 2");
    const auto value = vertex_cover_number(cartesian_product(g, h), {check.limits, false}).value;
    return checked(value, check, g.order() * h.order(),
                   [&] { return sdim_oracle(direct_product(g, h), check); });
}

}  // namespace resolvent
