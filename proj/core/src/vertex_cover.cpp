#include "resolvent/vertex_cover.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace resolvent {

namespace {

struct Exhausted {};

class CoverSolver {
public:
    CoverSolver(const Graph& g, const SearchLimits& limits) : n_(g.order()), meter_(limits)
    {
        adj_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v)
            adj_.push_back(g.neighbor_bits(v));
    }

    /// Minimum cover of G[mask] when one of size < limit exists.
    std::optional<Bitset> best(Bitset mask, std::size_t limit)
    {
        if (!meter_.tick())
            throw Exhausted{};
        if (limit == 0)
            return std::nullopt;
        Bitset cover(n_);
        std::size_t taken = reduce(mask, cover);
        if (taken >= limit)
            return std::nullopt;
        if (mask.none())
            return cover;

        auto parts = components(mask);
        if (parts.size() > 1) {
            std::vector<std::size_t> bounds;
            std::size_t pending = 0;
            for (const auto& part : parts)
                pending += bounds.emplace_back(lower_bound(part));
            if (taken + pending >= limit)
                return std::nullopt;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                pending -= bounds[i];
                auto sub = best(parts[i], limit - taken - pending);
                if (!sub)
                    return std::nullopt;
                taken += sub->count();
                cover |= *sub;
            }
            return cover;
        }

        const std::size_t room = limit - taken;
        if (lower_bound(mask) >= room)
            return std::nullopt;

        Vertex pivot = 0;
        std::size_t top = 0;
        mask.for_each([&](std::size_t v) {
            auto d = adj_[v].count_and(mask);
            if (d > top) {
                top = d;
                pivot = static_cast<Vertex>(v);
            }
        });
        if (top <= 2) {
            auto ring = cycle_cover(mask, pivot);
            if (ring.count() >= room)
                return std::nullopt;
            return cover |= ring;
        }

        std::optional<Bitset> chosen;
        std::size_t bound = room;
        Bitset without = mask;
        without.reset(pivot);
        if (auto a = best(without, room - 1)) {
            a->set(pivot);
            bound = a->count();
            chosen = std::move(a);
        }
        Bitset nbrs = adj_[pivot] & mask;
        auto k = nbrs.count();
        if (k < bound) {
            without.subtract(nbrs);
            if (auto b = best(without, bound - k)) {
                *b |= nbrs;
                chosen = std::move(b);
            }
        }
        if (!chosen)
            return std::nullopt;
        return cover |= *chosen;
    }

    std::size_t lower_bound(const Bitset& mask) const
    {
        // Greedy matching.
        Bitset free = mask;
        std::size_t matching = 0;
        mask.for_each([&](std::size_t v) {
            if (!free.test(v))
                return;
            auto partner = (adj_[v] & free).find_first();
            if (partner != Bitset::npos) {
                free.reset(v);
                free.reset(partner);
                ++matching;
            }
        });
        // Greedy clique partition: a clique of size s needs s - 1 cover vertices.
        std::vector<Bitset> cliques;
        mask.for_each([&](std::size_t v) {
            for (auto& c : cliques)
                if (c.is_subset_of(adj_[v])) {
                    c.set(v);
                    return;
                }
            cliques.emplace_back(n_).set(v);
        });
        return std::max(matching, mask.count() - cliques.size());
    }

    Bitset greedy(Bitset mask) const
    {
        Bitset cover(n_);
        while (true) {
            std::size_t top = 0;
            std::size_t pick = 0;
            mask.for_each([&](std::size_t v) {
                auto d = adj_[v].count_and(mask);
                if (d > top) {
                    top = d;
                    pick = v;
                }
            });
            if (top == 0)
                return cover;
            cover.set(pick);
            mask.reset(pick);
        }
    }

private:
    // Isolated and pendant rules until fixpoint; returns vertices added.
    std::size_t reduce(Bitset& mask, Bitset& cover) const
    {
        std::size_t taken = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto v = mask.find_first(); v != Bitset::npos; v = mask.find_next(v)) {
                auto d = adj_[v].count_and(mask);
                if (d == 0) {
                    mask.reset(v);
                    changed = true;
                } else if (d == 1) {
                    auto u = (adj_[v] & mask).find_first();
                    cover.set(u);
                    mask.reset(u);
                    mask.reset(v);
                    ++taken;
                    changed = true;
                }
            }
        }
        return taken;
    }

    std::vector<Bitset> components(Bitset mask) const
    {
        std::vector<Bitset> out;
        while (mask.any()) {
            Bitset part(n_);
            Bitset frontier(n_);
            frontier.set(mask.find_first());
            while (frontier.any()) {
                part |= frontier;
                Bitset next(n_);
                frontier.for_each([&](std::size_t v) { next |= adj_[v]; });
                next &= mask;
                next.subtract(part);
                frontier = std::move(next);
            }
            mask.subtract(part);
            out.push_back(std::move(part));
        }
        return out;
    }

    // Connected, every degree exactly 2 after reduction: a cycle.
    Bitset cycle_cover(const Bitset& mask, Vertex start) const
    {
        Bitset out(n_);
        std::size_t prev = Bitset::npos;
        std::size_t cur = start;
        std::size_t step = 0;
        do {
            if (step % 2 == 0)
                out.set(cur);
            auto nb = adj_[cur] & mask;
            auto next = nb.find_first();
            if (next == prev)
                next = nb.find_next(next);
            prev = cur;
            cur = next;
            ++step;
        } while (cur != start);
        return out;
    }

    std::size_t n_;
    std::vector<Bitset> adj_;
    SearchMeter meter_;
};

}  // namespace

CoverKernel kernelize_cover(const Graph& g)
{
    auto mask = Bitset::full(g.order());
    std::vector<Vertex> forced;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto v = mask.find_first(); v != Bitset::npos; v = mask.find_next(v)) {
            auto d = g.neighbor_bits(v).count_and(mask);
            if (d == 0) {
                mask.reset(v);
                changed = true;
            } else if (d == 1) {
                auto u = static_cast<Vertex>((g.neighbor_bits(v) & mask).find_first());
                forced.push_back(u);
                mask.reset(u);
                mask.reset(v);
                changed = true;
            }
        }
    }
    auto kept = induced_subgraph(g, VertexSet::from_bits(mask));
    return {std::move(kept.graph), std::move(kept.origin), VertexSet(std::move(forced))};
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover)
{
    cover.check_within(g.order());
    for (auto [u, v] : g.edges())
        if (!cover.contains(u) && !cover.contains(v))
            return false;
    return true;
}

CoverResult vertex_cover_number(const Graph& g, const CoverOptions& options)
{
    const auto n = g.order();
    CoverSolver solver(g, options.limits);
    const auto all = Bitset::full(n);
    const auto fallback = solver.greedy(all);
    const auto root_bound = solver.lower_bound(all);

    std::optional<Bitset> found;
    try {
        found = solver.best(all, fallback.count() + 1);
    } catch (const Exhausted&) {
        throw BudgetExceeded(root_bound, fallback.count(), VertexSet::from_bits(fallback));
    }
    const auto value = found->count();
    if (!options.lexicographic)
        return {value, VertexSet::from_bits(*found), true};

    // Decide vertices in increasing order: include v whenever some minimum
    // cover agrees with every decision so far; otherwise v is excluded and
    // its neighbours become mandatory.
    Bitset in(n);
    Bitset out(n);
    Bitset undecided = all;
    try {
        for (Vertex v = 0; v < n; ++v) {
            if (!undecided.test(v))
                continue;
            in.set(v);
            undecided.reset(v);
            if (in.count() <= value && solver.best(undecided, value - in.count() + 1))
                continue;
            in.reset(v);
            out.set(v);
            Bitset forced = g.neighbor_bits(v) & undecided;
            in |= forced;
            undecided.subtract(forced);
        }
    } catch (const Exhausted&) {
        throw BudgetExceeded(value, value, VertexSet::from_bits(*found));
    }
    return {value, VertexSet::from_bits(in), true};
}

}  // namespace resolvent
