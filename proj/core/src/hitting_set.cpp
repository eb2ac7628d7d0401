#include "resolvent/hitting_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace resolvent {

namespace {

struct Exhausted {};

class Solver {
public:
    Solver(std::size_t universe, std::vector<Bitset> sets, const SearchLimits& limits)
        : universe_(universe), sets_(std::move(sets)), meter_(limits)
    {
        covers_.assign(universe_, Bitset(sets_.size()));
        for (std::size_t s = 0; s < sets_.size(); ++s)
            sets_[s].for_each([&](std::size_t e) { covers_[e].set(s); });
        unhit_.assign(universe_ + 2, Bitset(sets_.size()));
        avail_.assign(universe_ + 2, Bitset(universe_));
        used_ = Bitset(universe_);
    }

    [[nodiscard]] std::size_t set_count() const noexcept { return sets_.size(); }
    [[nodiscard]] std::uint64_t nodes() const noexcept { return meter_.nodes(); }

    /// Can `forced` be extended by at most `budget` elements from
    /// `available` to a hitting set? On success solution() holds it.
    bool feasible(const VertexSet& forced, const Bitset& available, std::size_t budget)
    {
        unhit_[0] = Bitset::full(sets_.size());
        for (auto e : forced)
            unhit_[0].subtract(covers_[e]);
        avail_[0] = available;
        chosen_.assign(forced.begin(), forced.end());
        return decide(0, budget);
    }

    [[nodiscard]] VertexSet solution() const { return VertexSet(chosen_); }

    std::size_t packing_bound(const Bitset& unhit, const Bitset& available)
    {
        used_.clear();
        std::size_t packed = 0;
        unhit.for_each([&](std::size_t s) {
            if (!sets_[s].intersects(used_)) {
                ++packed;
                used_ |= sets_[s];
                used_ &= available;
            }
        });
        return packed;
    }

    VertexSet greedy() const
    {
        Bitset unhit = Bitset::full(sets_.size());
        std::vector<Vertex> picked;
        while (unhit.any()) {
            std::size_t best = 0;
            std::size_t best_gain = 0;
            for (std::size_t e = 0; e < universe_; ++e) {
                auto gain = covers_[e].count_and(unhit);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = e;
                }
            }
            picked.push_back(static_cast<Vertex>(best));
            unhit.subtract(covers_[best]);
        }
        return VertexSet(std::move(picked));
    }

private:
    bool decide(std::size_t depth, std::size_t budget)
    {
        if (!meter_.tick())
            throw Exhausted{};
        const Bitset& unhit = unhit_[depth];
        Bitset& avail = avail_[depth];
        if (unhit.none())
            return true;
        if (budget == 0)
            return false;

        // Branch on the unhit set with fewest available elements; sets are
        // stored by increasing size, which also orders the packing greedily.
        std::size_t branch = Bitset::npos;
        std::size_t fewest = universe_ + 1;
        std::size_t packed = 0;
        bool dead = false;
        used_.clear();
        unhit.for_each([&](std::size_t s) {
            if (dead)
                return;
            auto count = sets_[s].count_and(avail);
            if (count == 0) {
                dead = true;
                return;
            }
            if (count < fewest) {
                fewest = count;
                branch = s;
            }
            if (!sets_[s].intersects(used_)) {
                ++packed;
                used_ |= sets_[s];
                used_ &= avail;
            }
        });
        if (dead || packed > budget)
            return false;

        std::vector<std::size_t> options;
        (sets_[branch] & avail).for_each([&](std::size_t e) { options.push_back(e); });
        for (auto e : options) {
            avail.reset(e);
            unhit_[depth + 1] = unhit;
            unhit_[depth + 1].subtract(covers_[e]);
            avail_[depth + 1] = avail;
            chosen_.push_back(static_cast<Vertex>(e));
            if (decide(depth + 1, budget - 1))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    std::size_t universe_;
    std::vector<Bitset> sets_;
    std::vector<Bitset> covers_;
    std::vector<Bitset> unhit_;
    std::vector<Bitset> avail_;
    Bitset used_;
    std::vector<Vertex> chosen_;
    SearchMeter meter_;
};

// Sorted by size; any set containing an earlier kept set is implied by it.
std::vector<Bitset> drop_supersets(const HittingSetProblem& problem)
{
    std::vector<std::size_t> idx(problem.sets.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return problem.sets[a].count() < problem.sets[b].count();
    });
    std::vector<Bitset> kept;
    for (auto i : idx) {
        const auto& s = problem.sets[i];
        bool implied = std::any_of(kept.begin(), kept.end(), [&](const Bitset& k) { return k.is_subset_of(s); });
        if (!implied)
            kept.push_back(s);
    }
    return kept;
}

}  // namespace

HittingSetResult minimum_hitting_set(const HittingSetProblem& problem, std::size_t lower_bound,
                                     const SearchLimits& limits)
{
    for (const auto& s : problem.sets) {
        if (s.size() != problem.universe)
            throw Error(ErrorCode::size_mismatch, "hitting-set member sized " + std::to_string(s.size()) +
                                                      " in universe " + std::to_string(problem.universe));
        if (s.none())
            throw Error(ErrorCode::bad_params, "hitting-set instance contains an empty set");
    }
    Solver solver(problem.universe, drop_supersets(problem), limits);
    const auto all = Bitset::full(problem.universe);
    if (solver.set_count() == 0)
        return {VertexSet{}, 0};

    auto greedy = solver.greedy();
    std::size_t best = greedy.size();
    std::size_t k = std::max(lower_bound, solver.packing_bound(Bitset::full(solver.set_count()), all));
    try {
        for (; k < best; ++k)
            if (solver.feasible({}, all, k)) {
                best = k;
                break;
            }
    } catch (const Exhausted&) {
        throw BudgetExceeded(k, best, greedy);
    }

    std::vector<Vertex> forced;
    Bitset available = all;
    VertexSet last = greedy;
    try {
        for (Vertex e = 0; e < problem.universe && forced.size() < best; ++e) {
            available.reset(e);
            forced.push_back(e);
            if (solver.feasible(VertexSet(forced), available, best - forced.size())) {
                last = solver.solution();
                if (last.size() == forced.size())
                    break;
            } else {
                forced.pop_back();
            }
        }
    } catch (const Exhausted&) {
        throw BudgetExceeded(best, best, last);
    }
    return {VertexSet(std::move(forced)), solver.nodes()};
}

}  // namespace resolvent
