#include "resolvent/search.hpp"

#include <string>

namespace resolvent {

BudgetExceeded::BudgetExceeded(std::size_t lower_bound, std::size_t upper_bound, VertexSet best)
    : Error(ErrorCode::budget_exceeded,
            "search stopped with bounds [" + std::to_string(lower_bound) + ", " + std::to_string(upper_bound) + "]"),
      lower_(lower_bound),
      upper_(upper_bound),
      best_(std::move(best))
{
}

SearchMeter::SearchMeter(const SearchLimits& limits) : budget_(limits.node_budget)
{
    if (limits.time_budget)
        deadline_ = std::chrono::steady_clock::now() + *limits.time_budget;
}

bool SearchMeter::tick() noexcept
{
    ++nodes_;
    if (budget_ && nodes_ > *budget_)
        return false;
    if (deadline_ && (nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > *deadline_)
        return false;
    return true;
}

}  // namespace resolvent
