#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "resolvent/error.hpp"
#include "resolvent/vertex_set.hpp"

namespace resolvent {

/// Work caps for the exact solvers. Unset means unlimited.
struct SearchLimits {
    std::optional<std::uint64_t> node_budget;
    std::optional<std::chrono::milliseconds> time_budget;
};

/// A search ran out of nodes or time. Carries the bounds proven so far and
/// the best feasible witness found; never a silent approximation.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t lower_bound, std::size_t upper_bound, VertexSet best);

    [[nodiscard]] std::size_t lower_bound() const noexcept { return lower_; }
    [[nodiscard]] std::size_t upper_bound() const noexcept { return upper_; }
    [[nodiscard]] const VertexSet& best_witness() const noexcept { return best_; }

private:
    std::size_t lower_;
    std::size_t upper_;
    VertexSet best_;
};

/// Node and deadline accounting shared by the solvers.
class SearchMeter {
public:
    explicit SearchMeter(const SearchLimits& limits);

    /// Returns false once a cap is hit.
    bool tick() noexcept;
    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::optional<std::uint64_t> budget_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t nodes_ = 0;
};

}  // namespace resolvent
