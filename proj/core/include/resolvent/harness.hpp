#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resolvent/vertex_set.hpp"

namespace resolvent {

/// Parameter grid such as "r=2..6;t=2..6" or "G=P4,C6;n=3,4". Keys appear in
/// input order; "a..b" expands to the integers a..b. In comma lists a bare
/// integer following a "K<r>" token is rejoined with it, so "G=K2,3" names
/// K_{2,3}.
struct Ranges {
    std::vector<std::pair<std::string, std::vector<std::string>>> entries;

    [[nodiscard]] bool has(std::string_view key) const;
    [[nodiscard]] const std::vector<std::string>* find(std::string_view key) const;
    /// Integer values of `key`, or `fallback` when absent. Throws BadRanges.
    [[nodiscard]] std::vector<long> integers(std::string_view key, std::vector<long> fallback) const;
    [[nodiscard]] std::vector<std::string> strings(std::string_view key, std::vector<std::string> fallback) const;
    [[nodiscard]] std::string to_string() const;
};

/// Throws BadRanges.
Ranges parse_ranges(std::string_view text);

struct Caps {
    /// Largest graph (vertices) handed to an exact oracle; bigger cases skip.
    std::size_t size_cap = 64;
    std::optional<std::uint64_t> node_budget;
    std::optional<std::chrono::milliseconds> time_budget;
    /// When false every elapsed_ms is written as 0 so reports compare
    /// byte for byte.
    bool record_timing = true;
};

enum class Verdict { pass, fail, skipped };
std::string_view to_string(Verdict v) noexcept;

using Params = std::vector<std::pair<std::string, std::string>>;

struct CaseRow {
    std::string suite;
    Params params;
    std::optional<std::size_t> formula_value;
    std::optional<std::size_t> oracle_value;
    Verdict verdict = Verdict::skipped;
    std::optional<VertexSet> witness;
    double elapsed_ms = 0;
    std::string reason;  // always set on skipped rows; optional note otherwise
    std::string repro_cmd;
};

struct Summary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
};

struct VerificationReport {
    std::string suite;
    std::string ranges;  // echo of the effective grid
    std::uint64_t seed = 0;
    Caps caps;
    std::vector<CaseRow> rows;
    Summary summary;
};

/// Suite identifiers accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Sweeps a parameter grid comparing a closed form with an exact oracle.
/// Rows come back in parameter order whatever the worker count
/// (RESOLVENT_THREADS, default hardware concurrency). Throws UnknownSuite or
/// BadRanges.
VerificationReport run_suite(std::string_view name, const Ranges& ranges, const Caps& caps, std::uint64_t seed);

std::string render_json(const VerificationReport& report);
std::string render_csv(const VerificationReport& report);
std::string render_text(const VerificationReport& report);

/// RESOLVENT_THREADS when set to a positive integer, otherwise the hardware
/// thread count (at least 1).
std::size_t worker_count();

}  // namespace resolvent
