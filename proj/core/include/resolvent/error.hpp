#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resolvent {

enum class ErrorCode {
    index_out_of_range,
    self_loop,
    size_mismatch,
    too_large,
    bad_params,
    disconnected,
    budget_exceeded,
    not_a_tree,
    not_2mmf,
    precondition_failed,
    construction_failed,
    formula_mismatch,
    parse_error,
    unknown_suite,
    bad_ranges,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by parse_graph; carries the 1-based line of the offending input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace resolvent
