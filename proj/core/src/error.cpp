#include "resolvent/error.hpp"

namespace resolvent {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::not_a_tree: return "NotATree";
    case ErrorCode::not_2mmf: return "Not2MMF";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::construction_failed: return "ConstructionFailed";
    case ErrorCode::formula_mismatch: return "FormulaMismatch";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unknown_suite: return "UnknownSuite";
    case ErrorCode::bad_ranges: return "BadRanges";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + message), line_(line)
{
}

}  // namespace resolvent
