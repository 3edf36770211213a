#ifndef MOTIVIC_ERROR_HPP
#define MOTIVIC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace motivic
{

enum class ErrorCode {
    invalid_argument,
    parse_error,
    indeterminate_product,
    pole_at_q,
    divergent,
    invalid_j,
    invalid_order,
    block_too_large,
    not_p_nilpotent,
    dimension_mismatch,
    budget_exceeded,
    wrong_characteristic,
    level_order,
};

inline constexpr std::string_view error_name(ErrorCode c) noexcept
{
    switch (c) {
        case ErrorCode::invalid_argument:
            return "InvalidArgument";
        case ErrorCode::parse_error:
            return "ParseError";
        case ErrorCode::indeterminate_product:
            return "IndeterminateProduct";
        case ErrorCode::pole_at_q:
            return "PoleAtQ";
        case ErrorCode::divergent:
            return "Divergent";
        case ErrorCode::invalid_j:
            return "InvalidJ";
        case ErrorCode::invalid_order:
            return "InvalidOrder";
        case ErrorCode::block_too_large:
            return "BlockTooLarge";
        case ErrorCode::not_p_nilpotent:
            return "NotPNilpotent";
        case ErrorCode::dimension_mismatch:
            return "DimensionMismatch";
        case ErrorCode::budget_exceeded:
            return "BudgetExceeded";
        case ErrorCode::wrong_characteristic:
            return "WrongCharacteristic";
        case ErrorCode::level_order:
            return "LevelOrder";
    }
    return "Unknown";
}

// Every precondition failure in the library surfaces as this type; the
// code identifies which contract was broken.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept
    {
        return code_;
    }

private:
    ErrorCode code_;
};

} // namespace motivic

#endif
