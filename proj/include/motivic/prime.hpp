#ifndef MOTIVIC_PRIME_HPP
#define MOTIVIC_PRIME_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include <motivic/error.hpp>

namespace motivic
{

inline bool is_prime(std::int64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// The characteristic. Bounded so that products of two residues fit in 64 bits.
class Prime
{
public:
    static constexpr std::int64_t max_value = (std::int64_t{1} << 31) - 1;

    explicit Prime(std::int64_t p) : value_(p)
    {
        if (p > max_value || !is_prime(p)) {
            throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not a supported prime");
        }
    }

    std::int64_t value() const noexcept
    {
        return value_;
    }

    friend bool operator==(const Prime &, const Prime &) = default;

private:
    std::int64_t value_;
};

// Floor division for possibly negative numerators and positive divisors.
inline constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

inline constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept
{
    return -floor_div(-a, b);
}

// Valuation of a Laurent series, with +infinity standing for ord(0).
class Order
{
public:
    static Order infinity() noexcept
    {
        return Order();
    }

    static Order finite(std::int64_t v) noexcept
    {
        Order o;
        o.infinite_ = false;
        o.value_ = v;
        return o;
    }

    bool is_infinite() const noexcept
    {
        return infinite_;
    }

    // Only meaningful when finite.
    std::int64_t value() const
    {
        if (infinite_) {
            throw Error(ErrorCode::invalid_order, "ord(0) has no finite value");
        }
        return value_;
    }

    bool is_nonnegative() const noexcept
    {
        return infinite_ || value_ >= 0;
    }

    std::string to_string() const
    {
        return infinite_ ? std::string("+inf") : std::to_string(value_);
    }

    friend bool operator==(const Order &, const Order &) = default;

private:
    Order() = default;

    bool infinite_ = true;
    std::int64_t value_ = 0;
};

} // namespace motivic

#endif
