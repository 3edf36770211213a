#ifndef MOTIVIC_FP_HPP
#define MOTIVIC_FP_HPP

#include <cstdint>
#include <vector>

#include <motivic/error.hpp>
#include <motivic/prime.hpp>

namespace motivic::fp
{

using Residue = std::uint64_t;

inline Residue reduce(std::int64_t a, Prime p) noexcept
{
    const auto m = p.value();
    auto r = a % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
}

inline Residue add(Residue a, Residue b, Prime p) noexcept
{
    const auto m = static_cast<Residue>(p.value());
    Residue s = a + b;
    return s >= m ? s - m : s;
}

inline Residue sub(Residue a, Residue b, Prime p) noexcept
{
    const auto m = static_cast<Residue>(p.value());
    return a >= b ? a - b : a + m - b;
}

inline Residue mul(Residue a, Residue b, Prime p) noexcept
{
    return (a * b) % static_cast<Residue>(p.value());
}

inline Residue neg(Residue a, Prime p) noexcept
{
    return a == 0 ? 0 : static_cast<Residue>(p.value()) - a;
}

inline Residue pow(Residue a, std::uint64_t e, Prime p) noexcept
{
    Residue r = 1 % static_cast<Residue>(p.value());
    while (e != 0) {
        if (e & 1u) {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1u;
    }
    return r;
}

inline Residue inv(Residue a, Prime p)
{
    if (a == 0) {
        throw Error(ErrorCode::invalid_argument, "zero has no inverse mod p");
    }
    return pow(a, static_cast<std::uint64_t>(p.value() - 2), p);
}

// 1/i! for 0 <= i < p.
inline std::vector<Residue> inverse_factorials(Prime p)
{
    const auto n = static_cast<std::size_t>(p.value());
    std::vector<Residue> out(n);
    Residue f = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            f = mul(f, static_cast<Residue>(i), p);
        }
        out[i] = inv(f, p);
    }
    return out;
}

// Binomial coefficient mod p via Lucas' theorem.
inline Residue binomial(std::uint64_t n, std::uint64_t k, Prime p) noexcept
{
    const auto m = static_cast<std::uint64_t>(p.value());
    Residue r = 1;
    while (n != 0 || k != 0) {
        const auto ni = n % m;
        const auto ki = k % m;
        if (ki > ni) {
            return 0;
        }
        Residue num = 1;
        Residue den = 1;
        for (std::uint64_t t = 0; t < ki; ++t) {
            num = mul(num, static_cast<Residue>(ni - t), p);
            den = mul(den, static_cast<Residue>(t + 1), p);
        }
        r = mul(r, mul(num, inv(den, p), p), p);
        n /= m;
        k /= m;
    }
    return r;
}

} // namespace motivic::fp

#endif
