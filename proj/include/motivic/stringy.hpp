#ifndef MOTIVIC_STRINGY_HPP
#define MOTIVIC_STRINGY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include <motivic/dim_seq.hpp>
#include <motivic/error.hpp>
#include <motivic/lring.hpp>
#include <motivic/moduli.hpp>
#include <motivic/prime.hpp>

namespace motivic
{

enum class Variant { sht, sht_prime };

struct IntegrandVariant {
    Variant tag = Variant::sht;
    Group domain = Group::H;
};

inline const char *variant_name(Variant v) noexcept
{
    return v == Variant::sht ? "sht" : "sht-prime";
}

// sht(j) = sum_lambda sum_{i=1}^{d_lambda - 1} floor(i j / p)
inline std::int64_t sht(const DimSeq &d, std::int64_t j)
{
    const auto p = d.prime().value();
    if (j < 1 || j % p == 0) {
        throw Error(ErrorCode::invalid_j, "sht needs j >= 1 prime to p, got " + std::to_string(j));
    }
    std::int64_t s = 0;
    for (int dl : d.entries()) {
        for (std::int64_t i = 1; i < dl; ++i) {
            s += (i * j) / p;
        }
    }
    return s;
}

// Extended to Delta_G through tau_0: orders >= 0 (including ord(0) = +inf)
// fall in the zero stratum.
inline std::int64_t sht_at_f(const DimSeq &d, Order ord)
{
    if (ord.is_nonnegative()) {
        return 0;
    }
    return sht(d, -ord.value());
}

inline std::int64_t sht_prime_at_f(const DimSeq &d, Order ord)
{
    if (ord.is_nonnegative()) {
        return -d.total();
    }
    return sht(d, -ord.value()) - d.length();
}

struct DInvariant {
    std::int64_t value;
    // Integrals converge, equivalently W/H is canonical, exactly when D_d >= p.
    bool convergent;
};

inline DInvariant dd(const DimSeq &d)
{
    const auto v = d.d_invariant();
    return DInvariant{v, v >= d.prime().value()};
}

namespace detail
{

using ShtFunction = std::function<std::int64_t(const DimSeq &, std::int64_t)>;

// Exponent u with the integrand equal to L^u on the stratum ord(f) = -j.
inline std::int64_t integrand_exponent(const DimSeq &d, Variant v, std::int64_t j, const ShtFunction &sht_fn)
{
    const auto s = sht_fn(d, j);
    return v == Variant::sht ? -s : -(s - d.length());
}

inline std::int64_t zero_stratum_exponent(const DimSeq &d, Variant v)
{
    return v == Variant::sht ? 0 : d.total();
}

// Measure of the stratum {ord(f) = -j} in the requested domain. For G the
// stratum is the level-zero cylinder tau_0^{-1}(stratum of Delta_H); it is
// evaluated at level one to go through the truncation machinery.
inline MotivicValue stratum_measure(Group domain, const StratumH &s)
{
    const auto cls = stratum_class_H(s);
    if (domain == Group::H) {
        return cls;
    }
    return cylinder_measure_G(raise_level(CylinderG{0, cls, s.prime()}));
}

inline MotivicValue stringy_integral_with(const DimSeq &d, IntegrandVariant v, const ShtFunction &sht_fn)
{
    const auto p = d.prime().value();
    const auto D = d.d_invariant();
    if (D < p) {
        return MotivicValue::infinity();
    }
    // sht(j + p) = sht(j) + D and the stratum dimension grows by p - 1, so
    // each residue class e mod p is a geometric series.
    const std::int64_t ratio = p - 1 - D;
    MotivicValue total =
        shift(stratum_measure(v.domain, StratumH::zero(d.prime())), zero_stratum_exponent(d, v.tag));
    for (std::int64_t e = 1; e < p; ++e) {
        auto first = shift(stratum_measure(v.domain, StratumH::order(e, d.prime())),
                           integrand_exponent(d, v.tag, e, sht_fn));
        total = total + geom_sum(first, ratio);
    }
    return total.simplified();
}

} // namespace detail

// Closed form of the integral of L^{-sht} (or L^{-sht'}) over Delta_H or
// Delta_G; infinity when the series diverges.
inline MotivicValue stringy_integral(const DimSeq &d, IntegrandVariant v)
{
    return detail::stringy_integral_with(d, v, [](const DimSeq &dd_, std::int64_t j) { return sht(dd_, j); });
}

// Direct summation over the zero stratum and strata j <= J. The window low
// end is one above the largest exponent any stratum j > J can contribute.
inline TruncatedSeries stringy_integral_truncated(const DimSeq &d, IntegrandVariant v, std::int64_t J)
{
    if (J < 1) {
        throw Error(ErrorCode::invalid_argument, "truncation J must be >= 1");
    }
    const auto p = d.prime().value();
    if (d.d_invariant() < p) {
        throw Error(ErrorCode::divergent, "no tail bound exists when D_d < p");
    }
    auto sht_fn = [](const DimSeq &dd_, std::int64_t j) { return sht(dd_, j); };
    // Top exponent of the stratum-j term (L - 1) L^{dim - 1} L^u.
    auto top = [&](std::int64_t j) { return dim_delta_H_geq(d.prime(), j) + detail::integrand_exponent(d, v.tag, j, sht_fn); };

    // Beyond J, each residue class strictly decreases by at least one per
    // period, so the first period past J dominates the tail.
    std::int64_t tail_top = std::numeric_limits<std::int64_t>::min();
    for (std::int64_t j = J + 1; j <= J + p; ++j) {
        if (j % p != 0) {
            tail_top = std::max(tail_top, top(j));
        }
    }
    const std::int64_t low = tail_top + 1;

    LaurentPolynomial partial =
        shift(detail::stratum_measure(v.domain, StratumH::zero(d.prime())), detail::zero_stratum_exponent(d, v.tag))
            .numerator();
    for (std::int64_t j = 1; j <= J; ++j) {
        if (j % p == 0) {
            continue;
        }
        auto term = shift(detail::stratum_measure(v.domain, StratumH::order(j, d.prime())),
                          detail::integrand_exponent(d, v.tag, j, sht_fn));
        partial += term.numerator();
    }
    const std::int64_t high = partial.is_zero() ? low : std::max(low, partial.max_exponent());
    TruncatedSeries out(low, high);
    for (const auto &[e, c] : partial.terms()) {
        out.add_term(e, c);
    }
    return out;
}

} // namespace motivic

#endif
