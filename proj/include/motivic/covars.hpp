#ifndef MOTIVIC_COVARS_HPP
#define MOTIVIC_COVARS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <motivic/dim_seq.hpp>
#include <motivic/error.hpp>
#include <motivic/lring.hpp>
#include <motivic/prime.hpp>
#include <motivic/stringy.hpp>

// Change of variables for the alpha_p-action with one Jordan block of size 2:
// strata of the twisted-jet space, their measures, and the summed integral.

namespace motivic
{

// ord(f) >= 0 (nonneg) or ord(f) = -(p*d + e) with 1 <= e <= p - 1, together
// with ord(a) = s_f + i.
class TwistedJetStratum
{
public:
    static TwistedJetStratum nonneg(Prime p, std::int64_t i)
    {
        check_offset(i);
        return TwistedJetStratum(p, true, 0, 0, i);
    }

    static TwistedJetStratum negative(Prime p, std::int64_t d, std::int64_t e, std::int64_t i)
    {
        check_offset(i);
        if (d < 0) {
            throw Error(ErrorCode::invalid_argument, "d must be >= 0");
        }
        if (e < 1 || e >= p.value()) {
            throw Error(ErrorCode::invalid_argument, "e must lie in 1..p-1");
        }
        return TwistedJetStratum(p, false, d, e, i);
    }

    Prime prime() const noexcept
    {
        return p_;
    }

    bool is_nonneg() const noexcept
    {
        return nonneg_;
    }

    std::int64_t d() const noexcept
    {
        return d_;
    }

    std::int64_t e() const noexcept
    {
        return e_;
    }

    std::int64_t i() const noexcept
    {
        return i_;
    }

    // Negative strata report ord(f); nonneg strata have no single order.
    std::optional<std::int64_t> ord_f() const noexcept
    {
        if (nonneg_) {
            return std::nullopt;
        }
        return -(p_.value() * d_ + e_);
    }

    TwistedJetStratum with_offsets(std::int64_t d, std::int64_t i) const
    {
        return nonneg_ ? nonneg(p_, i) : negative(p_, d, e_, i);
    }

    std::string to_string() const
    {
        if (nonneg_) {
            return "nonneg:i=" + std::to_string(i_);
        }
        return "neg:d=" + std::to_string(d_) + ",e=" + std::to_string(e_) + ",i=" + std::to_string(i_);
    }

private:
    TwistedJetStratum(Prime p, bool nonneg, std::int64_t d, std::int64_t e, std::int64_t i)
        : p_(p), nonneg_(nonneg), d_(d), e_(e), i_(i)
    {
    }

    static void check_offset(std::int64_t i)
    {
        if (i < 0) {
            throw Error(ErrorCode::invalid_argument, "i must be >= 0");
        }
    }

    Prime p_;
    bool nonneg_;
    std::int64_t d_;
    std::int64_t e_;
    std::int64_t i_;
};

// "nonneg:i=K" or "neg:d=A,e=B,i=K".
inline TwistedJetStratum parse_stratum(const std::string &text, Prime p)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw Error(ErrorCode::parse_error, "stratum text needs 'nonneg:' or 'neg:' prefix: '" + text + "'");
    }
    const auto kind = text.substr(0, colon);
    std::map<std::string, std::int64_t> fields;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::parse_error, "expected key=value in '" + item + "'");
        }
        const auto key = item.substr(0, eq);
        const auto val = item.substr(eq + 1);
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(val, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != val.size()) {
            throw Error(ErrorCode::parse_error, "bad integer '" + val + "'");
        }
        if (!fields.emplace(key, v).second) {
            throw Error(ErrorCode::parse_error, "duplicate key '" + key + "'");
        }
    }
    auto take = [&](const char *key) {
        auto it = fields.find(key);
        if (it == fields.end()) {
            throw Error(ErrorCode::parse_error, std::string("missing key '") + key + "'");
        }
        const auto v = it->second;
        fields.erase(it);
        return v;
    };
    std::optional<TwistedJetStratum> s;
    if (kind == "nonneg") {
        s = TwistedJetStratum::nonneg(p, take("i"));
    } else if (kind == "neg") {
        const auto d = take("d");
        const auto e = take("e");
        s = TwistedJetStratum::negative(p, d, e, take("i"));
    } else {
        throw Error(ErrorCode::parse_error, "unknown stratum kind '" + kind + "'");
    }
    if (!fields.empty()) {
        throw Error(ErrorCode::parse_error, "unexpected key '" + fields.begin()->first + "'");
    }
    return *s;
}

struct JetLevel {
    std::int64_t m = 0;
    std::int64_t n = 0;
};

inline std::int64_t s_f(Prime p, Order ord_f)
{
    if (!ord_f.is_infinite()) {
        const auto o = ord_f.value();
        if (o < 0 && o % p.value() == 0) {
            throw Error(ErrorCode::invalid_order, "ord(f) = " + std::to_string(o) + " is divisible by p");
        }
        if (o < 0) {
            return ceil_div(-o, p.value());
        }
    }
    return 0;
}

inline std::int64_t s_f(const TwistedJetStratum &s)
{
    return s.is_nonneg() ? 0 : s.d() + 1;
}

struct SfReport {
    std::optional<std::int64_t> first_violation;

    bool passed() const noexcept
    {
        return !first_violation;
    }
};

// s_f = sht'(f) + 2 for the size-2 block: the order j = 1..jmax coprime to p,
// plus f with nonnegative order (reported as violation 0 if it failed).
inline SfReport s_equals_shtprime_plus_two(Prime p, std::int64_t jmax)
{
    if (jmax < 1) {
        throw Error(ErrorCode::invalid_argument, "jmax must be >= 1");
    }
    const DimSeq d({2}, p);
    SfReport r;
    if (s_f(p, Order::finite(0)) != sht_prime_at_f(d, Order::finite(0)) + 2 ||
        s_f(p, Order::infinity()) != sht_prime_at_f(d, Order::infinity()) + 2) {
        r.first_violation = 0;
        return r;
    }
    for (std::int64_t j = 1; j <= jmax; ++j) {
        if (j % p.value() == 0) {
            continue;
        }
        const auto o = Order::finite(-j);
        if (s_f(p, o) != sht_prime_at_f(d, o) + 2) {
            r.first_violation = j;
            return r;
        }
    }
    return r;
}

inline std::int64_t fiber_dim(Prime p, std::int64_t sf, std::int64_t n, std::int64_t ord_a) noexcept
{
    return sf + (p.value() - 1) * n + (p.value() - 1) * ord_a;
}

inline std::int64_t jet_transition_dim(Prime p, JetLevel from, JetLevel to)
{
    if (to.m < from.m || to.n < from.n) {
        throw Error(ErrorCode::level_order, "target level (" + std::to_string(to.m) + "," + std::to_string(to.n) +
                                                ") lies below (" + std::to_string(from.m) + "," +
                                                std::to_string(from.n) + ")");
    }
    return 2 * (to.m - from.m) + (p.value() - 1) * (to.n - from.n);
}

namespace detail
{

inline MotivicValue l_minus_one_power(int k)
{
    MotivicValue r = MotivicValue::one();
    const auto f = MotivicValue::lefschetz(1) - MotivicValue::one();
    for (int t = 0; t < k; ++t) {
        r = r * f;
    }
    return r;
}

inline int l_minus_one_multiplicity(const TwistedJetStratum &s) noexcept
{
    return s.is_nonneg() ? 1 : 2;
}

// Exponent of L in the class of the image at level (i, 0), after the (L-1)
// factors.
inline std::int64_t base_class_shift(const TwistedJetStratum &s) noexcept
{
    const auto p = s.prime().value();
    return s.is_nonneg() ? s.i() + 1 : s.d() * (p - 1) + s.e() - 1 + s.i() + 1;
}

inline JetLevel base_level(const TwistedJetStratum &s) noexcept
{
    return JetLevel{s.i(), 0};
}

inline std::int64_t normalization(Prime p, JetLevel l) noexcept
{
    return -2 * l.m - (p.value() - 1) * l.n;
}

// Power of L in the measure after the (L-1) factors.
inline std::int64_t measure_shift(const TwistedJetStratum &s) noexcept
{
    return base_class_shift(s) + normalization(s.prime(), base_level(s));
}

// -s - (p-1) ord(x), with ord(x) = ord(a) = s_f + i.
inline std::int64_t jacobian_exponent(const TwistedJetStratum &s) noexcept
{
    const auto sf = s_f(s);
    return -sf - (s.prime().value() - 1) * (sf + s.i());
}

} // namespace detail

// Class of the image of the stratum at jet level `l`; the level must lie above
// (i, 0), where the stratum first becomes a cylinder.
inline MotivicValue cylinder_class_at_level(const TwistedJetStratum &s, JetLevel l)
{
    const auto up = jet_transition_dim(s.prime(), detail::base_level(s), l);
    return shift(detail::l_minus_one_power(detail::l_minus_one_multiplicity(s)), detail::base_class_shift(s) + up);
}

// Measure computed from the class at level `l` and its normalization.
inline MotivicValue cyl_measure_at_level(const TwistedJetStratum &s, JetLevel l)
{
    return shift(cylinder_class_at_level(s, l), detail::normalization(s.prime(), l));
}

inline MotivicValue cyl_measure(const TwistedJetStratum &s)
{
    return shift(detail::l_minus_one_power(detail::l_minus_one_multiplicity(s)), detail::measure_shift(s));
}

// alpha * i + beta * d + gamma.
struct AffineWeight {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t gamma = 0;

    std::int64_t at(std::int64_t d, std::int64_t i) const noexcept
    {
        return alpha * i + beta * d + gamma;
    }
};

// One affine functional for the nonneg strata and one per residue e = 1..p-1.
struct StratumWeight {
    AffineWeight nonneg;
    std::vector<AffineWeight> negative;

    static StratumWeight uniform(Prime p, AffineWeight w)
    {
        return StratumWeight{w, std::vector<AffineWeight>(static_cast<std::size_t>(p.value() - 1), w)};
    }

    static StratumWeight zero(Prime p)
    {
        return uniform(p, AffineWeight{});
    }

    std::int64_t at(const TwistedJetStratum &s) const
    {
        if (s.is_nonneg()) {
            return nonneg.at(0, s.i());
        }
        return negative.at(static_cast<std::size_t>(s.e() - 1)).at(s.d(), s.i());
    }
};

enum class CovPart { nonneg, neg, all };

inline const char *cov_part_name(CovPart c) noexcept
{
    switch (c) {
    case CovPart::nonneg:
        return "nonneg";
    case CovPart::neg:
        return "neg";
    case CovPart::all:
        break;
    }
    return "all";
}

// Exponent of L in measure(s) * L^(w(s) - s_f - (p-1) ord(x)), after the (L-1) factors.
inline std::int64_t weighted_term_shift(const TwistedJetStratum &s, const StratumWeight &w)
{
    return detail::measure_shift(s) + w.at(s) + detail::jacobian_exponent(s);
}

inline MotivicValue weighted_term(const TwistedJetStratum &s, const StratumWeight &w)
{
    return shift(cyl_measure(s), w.at(s) + detail::jacobian_exponent(s));
}

namespace detail
{

// Sum over one residue class: the term at (d, i) = (0, 0) times geometric
// series in i and, for negative strata, in d. Each series ratio is read off
// from the shift between neighbouring strata.
inline MotivicValue sum_class(const TwistedJetStratum &base, const StratumWeight &w)
{
    const auto t0 = weighted_term_shift(base, w);
    MotivicValue v = geom_sum(weighted_term(base, w), weighted_term_shift(base.with_offsets(0, 1), w) - t0);
    if (!base.is_nonneg()) {
        v = geom_sum(v, weighted_term_shift(base.with_offsets(1, 0), w) - t0);
    }
    return v;
}

} // namespace detail

inline MotivicValue cov_weighted_integral(Prime p, const StratumWeight &w, CovPart part = CovPart::all)
{
    if (w.negative.size() != static_cast<std::size_t>(p.value() - 1)) {
        throw Error(ErrorCode::dimension_mismatch, "need one weight per residue e = 1..p-1");
    }
    if (w.nonneg.beta != 0) {
        throw Error(ErrorCode::invalid_argument, "nonneg strata carry no d index");
    }
    MotivicValue total = MotivicValue::zero();
    if (part != CovPart::neg) {
        total = total + detail::sum_class(TwistedJetStratum::nonneg(p, 0), w);
    }
    if (part != CovPart::nonneg) {
        for (std::int64_t e = 1; e < p.value(); ++e) {
            total = total + detail::sum_class(TwistedJetStratum::negative(p, 0, e, 0), w);
        }
    }
    return total.simplified();
}

inline MotivicValue cov_integral(Prime p, CovPart part = CovPart::all)
{
    return cov_weighted_integral(p, StratumWeight::zero(p), part);
}

// Direct sum of weighted terms over strata with i <= imax and d <= dmax, as a
// series; every omitted stratum contributes only below the returned window
// (requires convergent weights).
inline TruncatedSeries cov_weighted_truncated(Prime p, const StratumWeight &w, std::int64_t dmax, std::int64_t imax,
                                              CovPart part = CovPart::all)
{
    std::vector<TwistedJetStratum> strata;
    if (part != CovPart::neg) {
        for (std::int64_t i = 0; i <= imax; ++i) {
            strata.push_back(TwistedJetStratum::nonneg(p, i));
        }
    }
    if (part != CovPart::nonneg) {
        for (std::int64_t e = 1; e < p.value(); ++e) {
            for (std::int64_t d = 0; d <= dmax; ++d) {
                for (std::int64_t i = 0; i <= imax; ++i) {
                    strata.push_back(TwistedJetStratum::negative(p, d, e, i));
                }
            }
        }
    }
    // Top degree of a term is its shift plus the number of (L-1) factors.
    auto top = [&](const TwistedJetStratum &s) {
        return weighted_term_shift(s, w) + detail::l_minus_one_multiplicity(s);
    };
    std::int64_t high = std::numeric_limits<std::int64_t>::min();
    for (const auto &s : strata) {
        high = std::max(high, top(s));
    }
    // First omitted stratum along each axis bounds the tail, given the
    // terms decrease along both axes.
    std::int64_t tail = std::numeric_limits<std::int64_t>::min();
    auto consider = [&](const TwistedJetStratum &s) { tail = std::max(tail, top(s)); };
    if (part != CovPart::neg) {
        consider(TwistedJetStratum::nonneg(p, imax + 1));
    }
    if (part != CovPart::nonneg) {
        for (std::int64_t e = 1; e < p.value(); ++e) {
            for (std::int64_t d = 0; d <= dmax + 1; ++d) {
                consider(TwistedJetStratum::negative(p, d, e, imax + 1));
            }
            for (std::int64_t i = 0; i <= imax + 1; ++i) {
                consider(TwistedJetStratum::negative(p, dmax + 1, e, i));
            }
        }
    }
    for (const auto &s : strata) {
        const auto r_i = weighted_term_shift(s.with_offsets(s.d(), s.i() + 1), w) - weighted_term_shift(s, w);
        const auto r_d = s.is_nonneg() ? -1
                                       : weighted_term_shift(s.with_offsets(s.d() + 1, s.i()), w) -
                                             weighted_term_shift(s, w);
        if (r_i >= 0 || r_d >= 0) {
            throw Error(ErrorCode::divergent, "weights do not decrease along stratum " + s.to_string());
        }
    }
    TruncatedSeries out(tail + 1, high);
    for (const auto &s : strata) {
        const auto term = weighted_term(s, w);
        for (const auto &[e, c] : term.numerator().terms()) {
            out.add_term(e, c);
        }
    }
    return out;
}

} // namespace motivic

#endif
