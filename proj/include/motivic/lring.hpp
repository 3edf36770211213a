#ifndef MOTIVIC_LRING_HPP
#define MOTIVIC_LRING_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <motivic/error.hpp>

namespace motivic
{

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Exponent = std::int64_t;

// Element of Z[L, L^-1]. Terms are kept sorted by descending exponent and
// zero coefficients are never stored.
class LaurentPolynomial
{
public:
    using Terms = std::map<Exponent, Integer, std::greater<>>;

    LaurentPolynomial() = default;

    LaurentPolynomial(std::initializer_list<std::pair<Exponent, Integer>> terms)
    {
        for (const auto &[e, c] : terms) {
            add_term(e, c);
        }
    }

    static LaurentPolynomial constant(const Integer &c)
    {
        LaurentPolynomial r;
        r.add_term(0, c);
        return r;
    }

    static LaurentPolynomial monomial(Exponent e, const Integer &c = 1)
    {
        LaurentPolynomial r;
        r.add_term(e, c);
        return r;
    }

    // 1 - L^-a
    static LaurentPolynomial one_minus_inverse_power(Exponent a)
    {
        LaurentPolynomial r;
        r.add_term(0, 1);
        r.add_term(-a, -1);
        return r;
    }

    void add_term(Exponent e, const Integer &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    const Terms &terms() const noexcept
    {
        return terms_;
    }

    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    Integer coefficient(Exponent e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    // Requires a nonzero polynomial.
    Exponent max_exponent() const
    {
        return terms_.begin()->first;
    }

    Exponent min_exponent() const
    {
        return terms_.rbegin()->first;
    }

    LaurentPolynomial shifted(Exponent s) const
    {
        LaurentPolynomial r;
        for (const auto &[e, c] : terms_) {
            r.terms_.emplace(e + s, c);
        }
        return r;
    }

    LaurentPolynomial &operator+=(const LaurentPolynomial &o)
    {
        for (const auto &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    LaurentPolynomial &operator-=(const LaurentPolynomial &o)
    {
        for (const auto &[e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b)
    {
        a += b;
        return a;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b)
    {
        a -= b;
        return a;
    }

    friend LaurentPolynomial operator-(const LaurentPolynomial &a)
    {
        LaurentPolynomial r;
        for (const auto &[e, c] : a.terms_) {
            r.terms_.emplace(e, -c);
        }
        return r;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
    {
        LaurentPolynomial r;
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const LaurentPolynomial &, const LaurentPolynomial &) = default;

    // Exact quotient by (1 - L^-a), if the division leaves no remainder.
    std::optional<LaurentPolynomial> divide_by_one_minus_inverse_power(Exponent a) const
    {
        if (is_zero()) {
            return LaurentPolynomial{};
        }
        // n_e = q_e - q_{e+a}, hence q_e = n_e + q_{e+a}, read from the top.
        const Exponent hi = max_exponent();
        const Exponent lo = min_exponent();
        std::map<Exponent, Integer, std::greater<>> q;
        for (Exponent e = hi; e >= lo; --e) {
            Integer v = coefficient(e);
            if (auto it = q.find(e + a); it != q.end()) {
                v += it->second;
            }
            if (v != 0) {
                if (e < lo + a) {
                    return std::nullopt;
                }
                q.emplace(e, std::move(v));
            }
        }
        LaurentPolynomial r;
        r.terms_ = std::move(q);
        return r;
    }

    Rational evaluate(const Rational &x) const
    {
        Rational acc = 0;
        for (const auto &[e, c] : terms_) {
            acc += Rational(c) * rational_power(x, e);
        }
        return acc;
    }

    static Rational rational_power(const Rational &x, Exponent e)
    {
        Rational base = e < 0 ? Rational(1) / x : x;
        auto n = static_cast<std::uint64_t>(e < 0 ? -e : e);
        Rational r = 1;
        while (n != 0) {
            if (n & 1u) {
                r *= base;
            }
            base *= base;
            n >>= 1u;
        }
        return r;
    }

private:
    Terms terms_;
};

// Finite window [low, high] of a Laurent series in descending powers of L.
// The abbreviated series has no terms above `high`, and every term that is
// not listed has exponent below `low`.
class TruncatedSeries
{
public:
    TruncatedSeries(Exponent low, Exponent high) : low_(low), high_(high)
    {
        if (low > high) {
            throw Error(ErrorCode::invalid_argument, "window_low exceeds window_high");
        }
    }

    Exponent window_low() const noexcept
    {
        return low_;
    }

    Exponent window_high() const noexcept
    {
        return high_;
    }

    const LaurentPolynomial &coefficients() const noexcept
    {
        return coeffs_;
    }

    Integer coefficient(Exponent e) const
    {
        return coeffs_.coefficient(e);
    }

    // Terms outside the window are dropped.
    void add_term(Exponent e, const Integer &c)
    {
        if (e < low_) {
            return;
        }
        if (e > high_) {
            throw Error(ErrorCode::invalid_argument, "term above window_high");
        }
        coeffs_.add_term(e, c);
    }

    // Exact coefficient agreement on the intersection of both guaranteed windows.
    bool agrees_with(const TruncatedSeries &o) const
    {
        const Exponent lo = std::max(low_, o.low_);
        for (const auto &[e, c] : coeffs_.terms()) {
            if (e >= lo && o.coefficient(e) != c) {
                return false;
            }
        }
        for (const auto &[e, c] : o.coeffs_.terms()) {
            if (e >= lo && coefficient(e) != c) {
                return false;
            }
        }
        return true;
    }

    Rational evaluate(const Rational &x) const
    {
        return coeffs_.evaluate(x);
    }

private:
    Exponent low_;
    Exponent high_;
    LaurentPolynomial coeffs_;
};

// numerator / prod (1 - L^-a), or the absorbing infinite element.
class MotivicValue
{
public:
    MotivicValue() = default;

    MotivicValue(LaurentPolynomial num, std::vector<Exponent> den = {}) : num_(std::move(num)), den_(std::move(den))
    {
        for (auto a : den_) {
            if (a < 1) {
                throw Error(ErrorCode::invalid_argument, "denominator factors must be >= 1");
            }
        }
        normalize();
    }

    static MotivicValue zero()
    {
        return {};
    }

    static MotivicValue one()
    {
        return MotivicValue(LaurentPolynomial::constant(1));
    }

    static MotivicValue integer(const Integer &c)
    {
        return MotivicValue(LaurentPolynomial::constant(c));
    }

    // c * L^e
    static MotivicValue lefschetz(Exponent e = 1, const Integer &c = 1)
    {
        return MotivicValue(LaurentPolynomial::monomial(e, c));
    }

    static MotivicValue infinity()
    {
        MotivicValue v;
        v.infinite_ = true;
        return v;
    }

    bool is_infinite() const noexcept
    {
        return infinite_;
    }

    bool is_zero() const noexcept
    {
        return !infinite_ && num_.is_zero();
    }

    const LaurentPolynomial &numerator() const noexcept
    {
        return num_;
    }

    const std::vector<Exponent> &denominator_factors() const noexcept
    {
        return den_;
    }

    LaurentPolynomial denominator() const
    {
        return product_of_factors(den_);
    }

    // Cancels denominator factors that divide the numerator exactly. The
    // result is equal to *this; the representation is only more compact.
    MotivicValue simplified() const
    {
        if (infinite_) {
            return *this;
        }
        MotivicValue r = *this;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k < r.den_.size(); ++k) {
                if (auto q = r.num_.divide_by_one_minus_inverse_power(r.den_[k])) {
                    r.num_ = std::move(*q);
                    r.den_.erase(r.den_.begin() + static_cast<std::ptrdiff_t>(k));
                    changed = true;
                    break;
                }
            }
        }
        r.normalize();
        return r;
    }

    static LaurentPolynomial product_of_factors(const std::vector<Exponent> &fs)
    {
        LaurentPolynomial r = LaurentPolynomial::constant(1);
        for (auto a : fs) {
            r = r * LaurentPolynomial::one_minus_inverse_power(a);
        }
        return r;
    }

private:
    void normalize()
    {
        std::sort(den_.begin(), den_.end());
        if (num_.is_zero()) {
            den_.clear();
        }
    }

    LaurentPolynomial num_;
    std::vector<Exponent> den_;
    bool infinite_ = false;
};

namespace detail
{

// Multiset union with maximal multiplicities (sorted inputs).
inline std::vector<Exponent> factor_lcm(const std::vector<Exponent> &a, const std::vector<Exponent> &b)
{
    std::vector<Exponent> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Factors of `whole` left after removing `part` (multiset difference).
inline std::vector<Exponent> factor_complement(const std::vector<Exponent> &whole, const std::vector<Exponent> &part)
{
    std::vector<Exponent> out;
    std::set_difference(whole.begin(), whole.end(), part.begin(), part.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

inline MotivicValue mv_add(const MotivicValue &a, const MotivicValue &b)
{
    if (a.is_infinite() || b.is_infinite()) {
        return MotivicValue::infinity();
    }
    auto den = detail::factor_lcm(a.denominator_factors(), b.denominator_factors());
    auto na = a.numerator() * MotivicValue::product_of_factors(detail::factor_complement(den, a.denominator_factors()));
    auto nb = b.numerator() * MotivicValue::product_of_factors(detail::factor_complement(den, b.denominator_factors()));
    return MotivicValue(na + nb, std::move(den));
}

inline MotivicValue mv_neg(const MotivicValue &a)
{
    if (a.is_infinite()) {
        throw Error(ErrorCode::invalid_argument, "negation of infinity");
    }
    return MotivicValue(-a.numerator(), a.denominator_factors());
}

inline MotivicValue mv_mul(const MotivicValue &a, const MotivicValue &b)
{
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_zero() || b.is_zero()) {
            throw Error(ErrorCode::indeterminate_product, "infinity times zero");
        }
        return MotivicValue::infinity();
    }
    auto den = a.denominator_factors();
    den.insert(den.end(), b.denominator_factors().begin(), b.denominator_factors().end());
    return MotivicValue(a.numerator() * b.numerator(), std::move(den));
}

// Equality as rational functions; infinity is equal only to itself.
inline bool mv_eq(const MotivicValue &a, const MotivicValue &b)
{
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() && b.is_infinite();
    }
    auto den = detail::factor_lcm(a.denominator_factors(), b.denominator_factors());
    auto na = a.numerator() * MotivicValue::product_of_factors(detail::factor_complement(den, a.denominator_factors()));
    auto nb = b.numerator() * MotivicValue::product_of_factors(detail::factor_complement(den, b.denominator_factors()));
    return na == nb;
}

inline MotivicValue operator+(const MotivicValue &a, const MotivicValue &b)
{
    return mv_add(a, b);
}

inline MotivicValue operator-(const MotivicValue &a, const MotivicValue &b)
{
    return mv_add(a, mv_neg(b));
}

inline MotivicValue operator*(const MotivicValue &a, const MotivicValue &b)
{
    return mv_mul(a, b);
}

inline bool operator==(const MotivicValue &a, const MotivicValue &b)
{
    return mv_eq(a, b);
}

// Multiplies by L^e.
inline MotivicValue shift(const MotivicValue &a, Exponent e)
{
    if (a.is_infinite()) {
        return a;
    }
    return MotivicValue(a.numerator().shifted(e), a.denominator_factors());
}

// Expansion in descending powers of L, exact on every exponent >= lo.
inline TruncatedSeries mv_expand(const MotivicValue &a, Exponent lo)
{
    if (a.is_infinite()) {
        throw Error(ErrorCode::divergent, "cannot expand infinity");
    }
    const auto &num = a.numerator();
    const Exponent hi = num.is_zero() ? lo : std::max(lo, num.max_exponent());
    // Geometric factors only lower exponents, so terms below lo never
    // contribute to the window.
    std::vector<Integer> window(static_cast<std::size_t>(hi - lo + 1));
    auto slot = [&](Exponent e) -> Integer & { return window[static_cast<std::size_t>(hi - e)]; };
    for (const auto &[e, c] : num.terms()) {
        if (e >= lo) {
            slot(e) = c;
        }
    }
    for (auto f : a.denominator_factors()) {
        // Multiplying by 1/(1 - L^-f): s_e <- s_e + s_{e+f}, top down.
        for (Exponent e = hi - f; e >= lo; --e) {
            slot(e) += slot(e + f);
        }
    }
    TruncatedSeries out(lo, hi);
    for (Exponent e = hi; e >= lo; --e) {
        out.add_term(e, slot(e));
    }
    return out;
}

inline Rational mv_specialize(const MotivicValue &a, const Rational &q)
{
    if (a.is_infinite()) {
        throw Error(ErrorCode::divergent, "cannot specialize infinity");
    }
    if (q == 0) {
        throw Error(ErrorCode::invalid_argument, "L cannot be specialized to 0");
    }
    Rational den = 1;
    for (auto f : a.denominator_factors()) {
        Rational factor = 1 - LaurentPolynomial::rational_power(q, -f);
        if (factor == 0) {
            throw Error(ErrorCode::pole_at_q, "factor (1 - L^-" + std::to_string(f) + ") vanishes");
        }
        den *= factor;
    }
    return a.numerator().evaluate(q) / den;
}

// Closed form of sum_{m >= 0} term * L^{r m}.
inline MotivicValue geom_sum(const MotivicValue &term, Exponent r)
{
    if (r >= 0) {
        throw Error(ErrorCode::divergent, "geometric ratio L^" + std::to_string(r) + " does not tend to zero");
    }
    if (term.is_infinite()) {
        return term;
    }
    auto den = term.denominator_factors();
    den.push_back(-r);
    return MotivicValue(term.numerator(), std::move(den));
}

// Text rendering ---------------------------------------------------------

inline std::string render_power(Exponent e)
{
    if (e == 1) {
        return "L";
    }
    return "L^" + std::to_string(e);
}

inline std::string render(const LaurentPolynomial &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : p.terms()) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
        } else if (mag == 1) {
            os << render_power(e);
        } else {
            os << mag << '*' << render_power(e);
        }
    }
    return os.str();
}

inline std::string render(const MotivicValue &v)
{
    if (v.is_infinite()) {
        return "infinity";
    }
    const auto &den = v.denominator_factors();
    std::string num = render(v.numerator());
    if (den.empty()) {
        return num;
    }
    if (v.numerator().terms().size() > 1) {
        num = "(" + num + ")";
    }
    std::string d;
    for (std::size_t k = 0; k < den.size(); ++k) {
        if (k != 0) {
            d += "*";
        }
        d += "(1 - L^-" + std::to_string(den[k]) + ")";
    }
    if (den.size() > 1) {
        d = "(" + d + ")";
    }
    return num + "/" + d;
}

inline std::string render(const TruncatedSeries &s)
{
    std::ostringstream os;
    os << render(s.coefficients()) << " + O(L^" << s.window_low() - 1 << ")";
    return os.str();
}

inline std::ostream &operator<<(std::ostream &os, const MotivicValue &v)
{
    return os << render(v);
}

inline std::ostream &operator<<(std::ostream &os, const LaurentPolynomial &p)
{
    return os << render(p);
}

} // namespace motivic

#endif
