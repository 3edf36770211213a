#ifndef MOTIVIC_GALOIS_FIELD_HPP
#define MOTIVIC_GALOIS_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <motivic/error.hpp>
#include <motivic/fp.hpp>
#include <motivic/prime.hpp>

namespace motivic
{

struct PrimePower {
    Prime prime;
    unsigned exponent;
};

inline std::optional<PrimePower> prime_power_decomposition(std::int64_t q)
{
    if (q < 2) {
        return std::nullopt;
    }
    std::int64_t p = 2;
    while (p * p <= q && q % p != 0) {
        ++p;
    }
    if (q % p != 0) {
        p = q;
    }
    unsigned k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) {
        return std::nullopt;
    }
    return PrimePower{Prime(p), k};
}

// F_q with q = p^k. Elements are integers in [0, q) whose base-p digits are
// the coefficients of a polynomial in the generator; multiplication goes
// through log/exp tables of a primitive element.
class GaloisField
{
public:
    using Element = std::uint32_t;

    static constexpr std::int64_t max_order = std::int64_t{1} << 24;

    explicit GaloisField(std::int64_t q) : q_(q), p_(checked(q).prime), k_(checked(q).exponent)
    {
        build();
    }

    std::int64_t order() const noexcept
    {
        return q_;
    }

    Prime characteristic() const noexcept
    {
        return p_;
    }

    unsigned degree() const noexcept
    {
        return k_;
    }

    // Image of a prime-field residue.
    Element from_prime_field(fp::Residue c) const noexcept
    {
        return static_cast<Element>(c % static_cast<fp::Residue>(p_.value()));
    }

    Element add(Element a, Element b) const noexcept
    {
        const auto p = static_cast<Element>(p_.value());
        Element r = 0;
        Element scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            const Element da = a % p;
            const Element db = b % p;
            r += ((da + db) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return r;
    }

    Element mul(Element a, Element b) const noexcept
    {
        if (a == 0 || b == 0) {
            return 0;
        }
        const auto s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        return exp_[s % static_cast<std::uint64_t>(q_ - 1)];
    }

    Element pow(Element a, std::uint64_t e) const noexcept
    {
        if (e == 0) {
            return 1;
        }
        if (a == 0) {
            return 0;
        }
        const auto s = (static_cast<std::uint64_t>(log_[a]) * (e % static_cast<std::uint64_t>(q_ - 1))) %
                       static_cast<std::uint64_t>(q_ - 1);
        return exp_[s];
    }

    // Unique solution of x^(p^m) = a.
    Element frobenius_root(Element a, unsigned m) const noexcept
    {
        // Frobenius has order k on F_q, so the inverse of x -> x^(p^m) is
        // x -> x^(p^(k*t - m)) for any t with k*t >= m.
        unsigned r = (k_ - (m % k_)) % k_;
        Element x = a;
        for (unsigned i = 0; i < r; ++i) {
            x = pow(x, static_cast<std::uint64_t>(p_.value()));
        }
        return x;
    }

    Element neg(Element a) const noexcept
    {
        const auto p = static_cast<Element>(p_.value());
        Element r = 0;
        Element scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += ((p - a % p) % p) * scale;
            a /= p;
            scale *= p;
        }
        return r;
    }

private:
    static PrimePower checked(std::int64_t q)
    {
        auto pp = prime_power_decomposition(q);
        if (!pp) {
            throw Error(ErrorCode::invalid_argument, std::to_string(q) + " is not a prime power");
        }
        if (q > max_order) {
            throw Error(ErrorCode::budget_exceeded, "field order " + std::to_string(q) + " too large");
        }
        return *pp;
    }

    // Multiply an element by the generator modulo the defining polynomial
    // (given by its lower coefficients, monic of degree k).
    Element times_generator(Element a, const std::vector<Element> &modulus) const
    {
        const auto p = static_cast<Element>(p_.value());
        std::vector<Element> digits(k_ + 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            digits[i + 1] = a % p;
            a /= p;
        }
        const Element top = digits[k_];
        for (unsigned i = 0; i < k_; ++i) {
            digits[i] = static_cast<Element>((digits[i] + (p - (static_cast<std::uint64_t>(top) * modulus[i]) % p)) % p);
        }
        Element r = 0;
        for (unsigned i = k_; i-- > 0;) {
            r = r * p + digits[i];
        }
        return r;
    }

    void build()
    {
        const auto p = static_cast<Element>(p_.value());
        if (k_ == 1) {
            // Prime field: find a primitive root directly.
            for (Element g = 1; g < p; ++g) {
                if (try_generator(g, {})) {
                    return;
                }
            }
        }
        // Search monic degree-k polynomials for one whose root x is primitive.
        std::vector<Element> modulus(k_, 0);
        const auto count = static_cast<std::uint64_t>(q_);
        for (std::uint64_t code = 0; code < count; ++code) {
            auto c = code;
            for (unsigned i = 0; i < k_; ++i) {
                modulus[i] = static_cast<Element>(c % p);
                c /= p;
            }
            if (modulus[0] == 0) {
                continue;
            }
            if (try_generator(0, modulus)) {
                return;
            }
        }
        throw Error(ErrorCode::invalid_argument, "no primitive polynomial found");
    }

    // For k = 1, g is the candidate; otherwise the candidate is the class of
    // x modulo `modulus`.
    bool try_generator(Element g, const std::vector<Element> &modulus)
    {
        const auto n = static_cast<std::size_t>(q_);
        exp_.assign(n - 1, 0);
        log_.assign(n, 0);
        std::vector<bool> seen(n, false);
        Element cur = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (seen[cur]) {
                return false;
            }
            seen[cur] = true;
            exp_[i] = cur;
            log_[cur] = static_cast<Element>(i);
            if (k_ == 1) {
                cur = static_cast<Element>((static_cast<std::uint64_t>(cur) * g) % static_cast<std::uint64_t>(q_));
            } else {
                cur = times_generator(cur, modulus);
            }
        }
        return cur == 1;
    }

    std::int64_t q_;
    Prime p_;
    unsigned k_;
    std::vector<Element> exp_;
    std::vector<Element> log_;
};

} // namespace motivic

#endif
