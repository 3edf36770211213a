#ifndef MOTIVIC_QUOTIENTS_HPP
#define MOTIVIC_QUOTIENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <motivic/dim_seq.hpp>
#include <motivic/error.hpp>
#include <motivic/fp_polynomial.hpp>
#include <motivic/galois_field.hpp>
#include <motivic/lring.hpp>
#include <motivic/moduli.hpp>
#include <motivic/repnil.hpp>

// Explicit presentations of quotient varieties: invariant generators of
// k[V], the presentation ring they generate, and its relations.

namespace motivic
{

struct QuotientExample {
    std::string id;
    Prime prime;
    // G: the alpha_p-action through the derivation of `dims`;
    // H: the Z/pZ-action through h_generator(dims).
    Group group;
    DimSeq dims;
    std::vector<std::string> ambient_names;
    std::vector<FpPolynomial> generators;
    std::vector<std::string> presentation_names;
    std::vector<FpPolynomial> relations;

    std::size_t dimension() const noexcept
    {
        return ambient_names.size();
    }
};

inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

inline const std::vector<std::string> &builtin_example_ids()
{
    static const std::vector<std::string> ids{"ex_d3", "ex_d22_p2", "ex_d2_H"};
    return ids;
}

// k[x,y,z]^G = k[2x, y^p, z^p, y^2 - 2xz] = k[X,Y,Z,W]/(Y^2 - W^p - X^p Z), p >= 3.
inline QuotientExample example_d3(Prime p)
{
    if (p.value() < 3) {
        throw Error(ErrorCode::wrong_characteristic, "ex_d3 needs p >= 3");
    }
    const std::vector<std::string> amb{"x", "y", "z"};
    const std::vector<std::string> pres{"X", "Y", "Z", "W"};
    const std::string ps = std::to_string(p.value());
    std::vector<FpPolynomial> gens{
        parse_polynomial("2*x", p, amb),
        parse_polynomial("y^" + ps, p, amb),
        parse_polynomial("z^" + ps, p, amb),
        parse_polynomial("y^2 - 2*x*z", p, amb),
    };
    std::vector<FpPolynomial> rels{parse_polynomial("Y^2 - W^" + ps + " - X^" + ps + "*Z", p, pres)};
    return QuotientExample{"ex_d3", p, Group::G, DimSeq({3}, p), amb, std::move(gens), pres, std::move(rels)};
}

// k[x0,y0,x1,y1]^G = k[x0, y0^2, x1, y1^2, x0 y1 + x1 y0] = k[V,W,X,Y,Z]/(Z^2 + V^2 Y + X^2 W), p = 2.
inline QuotientExample example_d22_p2()
{
    const Prime p(2);
    const std::vector<std::string> amb{"x0", "y0", "x1", "y1"};
    const std::vector<std::string> pres{"V", "W", "X", "Y", "Z"};
    std::vector<FpPolynomial> gens{
        parse_polynomial("x0", p, amb),    parse_polynomial("y0^2", p, amb), parse_polynomial("x1", p, amb),
        parse_polynomial("y1^2", p, amb), parse_polynomial("x0*y1 + x1*y0", p, amb),
    };
    std::vector<FpPolynomial> rels{parse_polynomial("Z^2 + V^2*Y + X^2*W", p, pres)};
    return QuotientExample{"ex_d22_p2", p, Group::G, DimSeq({2, 2}, p), amb, std::move(gens), pres, std::move(rels)};
}

// k[x,y]^H = k[x^p - x y^(p-1), y] for the generator x -> x + y, y -> y.
// The ambient order (y, x) makes that generator the unipotent Jordan block.
inline QuotientExample example_d2_H(Prime p)
{
    const std::vector<std::string> amb{"y", "x"};
    const std::vector<std::string> pres{"X", "Y"};
    const std::string ps = std::to_string(p.value());
    std::vector<FpPolynomial> gens{
        parse_polynomial("x^" + ps + " - x*y^" + std::to_string(p.value() - 1), p, amb),
        parse_polynomial("y", p, amb),
    };
    return QuotientExample{"ex_d2_H", p, Group::H, DimSeq({2}, p), amb, std::move(gens), pres, {}};
}

inline QuotientExample make_example(const std::string &id, Prime p)
{
    if (id == "ex_d3") {
        return example_d3(p);
    }
    if (id == "ex_d22_p2") {
        if (p.value() != 2) {
            throw Error(ErrorCode::wrong_characteristic, "ex_d22_p2 is defined for p = 2 only");
        }
        return example_d22_p2();
    }
    if (id == "ex_d2_H") {
        return example_d2_H(p);
    }
    throw Error(ErrorCode::invalid_argument, "unknown example '" + id + "'");
}

inline std::vector<QuotientExample> builtin_examples()
{
    return {example_d3(Prime(3)), example_d22_p2(), example_d2_H(Prime(2))};
}

// Each relation with the generators substituted, as a polynomial on V.
inline std::vector<FpPolynomial> relation_residuals(const QuotientExample &e)
{
    std::vector<FpPolynomial> out;
    for (const auto &r : e.relations) {
        out.push_back(r.compose(e.generators));
    }
    return out;
}

// Zero iff every relation holds on the generators.
inline FpPolynomial verify_presentation(const QuotientExample &e)
{
    for (auto &r : relation_residuals(e)) {
        if (!r.is_zero()) {
            return r;
        }
    }
    return FpPolynomial(e.prime, e.dimension());
}

// D(g) for G-examples and sigma(g) - g for H-examples, per generator.
inline std::vector<FpPolynomial> invariance_residuals(const QuotientExample &e)
{
    std::vector<FpPolynomial> out;
    if (e.group == Group::G) {
        const auto xi = jordan_nilpotent(e.dims);
        for (const auto &g : e.generators) {
            out.push_back(derivation_apply(xi, g));
        }
    } else {
        const auto sigma = h_generator(e.dims);
        for (const auto &g : e.generators) {
            out.push_back(linear_substitute(sigma, g) - g);
        }
    }
    return out;
}

struct PointCount {
    Integer count;
    std::uint64_t tuples_enumerated = 0;
    // Presentation variable solved for instead of enumerated, if any.
    std::optional<std::string> eliminated;
};

namespace detail
{

struct FieldTerm {
    GaloisField::Element coeff;
    Monomial exps;
};

inline std::vector<FieldTerm> lift_terms(const FpPolynomial &f, const GaloisField &field)
{
    std::vector<FieldTerm> out;
    for (const auto &[m, c] : f.terms()) {
        out.push_back(FieldTerm{field.from_prime_field(c), m});
    }
    return out;
}

inline GaloisField::Element eval_terms(const std::vector<FieldTerm> &terms, const std::vector<GaloisField::Element> &x,
                                       const GaloisField &field)
{
    GaloisField::Element acc = 0;
    for (const auto &t : terms) {
        auto v = t.coeff;
        for (std::size_t i = 0; i < x.size() && v != 0; ++i) {
            if (t.exps[i] != 0) {
                v = field.mul(v, field.pow(x[i], t.exps[i]));
            }
        }
        acc = field.add(acc, v);
    }
    return acc;
}

struct Elimination {
    std::size_t variable;
    std::size_t term;  // index into the lifted terms
    unsigned frobenius; // the term is c * x_v^(p^frobenius)
};

// A variable occurring in exactly one term of a single relation, alone and
// with a p-power exponent, has exactly one solution for every value of the
// other variables.
inline std::optional<Elimination> find_elimination(const QuotientExample &e)
{
    if (e.relations.size() != 1) {
        return std::nullopt;
    }
    const auto p = static_cast<std::uint32_t>(e.prime.value());
    const auto &rel = e.relations.front();
    const auto n = e.presentation_names.size();
    for (std::size_t v = 0; v < n; ++v) {
        std::optional<std::size_t> hit;
        std::size_t occurrences = 0;
        std::size_t idx = 0;
        for (const auto &[m, c] : rel.terms()) {
            if (m[v] != 0) {
                ++occurrences;
                hit = idx;
            }
            ++idx;
        }
        if (occurrences != 1) {
            continue;
        }
        const auto &m = std::next(rel.terms().begin(), static_cast<std::ptrdiff_t>(*hit))->first;
        bool alone = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != v && m[i] != 0) {
                alone = false;
            }
        }
        std::uint32_t ex = m[v];
        unsigned k = 0;
        while (ex % p == 0) {
            ex /= p;
            ++k;
        }
        if (alone && ex == 1) {
            return Elimination{v, *hit, k};
        }
    }
    return std::nullopt;
}

inline bool next_tuple(std::vector<GaloisField::Element> &x, std::int64_t q, std::optional<std::size_t> skip)
{
    for (std::size_t i = x.size(); i-- > 0;) {
        if (skip && *skip == i) {
            continue;
        }
        if (static_cast<std::int64_t>(++x[i]) < q) {
            return true;
        }
        x[i] = 0;
    }
    return false;
}

inline bool fits_budget(std::int64_t q, std::size_t n, std::uint64_t budget)
{
    long double total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<long double>(q);
    }
    return total <= static_cast<long double>(budget);
}

} // namespace detail

// Number of F_q-points of Spec F_q[presentation vars]/(relations), by
// enumeration of presentation-variable tuples.
inline PointCount count_points_detailed(const QuotientExample &e, std::int64_t q,
                                        std::uint64_t budget = default_enumeration_budget)
{
    const auto pp = prime_power_decomposition(q);
    if (!pp) {
        throw Error(ErrorCode::invalid_argument, std::to_string(q) + " is not a prime power");
    }
    if (!(pp->prime == e.prime)) {
        throw Error(ErrorCode::wrong_characteristic,
                    "q = " + std::to_string(q) + " is not a power of p = " + std::to_string(e.prime.value()));
    }
    const auto n = e.presentation_names.size();
    std::optional<detail::Elimination> elim;
    if (!detail::fits_budget(q, n, budget)) {
        elim = detail::find_elimination(e);
        if (!elim || !detail::fits_budget(q, n - 1, budget)) {
            throw Error(ErrorCode::budget_exceeded, "enumeration over F_" + std::to_string(q) + " exceeds budget " +
                                                        std::to_string(budget));
        }
    }
    const GaloisField field(q);
    std::vector<std::vector<detail::FieldTerm>> rels;
    for (const auto &r : e.relations) {
        rels.push_back(detail::lift_terms(r, field));
    }
    PointCount out;
    std::vector<GaloisField::Element> x(n, 0);
    std::optional<std::size_t> skip;
    std::vector<detail::FieldTerm> rest;
    GaloisField::Element inv_coeff = 0;
    if (elim) {
        skip = elim->variable;
        out.eliminated = e.presentation_names[elim->variable];
        rest = rels.front();
        inv_coeff = field.pow(rest[elim->term].coeff, static_cast<std::uint64_t>(q - 2));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(elim->term));
    }
    do {
        ++out.tuples_enumerated;
        if (elim) {
            // c * v^(p^k) = -rest  =>  v = (-rest / c)^(p^-k)
            x[elim->variable] = 0;
            const auto r = detail::eval_terms(rest, x, field);
            x[elim->variable] = field.frobenius_root(field.mul(field.neg(r), inv_coeff), elim->frobenius);
        }
        bool ok = true;
        for (const auto &r : rels) {
            if (detail::eval_terms(r, x, field) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ++out.count;
        }
    } while (detail::next_tuple(x, q, skip));
    return out;
}

inline Integer count_points(const QuotientExample &e, std::int64_t q, std::uint64_t budget = default_enumeration_budget)
{
    return count_points_detailed(e, q, budget).count;
}

struct SpecializationReport {
    Rational specialized;
    Integer counted;
    bool equal;
};

inline SpecializationReport specialization_check(const MotivicValue &v, const QuotientExample &e, std::int64_t q,
                                                 std::uint64_t budget = default_enumeration_budget)
{
    const auto s = mv_specialize(v, Rational(q));
    const auto c = count_points(e, q, budget);
    return SpecializationReport{s, c, s == Rational(c)};
}

} // namespace motivic

#endif
