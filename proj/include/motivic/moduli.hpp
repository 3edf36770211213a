#ifndef MOTIVIC_MODULI_HPP
#define MOTIVIC_MODULI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <motivic/error.hpp>
#include <motivic/lring.hpp>
#include <motivic/prime.hpp>

// Stratum-level description of the moduli of alpha_p-torsors (Delta_G) and
// Z/pZ-torsors (Delta_H) over k((t)). A point f of either space is a Laurent
// series supported on exponents prime to p; Delta_H additionally only uses
// negative exponents. Everything here is indexed by ord(f) alone.

namespace motivic
{

enum class Group { G, H };

inline const char *group_name(Group g) noexcept
{
    return g == Group::G ? "G" : "H";
}

class TorsorClass
{
public:
    TorsorClass(Group group, Order order, Prime p) : group_(group), order_(order), p_(p)
    {
        if (order.is_infinite()) {
            return;
        }
        const auto v = order.value();
        if (v % p.value() == 0) {
            throw Error(ErrorCode::invalid_order, "ord(f) = " + std::to_string(v) + " is divisible by p");
        }
        if (group == Group::H && v >= 0) {
            throw Error(ErrorCode::invalid_order, "points of Delta_H have negative order");
        }
    }

    Group group() const noexcept
    {
        return group_;
    }

    Order order() const noexcept
    {
        return order_;
    }

    Prime prime() const noexcept
    {
        return p_;
    }

private:
    Group group_;
    Order order_;
    Prime p_;
};

// {f in Delta_H : ord(f) = -j}, or the single point f = 0.
class StratumH
{
public:
    static StratumH zero(Prime p) noexcept
    {
        return StratumH(std::nullopt, p);
    }

    static StratumH order(std::int64_t j, Prime p)
    {
        if (j < 1 || j % p.value() == 0) {
            throw Error(ErrorCode::invalid_j, "stratum index j = " + std::to_string(j) + " must be positive and prime to p");
        }
        return StratumH(j, p);
    }

    bool is_zero() const noexcept
    {
        return !j_.has_value();
    }

    std::int64_t j() const
    {
        if (!j_) {
            throw Error(ErrorCode::invalid_j, "the zero stratum has no order index");
        }
        return *j_;
    }

    Prime prime() const noexcept
    {
        return p_;
    }

private:
    StratumH(std::optional<std::int64_t> j, Prime p) : j_(j), p_(p) {}

    std::optional<std::int64_t> j_;
    Prime p_;
};

// A cylinder of Delta_G at level n, known through the class of its image
// under the truncation tau_n.
struct CylinderG {
    std::int64_t level;
    MotivicValue truncated_class;
    Prime prime;
};

// Delta_H^{>= -j} is an affine space of this dimension: one coordinate per
// exponent -i with 1 <= i <= j and p not dividing i.
inline std::int64_t dim_delta_H_geq(Prime p, std::int64_t j)
{
    if (j < 1) {
        throw Error(ErrorCode::invalid_j, "j must be >= 1");
    }
    return j - j / p.value();
}

inline MotivicValue stratum_class_H(const StratumH &s)
{
    if (s.is_zero()) {
        return MotivicValue::one();
    }
    // Leading coefficient in G_m, the remaining slots free.
    const auto dim = dim_delta_H_geq(s.prime(), s.j());
    return MotivicValue(LaurentPolynomial{{dim, 1}, {dim - 1, -1}});
}

inline MotivicValue cylinder_measure_G(const CylinderG &c)
{
    if (c.truncated_class.is_infinite()) {
        throw Error(ErrorCode::invalid_argument, "cylinder classes are finite");
    }
    return shift(c.truncated_class, -c.level * (c.prime.value() - 1));
}

// Delta_{G,n+1} -> Delta_{G,n} is a trivial A^{p-1}-fibration.
inline CylinderG raise_level(const CylinderG &c, std::int64_t by = 1)
{
    return CylinderG{c.level + by, shift(c.truncated_class, by * (c.prime.value() - 1)), c.prime};
}

inline std::string torsor_presentation(const TorsorClass &t)
{
    const std::string p = std::to_string(t.prime().value());
    if (t.group() == Group::G) {
        if (t.order().is_infinite()) {
            return "f = 0: trivial torsor with degenerate algebra k[[t]][z]/(z^" + p + "), action z ↦ z + ε";
        }
        return "k((t))[z]/(z^" + p + " - f), f with ord(f) = " + t.order().to_string() + ", action z ↦ z + ε";
    }
    if (t.order().is_infinite()) {
        return "f = 0: trivial torsor k((t))[z]/(z^" + p + " - z), generator acts by z ↦ z + 1";
    }
    return "k((t))[z]/(z^" + p + " - z - f), f with ord(f) = " + t.order().to_string() +
           ", generator acts by z ↦ z + 1";
}

} // namespace motivic

#endif
