#include <map>

#include <gtest/gtest.h>

#include <motivic/moduli.hpp>

using namespace motivic;

namespace
{

MotivicValue L(Exponent e = 1)
{
    return MotivicValue::lefschetz(e);
}

const MotivicValue one = MotivicValue::one();

// Number of f in Delta_H^{>= -J}(F_q) with each order, by enumerating the
// coefficients of t^-i (1 <= i <= J, p not dividing i). Only zero versus
// nonzero matters for the order, so field elements are the labels 0..q-1.
// Key 0 collects f = 0.
std::map<std::int64_t, std::int64_t> count_by_order(std::int64_t p, std::int64_t q, std::int64_t J)
{
    std::vector<std::int64_t> slots;
    for (std::int64_t i = 1; i <= J; ++i) {
        if (i % p != 0) {
            slots.push_back(i);
        }
    }
    std::vector<std::int64_t> coeffs(slots.size(), 0);
    std::map<std::int64_t, std::int64_t> out;
    while (true) {
        std::int64_t j = 0;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (coeffs[k] != 0) {
                j = slots[k];
            }
        }
        ++out[j];
        std::size_t k = 0;
        while (k < coeffs.size() && ++coeffs[k] == q) {
            coeffs[k++] = 0;
        }
        if (k == coeffs.size()) {
            break;
        }
    }
    return out;
}

} // namespace

TEST(DimDeltaH, Examples)
{
    EXPECT_EQ(dim_delta_H_geq(Prime(3), 4), 3);
    for (std::int64_t p : {2, 3, 5, 7}) {
        EXPECT_EQ(dim_delta_H_geq(Prime(p), 1), 1);
    }
    EXPECT_EQ(dim_delta_H_geq(Prime(2), 5), 3);
    EXPECT_THROW((void)dim_delta_H_geq(Prime(2), 0), Error);
}

TEST(StratumClassH, Examples)
{
    EXPECT_TRUE(mv_eq(stratum_class_H(StratumH::zero(Prime(3))), one));
    EXPECT_TRUE(mv_eq(stratum_class_H(StratumH::order(4, Prime(3))), (L() - one) * L(2)));
    EXPECT_TRUE(mv_eq(stratum_class_H(StratumH::order(1, Prime(2))), L() - one));
}

TEST(StratumH, RejectsInvalidIndices)
{
    for (std::int64_t j : {0, -1, 3, 6}) {
        try {
            (void)StratumH::order(j, Prime(3));
            FAIL() << "j=" << j;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::invalid_j);
        }
    }
    EXPECT_THROW((void)StratumH::zero(Prime(3)).j(), Error);
}

TEST(StratumClassH, MatchesFiniteFieldEnumeration)
{
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {3, 3}, {2, 4}, {5, 5}}) {
        const std::int64_t J = 10;
        const auto counts = count_by_order(p, q, J);
        EXPECT_EQ(counts.at(0), 1);
        EXPECT_EQ(mv_specialize(stratum_class_H(StratumH::zero(Prime(p))), Rational(q)), Rational(counts.at(0)));
        for (std::int64_t j = 1; j <= J; ++j) {
            if (j % p == 0) {
                EXPECT_EQ(counts.count(j), 0u);
                continue;
            }
            const auto cls = stratum_class_H(StratumH::order(j, Prime(p)));
            EXPECT_EQ(mv_specialize(cls, Rational(q)), Rational(counts.at(j))) << "p=" << p << " q=" << q << " j=" << j;
        }
    }
}

TEST(StratumClassH, PartitionOfSpace)
{
    for (std::int64_t pv : {2, 3, 5, 7}) {
        const Prime p(pv);
        MotivicValue sum = stratum_class_H(StratumH::zero(p));
        for (std::int64_t J = 1; J <= 50; ++J) {
            if (J % pv != 0) {
                sum = sum + stratum_class_H(StratumH::order(J, p));
            }
            EXPECT_TRUE(mv_eq(sum, L(dim_delta_H_geq(p, J)))) << "p=" << pv << " J=" << J;
        }
    }
}

TEST(CylinderMeasureG, Examples)
{
    for (std::int64_t pv : {2, 3, 5}) {
        const Prime p(pv);
        EXPECT_TRUE(mv_eq(cylinder_measure_G(CylinderG{0, one, p}), one));
        EXPECT_TRUE(mv_eq(cylinder_measure_G(CylinderG{1, L(pv - 1), p}), one));
    }
    const CylinderG c{2, (L() - one) * L(2), Prime(2)};
    EXPECT_TRUE(mv_eq(cylinder_measure_G(c), L() - one));
    EXPECT_TRUE(mv_eq(cylinder_measure_G(c), stratum_class_H(StratumH::order(1, Prime(2)))));
}

TEST(CylinderMeasureG, LevelStable)
{
    for (std::int64_t pv : {2, 3, 5, 7}) {
        const Prime p(pv);
        for (std::int64_t j = 1; j <= 20; ++j) {
            if (j % pv == 0) {
                continue;
            }
            const CylinderG c{0, stratum_class_H(StratumH::order(j, p)), p};
            for (std::int64_t by = 1; by <= 4; ++by) {
                const auto up = raise_level(c, by);
                EXPECT_EQ(up.level, by);
                EXPECT_TRUE(mv_eq(cylinder_measure_G(up), cylinder_measure_G(c)));
            }
        }
    }
    EXPECT_THROW((void)cylinder_measure_G(CylinderG{0, MotivicValue::infinity(), Prime(2)}), Error);
}

TEST(TorsorClass, Validation)
{
    EXPECT_NO_THROW(TorsorClass(Group::G, Order::finite(4), Prime(3)));
    EXPECT_NO_THROW(TorsorClass(Group::H, Order::infinity(), Prime(3)));
    try {
        TorsorClass(Group::H, Order::finite(2), Prime(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::invalid_order);
    }
    EXPECT_THROW(TorsorClass(Group::G, Order::finite(-6), Prime(3)), Error);
}

TEST(TorsorPresentation, Text)
{
    EXPECT_EQ(torsor_presentation(TorsorClass(Group::G, Order::finite(-1), Prime(3))),
              "k((t))[z]/(z^3 - f), f with ord(f) = -1, action z ↦ z + ε");
    const auto h = torsor_presentation(TorsorClass(Group::H, Order::infinity(), Prime(2)));
    EXPECT_NE(h.find("trivial torsor"), std::string::npos);
    EXPECT_NE(h.find("z ↦ z + 1"), std::string::npos);
    const auto g0 = torsor_presentation(TorsorClass(Group::G, Order::infinity(), Prime(5)));
    EXPECT_NE(g0.find("k[[t]][z]/(z^5)"), std::string::npos);
    EXPECT_EQ(torsor_presentation(TorsorClass(Group::H, Order::finite(-4), Prime(3))),
              "k((t))[z]/(z^3 - z - f), f with ord(f) = -4, generator acts by z ↦ z + 1");
}
