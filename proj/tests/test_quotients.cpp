#include <set>

#include <gtest/gtest.h>

#include <motivic/quotients.hpp>

using namespace motivic;

namespace
{

MotivicValue L(Exponent e = 1)
{
    return MotivicValue::lefschetz(e);
}

} // namespace

TEST(BuiltinExamples, Shapes)
{
    const auto all = builtin_examples();
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[0].id, "ex_d3");
    EXPECT_EQ(all[0].dimension(), 3u);
    EXPECT_EQ(all[0].generators.size(), 4u);
    EXPECT_EQ(all[0].relations.size(), 1u);
    EXPECT_EQ(all[1].id, "ex_d22_p2");
    EXPECT_EQ(all[1].generators.size(), 5u);
    EXPECT_EQ(all[2].id, "ex_d2_H");
    EXPECT_EQ(all[2].group, Group::H);
    EXPECT_TRUE(all[2].relations.empty());
    EXPECT_EQ(all[0].generators[3].to_string(all[0].ambient_names), "x*z + y^2");
    EXPECT_EQ(all[2].generators[0].to_string(all[2].ambient_names), "y*x + x^2");
}

TEST(BuiltinExamples, Lookup)
{
    EXPECT_EQ(make_example("ex_d3", Prime(7)).prime.value(), 7);
    try {
        (void)make_example("ex_d3", Prime(2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::wrong_characteristic);
    }
    EXPECT_THROW((void)make_example("ex_d22_p2", Prime(3)), Error);
    EXPECT_THROW((void)make_example("nope", Prime(3)), Error);
}

TEST(VerifyPresentation, ResidualsVanish)
{
    for (std::int64_t p : {3, 5, 7, 11}) {
        const auto e = example_d3(Prime(p));
        EXPECT_TRUE(verify_presentation(e).is_zero()) << "p=" << p;
        for (const auto &r : invariance_residuals(e)) {
            EXPECT_TRUE(r.is_zero());
        }
    }
    const auto e22 = example_d22_p2();
    EXPECT_TRUE(verify_presentation(e22).is_zero());
    for (const auto &r : invariance_residuals(e22)) {
        EXPECT_TRUE(r.is_zero());
    }
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (const auto &r : invariance_residuals(example_d2_H(Prime(p)))) {
            EXPECT_TRUE(r.is_zero()) << "p=" << p;
        }
    }
}

TEST(VerifyPresentation, ExplicitExpansion)
{
    // (y^3)^2 - (y^2 - 2xz)^3 - (2x)^3 z^3 over F_3.
    const Prime p(3);
    const std::vector<std::string> n{"x", "y", "z"};
    const auto lhs = parse_polynomial("(y^3)^2 - (y^2 - 2*x*z)^3 - (2*x)^3*z^3", p, n);
    EXPECT_TRUE(lhs.is_zero());
    const auto in2 = parse_polynomial("(x0*y1 + x1*y0)^2 + x0^2*y1^2 + x1^2*y0^2", Prime(2),
                                      std::vector<std::string>{"x0", "y0", "x1", "y1"});
    EXPECT_TRUE(in2.is_zero());
}

TEST(VerifyPresentation, DetectsBrokenRelation)
{
    auto e = example_d3(Prime(5));
    e.relations[0] = parse_polynomial("Y^2 - W^5 - X^5*Z - X", Prime(5), e.presentation_names);
    EXPECT_FALSE(verify_presentation(e).is_zero());
    e.generators[1] = parse_polynomial("y^2", Prime(5), e.ambient_names);
    bool moved = false;
    for (const auto &r : invariance_residuals(e)) {
        moved = moved || !r.is_zero();
    }
    EXPECT_TRUE(moved);
}

TEST(CountPoints, Examples)
{
    EXPECT_EQ(count_points(example_d3(Prime(3)), 3), 27);
    EXPECT_EQ(count_points(example_d3(Prime(3)), 9), 729);
    EXPECT_EQ(count_points(example_d3(Prime(3)), 27), 19683);
    EXPECT_EQ(count_points(example_d22_p2(), 2), 16);
    EXPECT_EQ(count_points(example_d22_p2(), 4), 256);
    for (std::int64_t q : {2, 4, 8}) {
        EXPECT_EQ(count_points(example_d2_H(Prime(2)), q), q * q);
    }
    EXPECT_EQ(count_points(example_d3(Prime(5)), 5), 125);
}

TEST(CountPoints, EliminationAgreesWithFullEnumeration)
{
    struct Case {
        QuotientExample e;
        std::int64_t q;
    };
    for (const auto &c : {Case{example_d3(Prime(3)), 9}, Case{example_d22_p2(), 4}, Case{example_d3(Prime(5)), 5}}) {
        const auto full = count_points_detailed(c.e, c.q);
        EXPECT_FALSE(full.eliminated.has_value());
        std::uint64_t smaller = 1;
        for (std::size_t k = 0; k + 1 < c.e.presentation_names.size(); ++k) {
            smaller *= static_cast<std::uint64_t>(c.q);
        }
        const auto elim = count_points_detailed(c.e, c.q, smaller);
        ASSERT_TRUE(elim.eliminated.has_value());
        EXPECT_EQ(elim.tuples_enumerated, smaller);
        EXPECT_EQ(elim.count, full.count);
    }
}

TEST(CountPoints, Errors)
{
    try {
        (void)count_points(example_d3(Prime(3)), 4);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::wrong_characteristic);
    }
    try {
        (void)count_points(example_d3(Prime(3)), 3, 5);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::budget_exceeded);
    }
    try {
        (void)count_points(example_d2_H(Prime(2)), 1024, 1000);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::budget_exceeded);
    }
    EXPECT_THROW((void)count_points(example_d3(Prime(3)), 6), Error);
}

TEST(SpecializationCheck, Examples)
{
    const auto a = specialization_check(L(3), example_d3(Prime(3)), 3);
    EXPECT_TRUE(a.equal);
    EXPECT_EQ(a.counted, 27);
    const auto b = specialization_check(L(4), example_d22_p2(), 2);
    EXPECT_TRUE(b.equal);
    EXPECT_EQ(b.counted, 16);
    const auto c = specialization_check(L(2), example_d2_H(Prime(2)), 4);
    EXPECT_TRUE(c.equal);
    EXPECT_EQ(c.counted, 16);
    const auto d = specialization_check(L(2), example_d3(Prime(3)), 3);
    EXPECT_FALSE(d.equal);
}

// The generators define an injective map on F_q-points, V(F_q) -> (V/G)(F_q);
// counting its image directly in the ambient space is independent of the
// relation.
TEST(CountPoints, MatchesImageOfAmbientSpace)
{
    const auto e = example_d3(Prime(3));
    const GaloisField k(9);
    std::set<std::vector<GaloisField::Element>> image;
    for (GaloisField::Element x = 0; x < 9; ++x) {
        for (GaloisField::Element y = 0; y < 9; ++y) {
            for (GaloisField::Element z = 0; z < 9; ++z) {
                const auto two = k.from_prime_field(2);
                image.insert({k.mul(two, x), k.pow(y, 3), k.pow(z, 3), k.add(k.mul(y, y), k.neg(k.mul(two, k.mul(x, z))))});
            }
        }
    }
    EXPECT_EQ(Integer(image.size()), count_points(e, 9));
}

TEST(GaloisField, Arithmetic)
{
    for (std::int64_t q : {2, 3, 4, 8, 9, 25, 27}) {
        const GaloisField k(q);
        std::set<GaloisField::Element> units;
        for (GaloisField::Element a = 1; a < q; ++a) {
            EXPECT_EQ(k.pow(a, static_cast<std::uint64_t>(q - 1)), 1u);
            EXPECT_EQ(k.add(a, k.neg(a)), 0u);
            for (unsigned m = 0; m < 3; ++m) {
                auto r = k.frobenius_root(a, m);
                for (unsigned t = 0; t < m; ++t) {
                    r = k.pow(r, static_cast<std::uint64_t>(k.characteristic().value()));
                }
                EXPECT_EQ(r, a);
            }
            for (GaloisField::Element b = 1; b < q; ++b) {
                EXPECT_NE(k.mul(a, b), 0u);
                for (GaloisField::Element c = 0; c < q && q <= 9; ++c) {
                    EXPECT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                }
            }
        }
    }
    EXPECT_THROW(GaloisField(6), Error);
    EXPECT_THROW(GaloisField(std::int64_t{1} << 25), Error);
    const auto pp = prime_power_decomposition(243);
    ASSERT_TRUE(pp.has_value());
    EXPECT_EQ(pp->prime.value(), 3);
    EXPECT_EQ(pp->exponent, 5u);
    EXPECT_FALSE(prime_power_decomposition(12).has_value());
}
