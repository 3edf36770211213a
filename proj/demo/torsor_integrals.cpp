// Stringy integrals over the moduli of alpha_p- and Z/pZ-torsors for a few
// representations, next to the change-of-variables total for d = (2).
#include <iostream>

#include <motivic/covars.hpp>
#include <motivic/stringy.hpp>

int main()
{
    using namespace motivic;
    for (auto [text, p] : {std::pair{"3", 3}, std::pair{"2,2", 2}, std::pair{"3,3", 5}, std::pair{"3", 5}}) {
        const DimSeq d = DimSeq::parse(text, Prime(p));
        std::cout << "d = (" << d.to_string() << "), p = " << p << ", D = " << d.d_invariant() << '\n';
        for (auto tag : {Variant::sht, Variant::sht_prime}) {
            for (auto domain : {Group::H, Group::G}) {
                std::cout << "  " << variant_name(tag) << " over Delta_" << group_name(domain) << ": "
                          << render(stringy_integral(d, {tag, domain})) << '\n';
            }
        }
    }
    for (std::int64_t p : {2, 3, 5}) {
        std::cout << "d = (2), p = " << p << ": " << render(cov_integral(Prime(p), CovPart::nonneg)) << " + "
                  << render(cov_integral(Prime(p), CovPart::neg)) << " = " << render(cov_integral(Prime(p))) << '\n';
    }
}
