// Invariant rings of small nilpotent representations and point counts of the
// resulting quotients.
#include <iostream>

#include <motivic/quotients.hpp>
#include <motivic/repnil.hpp>

int main()
{
    using namespace motivic;
    const DimSeq d({3}, Prime(3));
    const auto xi = jordan_nilpotent(d);
    std::cout << "xi = " << xi.to_string() << '\n';
    std::cout << "exp(xi e) = " << coaction(xi).to_string() << '\n';
    for (const auto &g : invariant_basis(xi, 3)) {
        std::cout << "  invariant: " << g.to_string() << '\n';
    }
    for (const auto &e : builtin_examples()) {
        std::cout << e.id << " (p = " << e.prime.value() << "):";
        for (std::size_t k = 0; k < e.generators.size(); ++k) {
            std::cout << ' ' << e.presentation_names[k] << " = " << e.generators[k].to_string(e.ambient_names)
                      << (k + 1 < e.generators.size() ? "," : "");
        }
        std::cout << '\n';
        for (const auto &r : e.relations) {
            std::cout << "  relation " << r.to_string(e.presentation_names) << '\n';
        }
        const std::int64_t q = e.prime.value() * e.prime.value();
        std::cout << "  #points over F_" << q << " = " << count_points(e, q) << '\n';
    }
}
