#ifndef MOTIVIC_REPNIL_HPP
#define MOTIVIC_REPNIL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <motivic/dim_seq.hpp>
#include <motivic/error.hpp>
#include <motivic/fp.hpp>
#include <motivic/fp_matrix.hpp>
#include <motivic/fp_polynomial.hpp>
#include <motivic/prime.hpp>

// alpha_p-representations as p-nilpotent endomorphisms, the coaction
// exp(xi eps), and the induced derivation on the symmetric algebra.
//
// Convention: column j of a matrix is the image of the j-th basis vector,
// so the derivation sends x_j to sum_i xi(i, j) x_i. For a single Jordan
// block of size 3 this is D(x1) = 0, D(x2) = x1, D(x3) = x2.

namespace motivic
{

inline FpMatrix jordan_nilpotent(const DimSeq &d)
{
    const Prime p = d.prime();
    FpMatrix m(p, static_cast<std::size_t>(d.total()));
    std::size_t offset = 0;
    for (int size : d.entries()) {
        if (size > p.value()) {
            throw Error(ErrorCode::block_too_large, "Jordan block of size " + std::to_string(size) + " exceeds p");
        }
        for (int k = 0; k + 1 < size; ++k) {
            m(offset + static_cast<std::size_t>(k), offset + static_cast<std::size_t>(k) + 1) = 1;
        }
        offset += static_cast<std::size_t>(size);
    }
    return m;
}

// Generator of Z/pZ acting through unipotent Jordan blocks.
inline FpMatrix h_generator(const DimSeq &d)
{
    const auto xi = jordan_nilpotent(d);
    return FpMatrix::identity(d.prime(), xi.dim()) + xi;
}

inline bool is_p_nilpotent(const FpMatrix &xi)
{
    return xi.power(static_cast<std::uint64_t>(xi.prime().value())).is_zero();
}

// phi = sum_{i < p} phi_i eps^i, stored by its matrix components.
class CoactionMatrix
{
public:
    // No axioms are checked here; see check_coaction_axioms.
    explicit CoactionMatrix(std::vector<FpMatrix> components) : components_(std::move(components))
    {
        if (components_.empty()) {
            throw Error(ErrorCode::invalid_argument, "coaction needs at least the eps^0 component");
        }
        const auto p = components_.front().prime();
        const auto n = components_.front().dim();
        if (components_.size() != static_cast<std::size_t>(p.value())) {
            throw Error(ErrorCode::dimension_mismatch, "coaction must have exactly p components");
        }
        for (const auto &c : components_) {
            if (!(c.prime() == p) || c.dim() != n) {
                throw Error(ErrorCode::dimension_mismatch, "coaction components differ in shape");
            }
        }
    }

    Prime prime() const noexcept
    {
        return components_.front().prime();
    }

    std::size_t dim() const noexcept
    {
        return components_.front().dim();
    }

    const std::vector<FpMatrix> &components() const noexcept
    {
        return components_;
    }

    const FpMatrix &component(std::size_t i) const
    {
        return components_.at(i);
    }

    // Entry (r, c) as coefficients of eps^0 .. eps^{p-1}.
    std::vector<fp::Residue> entry(std::size_t r, std::size_t c) const
    {
        std::vector<fp::Residue> out;
        for (const auto &m : components_) {
            out.push_back(m(r, c));
        }
        return out;
    }

    FpMatrix evaluate(fp::Residue eps) const
    {
        const auto p = prime();
        FpMatrix acc(p, dim());
        fp::Residue pw = 1;
        for (const auto &m : components_) {
            acc = acc + m.scaled(pw);
            pw = fp::mul(pw, eps, p);
        }
        return acc;
    }

    std::string entry_to_string(std::size_t r, std::size_t c) const
    {
        std::string s;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            const auto v = components_[i](r, c);
            if (v == 0) {
                continue;
            }
            if (!s.empty()) {
                s += " + ";
            }
            if (i == 0) {
                s += std::to_string(v);
                continue;
            }
            if (v != 1) {
                s += std::to_string(v) + "*";
            }
            s += i == 1 ? std::string("e") : "e^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t r = 0; r < dim(); ++r) {
            s += r ? ", [" : "[";
            for (std::size_t c = 0; c < dim(); ++c) {
                s += (c ? ", " : "") + entry_to_string(r, c);
            }
            s += "]";
        }
        return s + "]";
    }

private:
    std::vector<FpMatrix> components_;
};

// exp(xi eps) = sum_{i < p} xi^i eps^i / i!
inline CoactionMatrix coaction(const FpMatrix &xi)
{
    if (!is_p_nilpotent(xi)) {
        throw Error(ErrorCode::not_p_nilpotent, "xi^p != 0");
    }
    const auto p = xi.prime();
    const auto inv_fact = fp::inverse_factorials(p);
    std::vector<FpMatrix> comps;
    FpMatrix pw = FpMatrix::identity(p, xi.dim());
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.value()); ++i) {
        comps.push_back(pw.scaled(inv_fact[i]));
        pw = pw * xi;
    }
    return CoactionMatrix(std::move(comps));
}

enum class CoactionLaw { counit, coassociativity };

struct AxiomViolation {
    CoactionLaw law;
    std::size_t eps1_power;
    std::size_t eps2_power;
    std::size_t row;
    std::size_t col;
    fp::Residue expected;
    fp::Residue actual;
};

struct AxiomReport {
    bool counit = true;
    bool coassociative = true;
    std::optional<AxiomViolation> first_failure;

    bool passed() const noexcept
    {
        return counit && coassociative;
    }
};

// Counit: phi_0 = id. Coassociativity, compared coefficientwise on
// eps1^i eps2^j in F_p[eps1, eps2]/(eps1^p, eps2^p):
//   (id x Delta) phi = sum_k phi_k (eps1 + eps2)^k  gives  C(i+j, i) phi_{i+j}
//   (phi x id) phi                                   gives  phi_i phi_j
inline AxiomReport check_coaction_axioms(const CoactionMatrix &phi)
{
    AxiomReport rep;
    const auto p = phi.prime();
    const auto n = phi.dim();
    const auto np = static_cast<std::size_t>(p.value());
    auto record = [&](CoactionLaw law, std::size_t i, std::size_t j, const FpMatrix &want, const FpMatrix &got) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (want(r, c) != got(r, c)) {
                    if (!rep.first_failure) {
                        rep.first_failure = AxiomViolation{law, i, j, r, c, want(r, c), got(r, c)};
                    }
                    return false;
                }
            }
        }
        return true;
    };
    if (!record(CoactionLaw::counit, 0, 0, FpMatrix::identity(p, n), phi.component(0))) {
        rep.counit = false;
    }
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            FpMatrix lhs(p, n);
            if (i + j < np) {
                lhs = phi.component(i + j).scaled(fp::binomial(i + j, i, p));
            }
            const FpMatrix rhs = phi.component(i) * phi.component(j);
            if (!record(CoactionLaw::coassociativity, i, j, lhs, rhs)) {
                rep.coassociative = false;
            }
        }
    }
    return rep;
}

inline AxiomReport check_coaction_axioms(const FpMatrix &xi)
{
    return check_coaction_axioms(coaction(xi));
}

// The unique derivation of F_p[x_1..x_n] restricting to xi on linear forms.
inline FpPolynomial derivation_apply(const FpMatrix &xi, const FpPolynomial &f)
{
    if (f.nvars() != xi.dim()) {
        throw Error(ErrorCode::dimension_mismatch,
                    "polynomial has " + std::to_string(f.nvars()) + " variables, matrix dimension " +
                        std::to_string(xi.dim()));
    }
    if (!(f.prime() == xi.prime())) {
        throw Error(ErrorCode::dimension_mismatch, "polynomial and matrix over different primes");
    }
    const auto p = f.prime();
    const auto n = f.nvars();
    FpPolynomial out(p, n);
    Monomial m2(n);
    for (const auto &[m, c] : f.terms()) {
        for (std::size_t k = 0; k < n; ++k) {
            if (m[k] == 0) {
                continue;
            }
            const auto factor = fp::mul(c, fp::reduce(m[k], p), p);
            if (factor == 0) {
                continue;
            }
            // e_k c x^{m - e_k} D(x_k), with D(x_k) = sum_i xi(i, k) x_i.
            for (std::size_t i = 0; i < n; ++i) {
                const auto a = xi(i, k);
                if (a == 0) {
                    continue;
                }
                m2 = m;
                --m2[k];
                ++m2[i];
                out.add_term(m2, fp::mul(factor, a, p));
            }
        }
    }
    return out;
}

// Linear substitution x_j -> sum_i g(i, j) x_i, the action of a matrix g on
// the polynomial ring.
inline FpPolynomial linear_substitute(const FpMatrix &g, const FpPolynomial &f)
{
    if (f.nvars() != g.dim()) {
        throw Error(ErrorCode::dimension_mismatch, "substitution dimension mismatch");
    }
    const auto n = g.dim();
    std::vector<FpPolynomial> images;
    for (std::size_t j = 0; j < n; ++j) {
        FpPolynomial img(f.prime(), n);
        for (std::size_t i = 0; i < n; ++i) {
            if (g(i, j) != 0) {
                Monomial m(n, 0);
                m[i] = 1;
                img.add_term(m, g(i, j));
            }
        }
        images.push_back(std::move(img));
    }
    return f.compose(images);
}

// All monomials of the given degree, largest first in graded-lex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree)
{
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    auto rec = [&](auto &&self, std::size_t idx, std::uint32_t remaining) -> void {
        if (idx + 1 == nvars) {
            cur[idx] = remaining;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = remaining + 1; e-- > 0;) {
            cur[idx] = e;
            self(self, idx + 1, remaining - e);
        }
    };
    if (nvars == 0) {
        if (degree == 0) {
            out.emplace_back();
        }
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

namespace detail
{

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<fp::Residue>> &rows, std::size_t ncols, Prime p)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[r]);
        const auto iv = fp::inv(rows[r][c], p);
        for (auto &v : rows[r]) {
            v = fp::mul(v, iv, p);
        }
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][c] == 0) {
                continue;
            }
            const auto f = rows[o][c];
            for (std::size_t k = c; k < ncols; ++k) {
                rows[o][k] = fp::sub(rows[o][k], fp::mul(f, rows[r][k], p), p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

} // namespace detail

// Basis of ker(D) on the degree-k piece, in reduced echelon form with
// respect to graded-lex order: each element is monic in its leading
// monomial and no leading monomial appears in any other element.
inline std::vector<FpPolynomial> invariant_basis_degree(const FpMatrix &xi, std::uint32_t degree)
{
    const auto p = xi.prime();
    const auto n = xi.dim();
    const auto monos = monomials_of_degree(n, degree);
    const auto m = monos.size();
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < m; ++k) {
        index.emplace(monos[k], k);
    }
    // rows: image coordinates, columns: source monomials.
    std::vector<std::vector<fp::Residue>> mat(m, std::vector<fp::Residue>(m, 0));
    for (std::size_t c = 0; c < m; ++c) {
        FpPolynomial mono(p, n);
        mono.add_term(monos[c], 1);
        const auto image = derivation_apply(xi, mono);
        for (const auto &[img, v] : image.terms()) {
            mat[index.at(img)][c] = v;
        }
    }
    const auto pivots = detail::rref(mat, m, p);
    std::vector<bool> is_pivot(m, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<fp::Residue>> kernel;
    for (std::size_t free = 0; free < m; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<fp::Residue> v(m, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = fp::neg(mat[r][free], p);
        }
        kernel.push_back(std::move(v));
    }
    detail::rref(kernel, m, p);
    std::vector<FpPolynomial> out;
    for (const auto &v : kernel) {
        FpPolynomial f(p, n);
        for (std::size_t k = 0; k < m; ++k) {
            f.add_term(monos[k], v[k]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

// Degrees 1 .. maxdeg, concatenated in increasing degree.
inline std::vector<FpPolynomial> invariant_basis(const FpMatrix &xi, std::uint32_t maxdeg)
{
    if (maxdeg < 1) {
        throw Error(ErrorCode::invalid_argument, "maxdeg must be >= 1");
    }
    std::vector<FpPolynomial> out;
    for (std::uint32_t k = 1; k <= maxdeg; ++k) {
        auto part = invariant_basis_degree(xi, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Whether f lies in the F_p-span of the given homogeneous basis of one degree.
inline bool in_span(const std::vector<FpPolynomial> &basis, const FpPolynomial &f)
{
    std::vector<Monomial> monos;
    auto collect = [&](const FpPolynomial &g) {
        for (const auto &[m, c] : g.terms()) {
            monos.push_back(m);
        }
    };
    for (const auto &b : basis) {
        collect(b);
    }
    collect(f);
    std::sort(monos.begin(), monos.end(), GradedLexGreater{});
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    auto as_row = [&](const FpPolynomial &g) {
        std::vector<fp::Residue> row(monos.size(), 0);
        for (std::size_t k = 0; k < monos.size(); ++k) {
            row[k] = g.coefficient(monos[k]);
        }
        return row;
    };
    std::vector<std::vector<fp::Residue>> rows;
    for (const auto &b : basis) {
        rows.push_back(as_row(b));
    }
    const auto p = f.prime();
    auto without = rows;
    const auto r0 = detail::rref(without, monos.size(), p).size();
    rows.push_back(as_row(f));
    const auto r1 = detail::rref(rows, monos.size(), p).size();
    return r0 == r1;
}

// Sequence rank(A), rank(A^2), ..., rank(A^n): determines the Jordan type
// of a nilpotent matrix.
inline std::vector<std::size_t> nilpotent_rank_profile(const FpMatrix &a)
{
    std::vector<std::size_t> out;
    FpMatrix pw = a;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        out.push_back(pw.rank());
        pw = pw * a;
    }
    return out;
}

} // namespace motivic

#endif
