#ifndef MOTIVIC_FP_POLYNOMIAL_HPP
#define MOTIVIC_FP_POLYNOMIAL_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <motivic/error.hpp>
#include <motivic/fp.hpp>
#include <motivic/prime.hpp>

namespace motivic
{

using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial &m) noexcept
{
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

// Graded-lex, largest first: higher total degree wins, ties are broken by
// comparing exponents of x1, then x2, ...
struct GradedLexGreater {
    bool operator()(const Monomial &a, const Monomial &b) const noexcept
    {
        const auto da = total_degree(a);
        const auto db = total_degree(b);
        if (da != db) {
            return da > db;
        }
        return a > b;
    }
};

// Default names x1..xn.
inline std::vector<std::string> default_variable_names(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back("x" + std::to_string(i + 1));
    }
    return out;
}

// Sparse polynomial over F_p in a fixed number of variables.
class FpPolynomial
{
public:
    using Terms = std::map<Monomial, fp::Residue, GradedLexGreater>;

    FpPolynomial(Prime p, std::size_t nvars) : p_(p), n_(nvars) {}

    static FpPolynomial constant(Prime p, std::size_t nvars, std::int64_t c)
    {
        FpPolynomial f(p, nvars);
        f.add_term(Monomial(nvars, 0), fp::reduce(c, p));
        return f;
    }

    static FpPolynomial variable(Prime p, std::size_t nvars, std::size_t index, std::uint32_t power = 1)
    {
        if (index >= nvars) {
            throw Error(ErrorCode::dimension_mismatch, "variable index out of range");
        }
        FpPolynomial f(p, nvars);
        Monomial m(nvars, 0);
        m[index] = power;
        f.add_term(m, 1);
        return f;
    }

    Prime prime() const noexcept
    {
        return p_;
    }

    std::size_t nvars() const noexcept
    {
        return n_;
    }

    const Terms &terms() const noexcept
    {
        return terms_;
    }

    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    fp::Residue coefficient(const Monomial &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    std::uint64_t degree() const noexcept
    {
        return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
    }

    bool is_homogeneous() const noexcept
    {
        const auto d = degree();
        for (const auto &[m, c] : terms_) {
            if (total_degree(m) != d) {
                return false;
            }
        }
        return true;
    }

    void add_term(const Monomial &m, fp::Residue c)
    {
        if (m.size() != n_) {
            throw Error(ErrorCode::dimension_mismatch, "monomial has wrong number of variables");
        }
        c %= static_cast<fp::Residue>(p_.value());
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = fp::add(it->second, c, p_);
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    FpPolynomial &operator+=(const FpPolynomial &o)
    {
        check_compatible(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    FpPolynomial &operator-=(const FpPolynomial &o)
    {
        check_compatible(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, fp::neg(c, p_));
        }
        return *this;
    }

    friend FpPolynomial operator+(FpPolynomial a, const FpPolynomial &b)
    {
        a += b;
        return a;
    }

    friend FpPolynomial operator-(FpPolynomial a, const FpPolynomial &b)
    {
        a -= b;
        return a;
    }

    friend FpPolynomial operator*(const FpPolynomial &a, const FpPolynomial &b)
    {
        a.check_compatible(b);
        FpPolynomial r(a.p_, a.n_);
        Monomial m(a.n_);
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.n_; ++i) {
                    m[i] = ma[i] + mb[i];
                }
                r.add_term(m, fp::mul(ca, cb, a.p_));
            }
        }
        return r;
    }

    FpPolynomial scaled(fp::Residue c) const
    {
        FpPolynomial r(p_, n_);
        for (const auto &[m, v] : terms_) {
            r.add_term(m, fp::mul(v, c, p_));
        }
        return r;
    }

    FpPolynomial power(std::uint64_t e) const
    {
        FpPolynomial r = constant(p_, n_, 1);
        FpPolynomial b = *this;
        while (e != 0) {
            if (e & 1u) {
                r = r * b;
            }
            e >>= 1u;
            if (e != 0) {
                b = b * b;
            }
        }
        return r;
    }

    friend bool operator==(const FpPolynomial &a, const FpPolynomial &b)
    {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    // Substitutes images[i] for the i-th variable. All images must share a
    // prime and a variable count, which becomes that of the result.
    FpPolynomial compose(const std::vector<FpPolynomial> &images) const
    {
        if (images.size() != n_) {
            throw Error(ErrorCode::dimension_mismatch, "need one image per variable");
        }
        if (images.empty()) {
            return *this;
        }
        const auto &ref = images.front();
        FpPolynomial r(p_, ref.nvars());
        std::vector<std::map<std::uint32_t, FpPolynomial>> cache(n_);
        auto image_power = [&](std::size_t i, std::uint32_t e) -> const FpPolynomial & {
            auto it = cache[i].find(e);
            if (it == cache[i].end()) {
                it = cache[i].emplace(e, images[i].power(e)).first;
            }
            return it->second;
        };
        for (const auto &[m, c] : terms_) {
            FpPolynomial t = constant(p_, ref.nvars(), static_cast<std::int64_t>(c));
            for (std::size_t i = 0; i < n_; ++i) {
                if (m[i] != 0) {
                    t = t * image_power(i, m[i]);
                }
            }
            r += t;
        }
        return r;
    }

    std::string to_string(const std::vector<std::string> &names) const
    {
        if (names.size() != n_) {
            throw Error(ErrorCode::dimension_mismatch, "need one name per variable");
        }
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            if (!first) {
                os << " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < n_; ++i) {
                if (m[i] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += names[i];
                if (m[i] > 1) {
                    mono += "^" + std::to_string(m[i]);
                }
            }
            if (mono.empty()) {
                os << c;
            } else if (c == 1) {
                os << mono;
            } else {
                os << c << '*' << mono;
            }
        }
        return os.str();
    }

    std::string to_string() const
    {
        return to_string(default_variable_names(n_));
    }

private:
    void check_compatible(const FpPolynomial &o) const
    {
        if (!(p_ == o.p_) || n_ != o.n_) {
            throw Error(ErrorCode::dimension_mismatch, "polynomials live in different rings");
        }
    }

    Prime p_;
    std::size_t n_;
    Terms terms_;
};

namespace detail
{

// expr   := ['-'] term (('+' | '-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' integer]
// atom   := integer | name | '(' expr ')'
class PolynomialParser
{
public:
    PolynomialParser(const std::string &text, Prime p, const std::vector<std::string> &names)
        : s_(text), p_(p), names_(names)
    {
    }

    FpPolynomial parse()
    {
        auto f = expr();
        skip_ws();
        if (pos_ != s_.size()) {
            fail("unexpected trailing input");
        }
        return f;
    }

private:
    [[noreturn]] void fail(const std::string &why) const
    {
        throw Error(ErrorCode::parse_error, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::uint64_t integer()
    {
        skip_ws();
        const auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        const auto tok = s_.substr(start, pos_ - start);
        if (tok.size() > 18) {
            fail("integer too large");
        }
        return std::stoull(tok);
    }

    FpPolynomial expr()
    {
        const bool negate = accept('-');
        FpPolynomial acc = term();
        if (negate) {
            acc = acc.scaled(fp::neg(1, p_));
        }
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    FpPolynomial term()
    {
        FpPolynomial acc = factor();
        while (accept('*')) {
            acc = acc * factor();
        }
        return acc;
    }

    FpPolynomial factor()
    {
        FpPolynomial base = atom();
        if (accept('^')) {
            base = base.power(integer());
        }
        return base;
    }

    FpPolynomial atom()
    {
        const auto n = names_.size();
        if (accept('(')) {
            auto inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const auto v = integer() % static_cast<std::uint64_t>(p_.value());
            return FpPolynomial::constant(p_, n, static_cast<std::int64_t>(v));
        }
        const auto start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            ++pos_;
        }
        const auto name = s_.substr(start, pos_ - start);
        if (name.empty()) {
            fail("expected a variable, number or '('");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (names_[i] == name) {
                return FpPolynomial::variable(p_, n, i);
            }
        }
        pos_ = start;
        fail("unknown variable '" + name + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
    Prime p_;
    const std::vector<std::string> &names_;
};

} // namespace detail

inline FpPolynomial parse_polynomial(const std::string &text, Prime p, const std::vector<std::string> &names)
{
    return detail::PolynomialParser(text, p, names).parse();
}

// Variables x1..xn; for n <= 3 the aliases x, y, z are accepted too.
inline FpPolynomial parse_polynomial(const std::string &text, Prime p, std::size_t nvars)
{
    auto names = default_variable_names(nvars);
    try {
        return parse_polynomial(text, p, names);
    } catch (const Error &) {
        if (nvars > 3) {
            throw;
        }
    }
    const std::vector<std::string> alias_pool{"x", "y", "z"};
    return parse_polynomial(text, p, std::vector<std::string>(alias_pool.begin(), alias_pool.begin() + static_cast<std::ptrdiff_t>(nvars)));
}

} // namespace motivic

#endif
