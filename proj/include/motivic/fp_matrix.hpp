#ifndef MOTIVIC_FP_MATRIX_HPP
#define MOTIVIC_FP_MATRIX_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <motivic/error.hpp>
#include <motivic/fp.hpp>
#include <motivic/prime.hpp>

namespace motivic
{

// Dense square matrix over F_p, row-major.
class FpMatrix
{
public:
    FpMatrix(Prime p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {}

    FpMatrix(Prime p, std::size_t n, const std::vector<std::int64_t> &entries) : FpMatrix(p, n)
    {
        if (entries.size() != n * n) {
            throw Error(ErrorCode::dimension_mismatch, "expected " + std::to_string(n * n) + " entries");
        }
        for (std::size_t k = 0; k < entries.size(); ++k) {
            a_[k] = fp::reduce(entries[k], p);
        }
    }

    static FpMatrix identity(Prime p, std::size_t n)
    {
        FpMatrix m(p, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    Prime prime() const noexcept
    {
        return p_;
    }

    std::size_t dim() const noexcept
    {
        return n_;
    }

    fp::Residue &operator()(std::size_t r, std::size_t c)
    {
        return a_[r * n_ + c];
    }

    fp::Residue operator()(std::size_t r, std::size_t c) const
    {
        return a_[r * n_ + c];
    }

    bool is_zero() const noexcept
    {
        for (auto v : a_) {
            if (v != 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const FpMatrix &a, const FpMatrix &b)
    {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.a_ == b.a_;
    }

    friend FpMatrix operator+(const FpMatrix &a, const FpMatrix &b)
    {
        check_compatible(a, b);
        FpMatrix r(a.p_, a.n_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) {
            r.a_[k] = fp::add(a.a_[k], b.a_[k], a.p_);
        }
        return r;
    }

    friend FpMatrix operator-(const FpMatrix &a, const FpMatrix &b)
    {
        check_compatible(a, b);
        FpMatrix r(a.p_, a.n_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) {
            r.a_[k] = fp::sub(a.a_[k], b.a_[k], a.p_);
        }
        return r;
    }

    friend FpMatrix operator*(const FpMatrix &a, const FpMatrix &b)
    {
        check_compatible(a, b);
        const auto n = a.n_;
        FpMatrix r(a.p_, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto aik = a(i, k);
                if (aik == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    r(i, j) = fp::add(r(i, j), fp::mul(aik, b(k, j), a.p_), a.p_);
                }
            }
        }
        return r;
    }

    FpMatrix scaled(fp::Residue c) const
    {
        FpMatrix r(p_, n_);
        for (std::size_t k = 0; k < a_.size(); ++k) {
            r.a_[k] = fp::mul(a_[k], c, p_);
        }
        return r;
    }

    FpMatrix power(std::uint64_t e) const
    {
        FpMatrix r = identity(p_, n_);
        FpMatrix b = *this;
        while (e != 0) {
            if (e & 1u) {
                r = r * b;
            }
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    // Rank by Gaussian elimination.
    std::size_t rank() const
    {
        FpMatrix m = *this;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < n_ && rank < n_; ++c) {
            std::size_t piv = rank;
            while (piv < n_ && m(piv, c) == 0) {
                ++piv;
            }
            if (piv == n_) {
                continue;
            }
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(m(piv, j), m(rank, j));
            }
            const auto iv = fp::inv(m(rank, c), p_);
            for (std::size_t r = rank + 1; r < n_; ++r) {
                const auto f = fp::mul(m(r, c), iv, p_);
                if (f == 0) {
                    continue;
                }
                for (std::size_t j = c; j < n_; ++j) {
                    m(r, j) = fp::sub(m(r, j), fp::mul(f, m(rank, j), p_), p_);
                }
            }
            ++rank;
        }
        return rank;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < n_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < n_; ++j) {
                os << (j ? "," : "") << (*this)(i, j);
            }
            os << ']';
        }
        os << ']';
        return os.str();
    }

    std::vector<std::vector<fp::Residue>> rows() const
    {
        std::vector<std::vector<fp::Residue>> out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
        }
        return out;
    }

private:
    static void check_compatible(const FpMatrix &a, const FpMatrix &b)
    {
        if (!(a.p_ == b.p_) || a.n_ != b.n_) {
            throw Error(ErrorCode::dimension_mismatch, "incompatible matrices");
        }
    }

    Prime p_;
    std::size_t n_;
    std::vector<fp::Residue> a_;
};

inline FpMatrix direct_sum(const FpMatrix &a, const FpMatrix &b)
{
    if (!(a.prime() == b.prime())) {
        throw Error(ErrorCode::dimension_mismatch, "direct sum over different primes");
    }
    const auto n = a.dim() + b.dim();
    FpMatrix r(a.prime(), n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            r(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            r(a.dim() + i, a.dim() + j) = b(i, j);
        }
    }
    return r;
}

} // namespace motivic

#endif
