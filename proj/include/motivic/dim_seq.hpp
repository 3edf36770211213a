#ifndef MOTIVIC_DIM_SEQ_HPP
#define MOTIVIC_DIM_SEQ_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <motivic/error.hpp>
#include <motivic/prime.hpp>

namespace motivic
{

// Block sizes (d_1 >= d_2 >= ... >= d_l), each in [1, p]. Classifies both
// the alpha_p- and the Z/pZ-representation with those indecomposable summands.
class DimSeq
{
public:
    DimSeq(std::vector<int> entries, Prime p) : entries_(std::move(entries)), p_(p)
    {
        if (entries_.empty()) {
            throw Error(ErrorCode::invalid_argument, "dimension sequence must be nonempty");
        }
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            const int d = entries_[k];
            if (d < 1 || d > p.value()) {
                throw Error(ErrorCode::invalid_argument,
                            "entry " + std::to_string(d) + " outside [1, " + std::to_string(p.value()) + "]");
            }
            if (k > 0 && d > entries_[k - 1]) {
                throw Error(ErrorCode::invalid_argument, "dimension sequence must be nonincreasing");
            }
        }
    }

    // Parses "3" or "2,2,1".
    static DimSeq parse(const std::string &text, Prime p)
    {
        std::vector<int> out;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception &) {
                throw Error(ErrorCode::parse_error, "bad dimension entry '" + tok + "'");
            }
            if (used != tok.size()) {
                throw Error(ErrorCode::parse_error, "bad dimension entry '" + tok + "'");
            }
            out.push_back(v);
        }
        return DimSeq(std::move(out), p);
    }

    const std::vector<int> &entries() const noexcept
    {
        return entries_;
    }

    Prime prime() const noexcept
    {
        return p_;
    }

    std::int64_t length() const noexcept
    {
        return static_cast<std::int64_t>(entries_.size());
    }

    std::int64_t total() const noexcept
    {
        return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
    }

    // D_d = sum (d - 1) d / 2
    std::int64_t d_invariant() const noexcept
    {
        std::int64_t s = 0;
        for (int d : entries_) {
            s += std::int64_t{d} * (d - 1) / 2;
        }
        return s;
    }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            s += (k ? "," : "") + std::to_string(entries_[k]);
        }
        return s;
    }

    friend bool operator==(const DimSeq &, const DimSeq &) = default;

private:
    std::vector<int> entries_;
    Prime p_;
};

// All valid sequences with |d| <= max_total.
inline std::vector<DimSeq> enumerate_dim_seqs(Prime p, int max_total)
{
    std::vector<DimSeq> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int remaining, int cap) -> void {
        if (!cur.empty()) {
            out.emplace_back(cur, p);
        }
        for (int d = std::min<std::int64_t>(cap, p.value()); d >= 1; --d) {
            if (d <= remaining) {
                cur.push_back(d);
                self(self, remaining - d, d);
                cur.pop_back();
            }
        }
    };
    rec(rec, max_total, max_total);
    return out;
}

} // namespace motivic

#endif
