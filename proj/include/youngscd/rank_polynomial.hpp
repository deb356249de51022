#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "partition.hpp"

namespace youngscd {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with exact integer coefficients; index k holds the
/// coefficient of q^k. Rank polynomials have nonnegative coefficients, but
/// intermediate products during division may not.
class RankPolynomial {
  public:
    RankPolynomial() = default;
    explicit RankPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {}

    template <class Int>
        requires std::is_integral_v<Int>
    static RankPolynomial from(const std::vector<Int>& values) {
        std::vector<BigInt> c(values.begin(), values.end());
        return RankPolynomial(std::move(c));
    }

    const std::vector<BigInt>& coefficients() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    bool empty() const noexcept { return c_.empty(); }
    const BigInt& operator[](std::size_t k) const { return c_.at(k); }

    /// Coefficient of q^k, zero outside the stored range.
    BigInt coefficient(long k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size())
            return 0;
        return c_[static_cast<std::size_t>(k)];
    }

    BigInt sum() const {
        BigInt s = 0;
        for (const auto& x : c_)
            s += x;
        return s;
    }

    bool is_symmetric() const {
        return std::equal(c_.begin(), c_.begin() + static_cast<long>(c_.size() / 2), c_.rbegin());
    }

    /// Weakly increasing, then weakly decreasing.
    bool is_unimodal() const {
        std::size_t i = 1;
        while (i < c_.size() && c_[i] >= c_[i - 1])
            ++i;
        while (i < c_.size() && c_[i] <= c_[i - 1])
            ++i;
        return i >= c_.size();
    }

    /// Multiply by q^k.
    RankPolynomial shifted(std::size_t k) const {
        std::vector<BigInt> c(k, BigInt(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return RankPolynomial(std::move(c)).trimmed();
    }

    /// Drops trailing zero coefficients.
    RankPolynomial trimmed() const {
        std::vector<BigInt> c(c_);
        while (!c.empty() && c.back() == 0)
            c.pop_back();
        return RankPolynomial(std::move(c));
    }

    friend RankPolynomial operator+(const RankPolynomial& a, const RankPolynomial& b) {
        std::vector<BigInt> c(std::max(a.size(), b.size()), BigInt(0));
        for (std::size_t k = 0; k < a.size(); ++k)
            c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.size(); ++k)
            c[k] += b.c_[k];
        return RankPolynomial(std::move(c)).trimmed();
    }

    /// Equality ignores trailing zeros.
    friend bool operator==(const RankPolynomial& a, const RankPolynomial& b) {
        std::size_t n = std::max(a.size(), b.size());
        for (std::size_t k = 0; k < n; ++k)
            if (a.coefficient(static_cast<long>(k)) != b.coefficient(static_cast<long>(k)))
                return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k)
                s += ' ';
            s += c_[k].str();
        }
        return s;
    }

  private:
    std::vector<BigInt> c_;
};

namespace detail {

// p *= (1 - q^j)
inline void multiply_one_minus(std::vector<BigInt>& p, std::size_t j) {
    p.resize(p.size() + j, BigInt(0));
    for (std::size_t k = p.size(); k-- > j;)
        p[k] -= p[k - j];
}

// p /= (1 - q^j); throws if the division leaves a remainder.
inline void divide_one_minus(std::vector<BigInt>& p, std::size_t j) {
    if (p.size() < j)
        throw std::logic_error("q-binomial: inexact division");
    std::vector<BigInt> quot(p.size() - j, BigInt(0));
    for (std::size_t k = 0; k < quot.size(); ++k)
        quot[k] = p[k] + (k >= j ? quot[k - j] : BigInt(0));
    // Remainder terms: p[k] + quot[k-j] must vanish for the top j degrees.
    for (std::size_t k = quot.size(); k < p.size(); ++k) {
        BigInt carry = k >= j && k - j < quot.size() ? quot[k - j] : BigInt(0);
        if (p[k] + carry != 0)
            throw std::logic_error("q-binomial: inexact division");
    }
    p = std::move(quot);
}

} // namespace detail

/// Coefficients of the Gaussian binomial [m+n choose m]_q, computed as
/// prod_{i=1..m}(1 - q^{n+i}) divided exactly by prod_{i=1..m}(1 - q^i).
/// The coefficient of q^k counts the elements of rank k in L(m,n).
inline RankPolynomial gaussian_binomial(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("gaussian_binomial: negative argument");
    std::vector<BigInt> p{BigInt(1)};
    for (int i = 1; i <= m; ++i)
        detail::multiply_one_minus(p, static_cast<std::size_t>(n + i));
    for (int i = 1; i <= m; ++i)
        detail::divide_one_minus(p, static_cast<std::size_t>(i));
    return RankPolynomial(std::move(p)).trimmed();
}

/// Outcome of checking both Pascal-type recurrences for [m+n choose m]_q,
/// algebraically and through the partition bijections they encode.
struct SplittingReport {
    int m = 0;
    int n = 0;
    /// [m+n,m] = q^n [m+n-1,m-1] + [m+n-1,m]
    bool largest_part_identity = false;
    /// [m+n,m] = [m+n-1,m-1] + q^m [m+n-1,m]
    bool part_count_identity = false;

    // Elements with a part equal to n (delete it: L(m-1,n), rank -n) versus
    // those without (already in L(m,n-1)).
    std::size_t with_largest_part = 0;
    std::size_t without_largest_part = 0;
    bool largest_part_bijection = false;

    // Elements with exactly m parts (subtract 1 from each: L(m,n-1), rank -m)
    // versus those with fewer (already in L(m-1,n)).
    std::size_t with_m_parts = 0;
    std::size_t fewer_parts = 0;
    bool part_count_bijection = false;

    bool ok() const noexcept {
        return largest_part_identity && part_count_identity && largest_part_bijection &&
               part_count_bijection;
    }
};

namespace detail {

// Checks that `images` are distinct, all lie in the box (m,n) at the expected
// ranks, and exhaust it (by cardinality against the q-binomial).
inline bool is_bijection_onto_box(const std::vector<std::pair<Partition, int>>& images, int m, int n) {
    Shape box(m, n);
    std::set<Partition> seen;
    RankPolynomial expected = gaussian_binomial(m, n);
    std::vector<BigInt> counts(expected.size(), BigInt(0));
    for (const auto& [p, r] : images) {
        if (!p.fits(box) || rank(p) != r || !seen.insert(p).second)
            return false;
        if (static_cast<std::size_t>(r) >= counts.size())
            return false;
        counts[static_cast<std::size_t>(r)] += 1;
    }
    return RankPolynomial(std::move(counts)) == expected;
}

} // namespace detail

inline SplittingReport check_splitting_identities(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("check_splitting_identities: requires m,n >= 1");
    SplittingReport rep;
    rep.m = m;
    rep.n = n;

    const RankPolynomial whole = gaussian_binomial(m, n);
    const RankPolynomial fewer = gaussian_binomial(m - 1, n);  // [m+n-1, m-1]
    const RankPolynomial narrower = gaussian_binomial(m, n - 1); // [m+n-1, m]
    rep.largest_part_identity = whole == fewer.shifted(static_cast<std::size_t>(n)) + narrower;
    rep.part_count_identity = whole == fewer + narrower.shifted(static_cast<std::size_t>(m));

    const Shape shape(m, n);
    std::vector<std::pair<Partition, int>> deleted, kept, shrunk, short_ones;
    for (const Partition& p : enumerate_partitions(shape)) {
        const int r = rank(p);
        if (p.largest() == n) {
            std::vector<int> rest(p.parts().begin() + 1, p.parts().end());
            deleted.emplace_back(Partition(std::move(rest)), r - n);
        } else {
            kept.emplace_back(p, r);
        }
        if (p.length() == m) {
            std::vector<int> less(p.parts().begin(), p.parts().end());
            for (int& x : less)
                --x;
            shrunk.emplace_back(Partition(std::move(less)), r - m);
        } else {
            short_ones.emplace_back(p, r);
        }
    }
    rep.with_largest_part = deleted.size();
    rep.without_largest_part = kept.size();
    rep.largest_part_bijection =
        detail::is_bijection_onto_box(deleted, m - 1, n) && detail::is_bijection_onto_box(kept, m, n - 1);
    rep.with_m_parts = shrunk.size();
    rep.fewer_parts = short_ones.size();
    rep.part_count_bijection =
        detail::is_bijection_onto_box(shrunk, m, n - 1) && detail::is_bijection_onto_box(short_ones, m - 1, n);
    return rep;
}

} // namespace youngscd
