#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "poset.hpp"

namespace youngscd {

/// Saturated chain, stored from the highest element down.
struct Chain {
    std::vector<std::string> elements;

    bool empty() const noexcept { return elements.empty(); }
    std::size_t size() const noexcept { return elements.size(); }
    /// Number of coverings.
    std::size_t length() const noexcept { return elements.empty() ? 0 : elements.size() - 1; }
    const std::string& top() const { return elements.front(); }
    const std::string& bottom() const { return elements.back(); }

    friend bool operator==(const Chain&, const Chain&) = default;
};

struct ChainDecomposition {
    std::optional<Shape> shape;
    std::vector<Chain> chains;

    friend bool operator==(const ChainDecomposition&, const ChainDecomposition&) = default;
};

/// Orders chains by (bottom rank, bottom position in the poset), which for
/// lattices is (bottom rank, lexicographic bottom key).
inline void canonicalize(ChainDecomposition& d, const GradedPoset& p) {
    std::stable_sort(d.chains.begin(), d.chains.end(), [&](const Chain& a, const Chain& b) {
        const std::size_t ia = p.at(a.bottom()), ib = p.at(b.bottom());
        return p.rank(ia) != p.rank(ib) ? p.rank(ia) < p.rank(ib) : ia < ib;
    });
}

/// True iff the chain is saturated in p and its end ranks sum to the height.
/// Throws unknown_element if a key is not in p.
inline bool is_symmetric_chain(const Chain& c, const GradedPoset& p) {
    if (c.empty())
        return false;
    std::vector<std::size_t> idx;
    idx.reserve(c.size());
    for (const auto& k : c.elements)
        idx.push_back(p.at(k));
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (!p.is_cover(idx[i], idx[i + 1]))
            return false;
    return p.rank(idx.front()) + p.rank(idx.back()) == p.height();
}

/// Defects found by verify_scd. The decomposition is valid iff every list is
/// empty.
struct VerifyReport {
    std::size_t element_count = 0;
    std::size_t chain_count = 0;
    bool shape_mismatch = false;
    std::vector<std::string> missing;
    std::vector<std::string> duplicated;
    std::vector<std::string> unknown;
    std::vector<std::size_t> non_saturated;
    std::vector<std::size_t> non_symmetric;
    /// start_profile[s] = number of chains whose bottom has rank s, s <= height/2.
    std::vector<std::size_t> start_profile;

    bool passed() const noexcept {
        return !shape_mismatch && missing.empty() && duplicated.empty() && unknown.empty() &&
               non_saturated.empty() && non_symmetric.empty();
    }

    std::string to_text() const {
        std::ostringstream os;
        auto list = [&os](const char* label, const auto& items) {
            os << label << ": " << items.size();
            for (const auto& x : items)
                os << ' ' << x;
            os << '\n';
        };
        os << "verdict: " << (passed() ? "pass" : "fail") << '\n';
        os << "elements: " << element_count << " chains: " << chain_count << '\n';
        if (shape_mismatch)
            os << "shape mismatch between poset and decomposition\n";
        list("missing", missing);
        list("duplicated", duplicated);
        list("unknown", unknown);
        list("non-saturated chains", non_saturated);
        list("non-symmetric chains", non_symmetric);
        os << "start profile:";
        for (std::size_t s = 0; s < start_profile.size(); ++s)
            if (start_profile[s])
                os << ' ' << s << ':' << start_profile[s];
        os << '\n';
        return os.str();
    }
};

inline VerifyReport verify_scd(const ChainDecomposition& d, const GradedPoset& p) {
    VerifyReport rep;
    rep.element_count = p.size();
    rep.chain_count = d.chains.size();
    rep.shape_mismatch = d.shape && p.shape() && !(*d.shape == *p.shape());
    rep.start_profile.assign(static_cast<std::size_t>(p.height() / 2) + 1, 0);

    std::vector<int> hits(p.size(), 0);
    for (std::size_t ci = 0; ci < d.chains.size(); ++ci) {
        const Chain& c = d.chains[ci];
        bool known = !c.empty();
        for (const auto& k : c.elements) {
            if (auto i = p.find(k)) {
                if (++hits[*i] == 2)
                    rep.duplicated.push_back(k);
            } else {
                rep.unknown.push_back(k);
                known = false;
            }
        }
        if (!known) {
            rep.non_saturated.push_back(ci);
            continue;
        }
        bool saturated = true;
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (!p.is_cover(p.at(c.elements[i]), p.at(c.elements[i + 1])))
                saturated = false;
        if (!saturated)
            rep.non_saturated.push_back(ci);
        const int top = p.rank(p.at(c.top())), bottom = p.rank(p.at(c.bottom()));
        if (top + bottom != p.height())
            rep.non_symmetric.push_back(ci);
        if (2 * bottom <= p.height())
            ++rep.start_profile[static_cast<std::size_t>(bottom)];
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        if (hits[i] == 0)
            rep.missing.push_back(p.key(i));
    return rep;
}

namespace detail {

using RawChain = std::vector<std::vector<int>>;

inline ChainDecomposition make_decomposition(const Shape& shape, const std::vector<RawChain>& raw) {
    struct Entry {
        int bottom_rank;
        std::vector<int> bottom;
        Chain chain;
    };
    std::vector<Entry> entries;
    entries.reserve(raw.size());
    for (const RawChain& rc : raw) {
        Chain c;
        for (const auto& v : rc)
            c.elements.push_back(composition_key(WeakComposition(v)));
        WeakComposition b(rc.back());
        entries.push_back({composition_rank(b, shape), rc.back(), std::move(c)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.bottom_rank != b.bottom_rank ? a.bottom_rank < b.bottom_rank : a.bottom < b.bottom;
    });
    ChainDecomposition d;
    d.shape = shape;
    for (auto& e : entries)
        d.chains.push_back(std::move(e.chain));
    return d;
}

// L(m,2) in multiplicity coordinates (twos, ones, zeros). Each chain starts
// at (m-2k, 2k, 0) and alternates green (a 2 becomes a 1) and red (a 1 is
// removed), so it sweeps the band of elements with 2k or 2k+1 ones.
inline std::vector<RawChain> alternating_n2(int m) {
    std::vector<RawChain> out;
    for (int k = 0; 2 * k <= m; ++k) {
        std::vector<int> cur{m - 2 * k, 2 * k, 0};
        RawChain c{cur};
        while (cur[0] > 0) {
            --cur[0], ++cur[1];
            c.push_back(cur);
            --cur[1], ++cur[2];
            c.push_back(cur);
        }
        out.push_back(std::move(c));
    }
    return out;
}

// --- Lindström's construction for L'(m,3) ----------------------------------
//
// Elements of L'(m,3) are (a,b,c,d): the multiplicities of parts 3,2,1,0 in a
// partition with m parts. The routing below is easier to state in column
// heights of the Young diagram, h1 >= h2 >= h3 with
//   h1 = m - d,  h2 = m - d - c,  h3 = a,
// where green lowers h3, red lowers h2, blue lowers h1, and rank = h1+h2+h3.
// The faces d = 0 and a = 0 are h1 = m and h3 = 0; adding one to a and d
// adds one to every column.

using Columns = std::array<int, 3>;
using ColumnChain = std::vector<Columns>;

inline std::vector<int> to_composition(const Columns& h, int m) {
    return {h[2], h[1] - h[2], h[0] - h[1], m - h[0]};
}

// Outer shell of L'(m,3) for odd m: the elements with a = 0 or d = 0.
// Chain k (0 <= k <= (m-1)/2) starts at (m-2k, 2k, 0, 0), alternates
// green/red down the d = 0 face until a = 0, takes one blue step off the
// shared edge, then k red/blue pairs, then blue steps to rank 2k.
inline std::vector<ColumnChain> odd_shell(int m) {
    std::vector<ColumnChain> out;
    for (int k = 0; 2 * k + 1 <= m; ++k) {
        Columns h{m, m, m - 2 * k};
        ColumnChain c{h};
        for (int i = 0; i < m - 2 * k; ++i) {
            --h[2];
            c.push_back(h);
            --h[1];
            c.push_back(h);
        }
        --h[0];
        c.push_back(h);
        for (int i = 0; i < k; ++i) {
            --h[1];
            c.push_back(h);
            --h[0];
            c.push_back(h);
        }
        while (h[0] > h[1]) {
            --h[0];
            c.push_back(h);
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Two outer layers of L'(m,3) for even m >= 2: the elements with a <= 1 or
// d <= 1.
//
//  * The red chain is the full alpha_2 string on the edge a = d = 0.
//  * Outer chain k (0 <= k < m/2) starts at (m-2k, 2k, 0, 0) and alternates
//    green/red down the d = 0 face, stopping one step above the red chain;
//    it then steps blue into the d = 1 layer and follows chain k of the odd
//    shell of L'(m-1,3) from that point on.
//  * Inner chain k (k < m/2 - 1) is the part of that odd-shell chain above
//    the splice point, finished in the a = 1 layer by k+1 red/blue pairs and
//    a blue run.
inline std::vector<ColumnChain> even_shell(int m) {
    const int t = m / 2;
    const std::vector<ColumnChain> inner_shell = odd_shell(m - 1);
    std::vector<ColumnChain> out;

    ColumnChain red;
    for (int j = 0; j <= m; ++j)
        red.push_back({m, m - j, 0});
    out.push_back(std::move(red));

    for (int k = 0; k < t; ++k) {
        Columns h{m, m, m - 2 * k};
        ColumnChain outer{h};
        while (h[2] > 1) {
            --h[2];
            outer.push_back(h);
            --h[1];
            outer.push_back(h);
        }
        const ColumnChain& w = inner_shell[static_cast<std::size_t>(k)];
        const Columns splice{m - 1, 2 * k + 1, 1};
        const auto at = std::find(w.begin(), w.end(), splice);
        if (at == w.end())
            throw std::logic_error("even_shell: splice point missing");
        outer.insert(outer.end(), at, w.end());
        out.push_back(std::move(outer));

        if (k + 2 <= t) {
            ColumnChain inner(w.begin(), at);
            Columns g{m - 2, 2 * k + 2, 1};
            inner.push_back(g);
            for (int i = 0; i <= k; ++i) {
                --g[1];
                inner.push_back(g);
                --g[0];
                inner.push_back(g);
            }
            while (g[0] > g[1]) {
                --g[0];
                inner.push_back(g);
            }
            out.push_back(std::move(inner));
        }
    }
    return out;
}

inline RawChain embed(const RawChain& c, int shift) {
    RawChain out;
    out.reserve(c.size());
    for (auto v : c) {
        v.front() += shift;
        v.back() += shift;
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<RawChain> lindstrom_raw(int m) {
    if (m == 0)
        return {RawChain{{0, 0, 0, 0}}};
    if (m == 1)
        return {RawChain{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    if (m == 2) {
        // Conjugate of the alternating decomposition of L(3,2).
        std::vector<RawChain> out;
        const Shape l32(3, 2), l23(2, 3);
        for (const RawChain& c : alternating_n2(3)) {
            RawChain conj;
            for (const auto& v : c) {
                const WeakComposition w = to_multiplicity(conjugate(from_multiplicity(WeakComposition(v), l32)), l23);
                conj.emplace_back(w.entries().begin(), w.entries().end());
            }
            out.push_back(std::move(conj));
        }
        return out;
    }
    const int step = m % 2 ? 2 : 4;
    const int shift = step / 2;
    std::vector<RawChain> out;
    for (const RawChain& c : lindstrom_raw(m - step))
        out.push_back(embed(c, shift));
    for (const ColumnChain& cc : m % 2 ? odd_shell(m) : even_shell(m)) {
        RawChain c;
        c.reserve(cc.size());
        for (const Columns& h : cc)
            c.push_back(to_composition(h, m));
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace detail

/// Symmetric chain decomposition of L(m,2), keyed in composition form.
inline ChainDecomposition scd_n2(int m) {
    if (m < 1)
        throw std::invalid_argument("scd_n2: m must be positive");
    return detail::make_decomposition(Shape(m, 2), detail::alternating_n2(m));
}

/// Lindström's decomposition of L'(2t+1,3): L'(2t-1,3) embedded by
/// abcd -> (a+1)bc(d+1) plus chains on the faces a = 0 and d = 0.
inline ChainDecomposition lindstrom_odd(int t) {
    if (t < 0)
        throw std::invalid_argument("lindstrom_odd: t must be nonnegative");
    return detail::make_decomposition(Shape(2 * t + 1, 3), detail::lindstrom_raw(2 * t + 1));
}

/// Lindström's decomposition of L'(2t,3): L'(2t-4,3) embedded by
/// abcd -> (a+2)bc(d+2) plus chains on the two outer layers.
inline ChainDecomposition lindstrom_even(int t) {
    if (t < 1)
        throw std::invalid_argument("lindstrom_even: t must be positive");
    return detail::make_decomposition(Shape(2 * t, 3), detail::lindstrom_raw(2 * t));
}

inline ChainDecomposition lindstrom(int m) {
    if (m < 1)
        throw std::invalid_argument("lindstrom: m must be positive");
    return m % 2 ? lindstrom_odd((m - 1) / 2) : lindstrom_even(m / 2);
}

// --- brute force -------------------------------------------------------------

struct BruteForceResult {
    enum class Status { found, not_found, budget_exhausted };

    Status status = Status::not_found;
    std::optional<ChainDecomposition> decomposition;
    std::uint64_t nodes = 0;
};

inline const char* to_string(BruteForceResult::Status s) {
    switch (s) {
    case BruteForceResult::Status::found:
        return "found";
    case BruteForceResult::Status::not_found:
        return "not-found";
    case BruteForceResult::Status::budget_exhausted:
        return "budget-exhausted";
    }
    return "?";
}

namespace detail {

// Builds chains bottom-up one rank at a time. At rank s every chain whose
// forced top (height - bottom) is at least s must be extended by a distinct
// element covering its current top; the unused elements of rank s open new
// chains, which is only allowed while 2s <= height.
class ScdSearch {
  public:
    ScdSearch(const GradedPoset& p, std::uint64_t budget) : p_(p), budget_(budget), used_(p.size(), false) {
        levels_.resize(static_cast<std::size_t>(p.height()) + 1);
        for (std::size_t i = 0; i < p.size(); ++i)
            levels_[static_cast<std::size_t>(p.rank(i))].push_back(i);
    }

    BruteForceResult run() {
        BruteForceResult res;
        bool ok = !p_.empty() && level(0);
        res.nodes = nodes_;
        if (exhausted_) {
            res.status = BruteForceResult::Status::budget_exhausted;
        } else if (ok) {
            res.status = BruteForceResult::Status::found;
            ChainDecomposition d;
            d.shape = p_.shape();
            for (const auto& c : chains_) {
                Chain out;
                for (auto it = c.rbegin(); it != c.rend(); ++it)
                    out.elements.push_back(p_.key(*it));
                d.chains.push_back(std::move(out));
            }
            canonicalize(d, p_);
            res.decomposition = std::move(d);
        }
        return res;
    }

  private:
    bool level(int s) {
        if (s > p_.height())
            return true;
        open_.clear();
        for (std::size_t c = 0; c < chains_.size(); ++c)
            if (p_.height() - bottom_rank(c) >= s)
                open_.push_back(c);
        const auto& lvl = levels_[static_cast<std::size_t>(s)];
        if (open_.size() > lvl.size())
            return false;
        if (2 * s > p_.height() && open_.size() != lvl.size())
            return false;
        std::vector<std::size_t> open = open_;
        return extend(s, open, 0);
    }

    bool extend(int s, const std::vector<std::size_t>& open, std::size_t i) {
        if (exhausted_)
            return false;
        if (i == open.size())
            return open_new(s);
        std::vector<std::size_t>& chain = chains_[open[i]];
        const std::size_t top = chain.back();
        for (std::size_t cand : p_.upper_covers(top)) {
            if (used_[cand])
                continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            used_[cand] = true;
            chain.push_back(cand);
            if (extend(s, open, i + 1))
                return true;
            chain.pop_back();
            used_[cand] = false;
            if (exhausted_)
                return false;
        }
        return false;
    }

    bool open_new(int s) {
        const auto& lvl = levels_[static_cast<std::size_t>(s)];
        std::vector<std::size_t> fresh;
        for (std::size_t e : lvl)
            if (!used_[e])
                fresh.push_back(e);
        if (!fresh.empty() && 2 * s > p_.height())
            return false;
        for (std::size_t e : fresh) {
            used_[e] = true;
            chains_.push_back({e});
        }
        if (level(s + 1))
            return true;
        for (std::size_t e : fresh) {
            used_[e] = false;
            chains_.pop_back();
        }
        return false;
    }

    int bottom_rank(std::size_t c) const { return p_.rank(chains_[c].front()); }

    const GradedPoset& p_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<bool> used_;
    std::vector<std::vector<std::size_t>> levels_;
    std::vector<std::vector<std::size_t>> chains_; // bottom-up element indices
    std::vector<std::size_t> open_;
};

} // namespace detail

inline constexpr std::uint64_t default_search_budget = 100'000'000;

/// Backtracking search for a symmetric chain decomposition of any graded
/// poset. Deterministic for a fixed element order. Budget exhaustion is
/// reported separately from a completed search that found nothing.
inline BruteForceResult brute_force_scd(const GradedPoset& p, std::uint64_t budget = default_search_budget) {
    return detail::ScdSearch(p, budget).run();
}

} // namespace youngscd
