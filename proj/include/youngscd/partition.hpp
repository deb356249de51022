#pragma once

// Partitions, weak compositions, and the multiplicity bijection between
// L(m,n) (partition coordinates) and L'(m,n) (composition coordinates).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace youngscd {

/// Bounding box of L(m,n): at most m parts, each at most n.
/// A zero dimension denotes the empty lattice.
struct Shape {
    int m = 0;
    int n = 0;

    constexpr Shape() = default;
    constexpr Shape(int parts, int max_part) : m(parts), n(max_part) {
        if (parts < 0 || max_part < 0)
            throw std::invalid_argument("shape dimensions must be nonnegative");
    }

    constexpr bool degenerate() const noexcept { return m == 0 || n == 0; }
    constexpr int height() const noexcept { return m * n; }

    friend constexpr bool operator==(const Shape&, const Shape&) = default;
};

/// Non-increasing sequence of positive parts; the empty sequence is the
/// partition of 0. Trailing zeros passed to the constructor are dropped, so
/// 321 and 3210 are the same value.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw invalid_element("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw invalid_element("partition parts must be non-increasing");
        }
    }

    std::span<const int> parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// i-th part (0-based), zero past the end.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool fits(const Shape& shape) const noexcept {
        return length() <= shape.m && largest() <= shape.n;
    }

    std::vector<int> padded(int m) const {
        std::vector<int> out(parts_);
        if (static_cast<int>(out.size()) < m)
            out.resize(static_cast<std::size_t>(m), 0);
        return out;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

/// Ordered nonnegative entries of fixed length.
class WeakComposition {
  public:
    WeakComposition() = default;

    explicit WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 0)
                throw invalid_composition("weak composition entries must be nonnegative");
    }

    std::span<const int> entries() const noexcept { return entries_; }
    std::size_t length() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int total() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;
    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;

  private:
    std::vector<int> entries_;
};

namespace detail {

inline void require_fits(const Partition& a, const Shape& shape) {
    if (!a.fits(shape))
        throw invalid_element("partition does not fit in L(" + std::to_string(shape.m) + "," +
                              std::to_string(shape.n) + ")");
}

inline void require_valid(const WeakComposition& c, const Shape& shape) {
    if (c.length() != static_cast<std::size_t>(shape.n) + 1 || c.total() != shape.m)
        throw invalid_composition("composition must have " + std::to_string(shape.n + 1) +
                                  " entries summing to " + std::to_string(shape.m));
}

} // namespace detail

inline int rank(const Partition& a) noexcept { return a.size(); }

/// Entry-wise comparison after zero padding.
inline bool leq(const Partition& a, const Partition& b, const Shape& shape) {
    detail::require_fits(a, shape);
    detail::require_fits(b, shape);
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.length()); ++i)
        if (a.part(i) > b.part(i))
            return false;
    return true;
}

/// True iff `upper` is obtained from `lower` by growing exactly one part by 1.
inline bool covers(const Partition& upper, const Partition& lower, const Shape& shape) {
    detail::require_fits(upper, shape);
    detail::require_fits(lower, shape);
    int grown = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(shape.m); ++i) {
        int d = upper.part(i) - lower.part(i);
        if (d == 1)
            ++grown;
        else if (d != 0)
            return false;
    }
    return grown == 1;
}

inline Partition conjugate(const Partition& a) {
    std::vector<int> out(static_cast<std::size_t>(a.largest()), 0);
    for (int p : a.parts())
        for (int j = 0; j < p; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// Parts n - a_i of the zero-padded partition, listed in reverse.
inline Partition complement(const Partition& a, const Shape& shape) {
    detail::require_fits(a, shape);
    std::vector<int> padded = a.padded(shape.m);
    std::vector<int> out;
    out.reserve(padded.size());
    for (auto it = padded.rbegin(); it != padded.rend(); ++it)
        out.push_back(shape.n - *it);
    return Partition(std::move(out));
}

/// Entry j (0-based) counts the parts of size n - j, with zero parts
/// included up to m; entry 0 counts the largest size n, entry n counts 0.
inline WeakComposition to_multiplicity(const Partition& a, const Shape& shape) {
    detail::require_fits(a, shape);
    std::vector<int> mult(static_cast<std::size_t>(shape.n) + 1, 0);
    for (int p : a.padded(shape.m))
        ++mult[static_cast<std::size_t>(shape.n - p)];
    return WeakComposition(std::move(mult));
}

inline Partition from_multiplicity(const WeakComposition& c, const Shape& shape) {
    detail::require_valid(c, shape);
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(shape.m));
    for (std::size_t j = 0; j < c.length(); ++j)
        parts.insert(parts.end(), static_cast<std::size_t>(c[j]), shape.n - static_cast<int>(j));
    return Partition(std::move(parts));
}

/// Sum over positions of (part size) x (multiplicity).
inline int composition_rank(const WeakComposition& c, const Shape& shape) {
    detail::require_valid(c, shape);
    int r = 0;
    for (std::size_t j = 0; j < c.length(); ++j)
        r += (shape.n - static_cast<int>(j)) * c[j];
    return r;
}

/// All weak compositions of k with p parts, ascending lexicographic order.
inline std::vector<WeakComposition> enumerate_compositions(int k, int p) {
    if (k < 0 || p < 0)
        throw std::invalid_argument("enumerate_compositions: negative argument");
    std::vector<WeakComposition> out;
    if (p == 0) {
        if (k == 0)
            out.emplace_back();
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(p), 0);
    // Depth-first with the leading entry varying slowest.
    auto rec = [&](auto& self, std::size_t pos, int left) -> void {
        if (pos + 1 == cur.size()) {
            cur[pos] = left;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, k);
    return out;
}

/// Elements of L(m,n) as partitions, via the composition enumeration.
inline std::vector<Partition> enumerate_partitions(const Shape& shape) {
    std::vector<Partition> out;
    if (shape.degenerate())
        return out;
    for (const auto& c : enumerate_compositions(shape.m, shape.n + 1))
        out.push_back(from_multiplicity(c, shape));
    return out;
}

// ---------------------------------------------------------------------------
// Text forms. Digit strings are used when every value is at most 9, bracketed
// comma lists otherwise; parsers accept both.

namespace detail {

inline std::string join_values(std::span<const int> values, bool digits) {
    std::string s;
    if (digits) {
        for (int v : values)
            s.push_back(static_cast<char>('0' + v));
        return s;
    }
    s.push_back('[');
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s.push_back(',');
        s += std::to_string(values[i]);
    }
    s.push_back(']');
    return s;
}

inline std::vector<int> parse_values(std::string_view s) {
    std::vector<int> out;
    if (s.empty())
        throw std::invalid_argument("empty value list");
    if (s.front() == '[') {
        if (s.back() != ']')
            throw std::invalid_argument("unterminated bracketed list: " + std::string(s));
        std::string_view body = s.substr(1, s.size() - 2);
        if (body.empty())
            return out;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string_view tok = body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                throw std::invalid_argument("bad list entry in " + std::string(s));
            out.push_back(std::stoi(std::string(tok)));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        return out;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad digit string: " + std::string(s));
        out.push_back(ch - '0');
    }
    return out;
}

} // namespace detail

/// Canonical element key. The format depends only on the total, so every
/// element of one L'(m,n) shares it.
inline std::string composition_key(const WeakComposition& c) {
    return detail::join_values(c.entries(), c.total() <= 9);
}

inline WeakComposition parse_composition_key(std::string_view s) {
    return WeakComposition(detail::parse_values(s));
}

/// "3211", "[12,3]" or "∅" for the empty partition.
inline std::string to_string(const Partition& a) {
    if (a.empty())
        return "∅";
    return detail::join_values(a.parts(), a.largest() <= 9);
}

inline Partition parse_partition(std::string_view s) {
    if (s == "∅" || s == "[]")
        return Partition();
    std::vector<int> parts = detail::parse_values(s);
    return Partition(std::move(parts));
}

} // namespace youngscd
