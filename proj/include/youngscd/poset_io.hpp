#pragma once

// Poset text format:
//
//   poset L(m,n) height=H count=C
//   <index> <rank> <key>          C lines, rank-major then lexicographic
//   <lower> <upper> <color>       one per cover, sorted by (lower, upper)

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"

namespace youngscd {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class Int>
Int parse_int(std::string_view s, std::size_t line, const char* what) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw parse_error(line, std::string("expected integer ") + what + ", got '" + std::string(s) + "'");
    return v;
}

// Parses "L(m,n)" or "L'(m,n)".
inline Shape parse_shape_token(std::string_view tok, std::size_t line) {
    std::string_view rest;
    if (tok.starts_with("L'("))
        rest = tok.substr(3);
    else if (tok.starts_with("L("))
        rest = tok.substr(2);
    else
        throw parse_error(line, "expected L(m,n), got '" + std::string(tok) + "'");
    if (!rest.ends_with(")"))
        throw parse_error(line, "unterminated shape '" + std::string(tok) + "'");
    rest.remove_suffix(1);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos)
        throw parse_error(line, "shape needs two dimensions");
    int m = parse_int<int>(rest.substr(0, comma), line, "m");
    int n = parse_int<int>(rest.substr(comma + 1), line, "n");
    if (m < 0 || n < 0)
        throw parse_error(line, "negative shape");
    return Shape(m, n);
}

inline std::string_view expect_field(std::string_view tok, std::string_view name, std::size_t line) {
    if (!tok.starts_with(name) || tok.size() <= name.size() || tok[name.size()] != '=')
        throw parse_error(line, "expected " + std::string(name) + "=..., got '" + std::string(tok) + "'");
    return tok.substr(name.size() + 1);
}

} // namespace detail

inline void write_poset(std::ostream& os, const GradedPoset& p) {
    if (!p.shape())
        throw std::invalid_argument("write_poset: poset has no lattice shape");
    const Shape s = *p.shape();
    os << "poset L(" << s.m << ',' << s.n << ") height=" << p.height() << " count=" << p.size() << '\n';
    for (std::size_t i = 0; i < p.size(); ++i)
        os << i << ' ' << p.rank(i) << ' ' << p.key(i) << '\n';
    for (const Cover& c : p.covers())
        os << c.lower << ' ' << c.upper << ' ' << c.color << '\n';
}

inline std::string to_text(const GradedPoset& p) {
    std::ostringstream os;
    write_poset(os, p);
    return os.str();
}

/// Reads the poset format back. Keys must be valid compositions for the
/// declared shape with consistent ranks; violations are parse errors.
inline GradedPoset read_poset(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line))
        throw parse_error(1, "empty poset file");
    ++lineno;
    auto head = detail::split_ws(line);
    if (head.size() != 4 || head[0] != "poset")
        throw parse_error(lineno, "expected 'poset L(m,n) height=H count=C'");
    const Shape shape = detail::parse_shape_token(head[1], lineno);
    const int height = detail::parse_int<int>(detail::expect_field(head[2], "height", lineno), lineno, "height");
    const auto count =
        detail::parse_int<std::size_t>(detail::expect_field(head[3], "count", lineno), lineno, "count");

    std::vector<std::string> keys;
    std::vector<int> ranks;
    keys.reserve(count);
    ranks.reserve(count);
    while (keys.size() < count) {
        if (!std::getline(is, line))
            throw parse_error(lineno + 1, "unexpected end of file: expected " + std::to_string(count) + " elements");
        ++lineno;
        auto tok = detail::split_ws(line);
        if (tok.size() != 3)
            throw parse_error(lineno, "expected '<index> <rank> <key>'");
        if (detail::parse_int<std::size_t>(tok[0], lineno, "index") != keys.size())
            throw parse_error(lineno, "element indices must be consecutive from 0");
        const int r = detail::parse_int<int>(tok[1], lineno, "rank");
        WeakComposition c;
        try {
            c = parse_composition_key(tok[2]);
            if (composition_rank(c, shape) != r)
                throw parse_error(lineno, "rank " + std::to_string(r) + " does not match key " + std::string(tok[2]));
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception& e) {
            throw parse_error(lineno, "bad element key '" + std::string(tok[2]) + "': " + e.what());
        }
        keys.emplace_back(tok[2]);
        ranks.push_back(r);
    }

    std::vector<Cover> covers;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(is, line)) {
        ++lineno;
        auto tok = detail::split_ws(line);
        if (tok.empty())
            continue;
        if (tok.size() != 3)
            throw parse_error(lineno, "expected '<lower> <upper> <color>'");
        Cover c{detail::parse_int<std::size_t>(tok[0], lineno, "lower"),
                detail::parse_int<std::size_t>(tok[1], lineno, "upper"),
                detail::parse_int<int>(tok[2], lineno, "color")};
        if (c.lower >= count || c.upper >= count)
            throw parse_error(lineno, "cover index out of range");
        if (c.color < 1 || c.color > shape.n)
            throw parse_error(lineno, "color out of range");
        if (ranks[c.upper] != ranks[c.lower] + 1)
            throw parse_error(lineno, "cover does not climb exactly one rank");
        if (!seen.insert({c.lower, c.upper}).second)
            throw parse_error(lineno, "duplicate cover");
        covers.push_back(c);
    }
    try {
        GradedPoset p(std::move(keys), std::move(ranks), std::move(covers), shape);
        if (!p.empty() && p.height() != height)
            throw parse_error(0, "declared height " + std::to_string(height) + " but elements reach " +
                                     std::to_string(p.height()));
        return p;
    } catch (const parse_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw parse_error(0, e.what());
    }
}

inline GradedPoset poset_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_poset(is);
}

} // namespace youngscd
