#pragma once

// Decomposition text format:
//
//   scd L'(m,n) chains=K
//   <key> <key> ...               K lines, one chain each, top-down

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "poset_io.hpp"
#include "scd.hpp"

namespace youngscd {

inline void write_decomposition(std::ostream& os, const ChainDecomposition& d) {
    if (!d.shape)
        throw std::invalid_argument("write_decomposition: decomposition has no lattice shape");
    os << "scd L'(" << d.shape->m << ',' << d.shape->n << ") chains=" << d.chains.size() << '\n';
    for (const Chain& c : d.chains) {
        for (std::size_t i = 0; i < c.size(); ++i)
            os << (i ? " " : "") << c.elements[i];
        os << '\n';
    }
}

inline std::string to_text(const ChainDecomposition& d) {
    std::ostringstream os;
    write_decomposition(os, d);
    return os.str();
}

/// Keys are kept verbatim; membership is the verifier's business.
inline ChainDecomposition read_decomposition(std::istream& is) {
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(is, line))
        throw parse_error(1, "empty decomposition file");
    auto head = detail::split_ws(line);
    if (head.size() != 3 || head[0] != "scd")
        throw parse_error(lineno, "expected 'scd L'(m,n) chains=K'");
    ChainDecomposition d;
    d.shape = detail::parse_shape_token(head[1], lineno);
    const auto count =
        detail::parse_int<std::size_t>(detail::expect_field(head[2], "chains", lineno), lineno, "chains");
    while (std::getline(is, line)) {
        ++lineno;
        auto tok = detail::split_ws(line);
        if (tok.empty()) {
            if (d.chains.size() < count)
                throw parse_error(lineno, "empty chain");
            continue;
        }
        if (d.chains.size() == count)
            throw parse_error(lineno, "more chains than declared");
        Chain c;
        for (auto t : tok)
            c.elements.emplace_back(t);
        d.chains.push_back(std::move(c));
    }
    if (d.chains.size() != count)
        throw parse_error(lineno + 1, "expected " + std::to_string(count) + " chains, found " +
                                          std::to_string(d.chains.size()));
    return d;
}

inline ChainDecomposition decomposition_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_decomposition(is);
}

} // namespace youngscd
