#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "poset.hpp"
#include "rootsys.hpp"
#include "scd.hpp"

namespace youngscd {

enum class LabelMode { partition, composition, young };

struct RenderSpec {
    LabelMode labels = LabelMode::partition;
    /// Empty means ColorMap::standard for the colors present.
    ColorMap colors;
    std::optional<ChainDecomposition> highlight;
    /// to_svg refuses posets taller than this.
    int max_height = 60;
};

namespace detail {

inline std::optional<Partition> partition_of(const GradedPoset& p, std::size_t i) {
    if (!p.shape())
        return std::nullopt;
    return from_multiplicity(parse_composition_key(p.key(i)), *p.shape());
}

inline std::string text_label(const GradedPoset& p, std::size_t i, LabelMode mode) {
    if (mode == LabelMode::composition)
        return p.key(i);
    auto part = partition_of(p, i);
    if (!part)
        return p.key(i);
    if (mode == LabelMode::partition)
        return to_string(*part);
    // One row of full blocks per part; DOT turns \n into a centered line break.
    if (part->empty())
        return "∅";
    std::string s;
    for (int r = 0; r < part->length(); ++r) {
        if (r)
            s += "\\n";
        for (int k = 0; k < part->part(static_cast<std::size_t>(r)); ++k)
            s += "█";
    }
    return s;
}

inline ColorMap resolve_colors(const GradedPoset& p, const RenderSpec& spec) {
    int used = 0;
    for (const Cover& c : p.covers())
        used = std::max(used, c.color);
    if (spec.colors.roots() == 0)
        return ColorMap::standard(std::max(used, p.shape() ? p.shape()->n : 0));
    if (spec.colors.roots() < used)
        throw std::invalid_argument("color map has " + std::to_string(spec.colors.roots()) +
                                    " colors but the poset uses " + std::to_string(used));
    return spec.colors;
}

inline std::string color_of(const ColorMap& cm, int color) { return color ? cm.name(color) : "black"; }

// (lower, upper) element pairs that are consecutive in some highlighted chain,
// mapped to the chain index.
inline std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>>
chain_edges(const GradedPoset& p, const ChainDecomposition& d) {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> out;
    for (std::size_t ci = 0; ci < d.chains.size(); ++ci) {
        const auto& e = d.chains[ci].elements;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            out.push_back({{p.at(e[i + 1]), p.at(e[i])}, ci});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::optional<std::size_t> chain_of_edge(
    const std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>>& edges, const Cover& c) {
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(std::make_pair(c.lower, c.upper), std::size_t{0}));
    if (it != edges.end() && it->first == std::make_pair(c.lower, c.upper))
        return it->second;
    return std::nullopt;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"')
            out += "\\\"";
        else
            out += s[i];
    }
    return out;
}

inline std::string title_of(const GradedPoset& p) {
    if (!p.shape())
        return "poset";
    return "L(" + std::to_string(p.shape()->m) + "," + std::to_string(p.shape()->n) + ")";
}

} // namespace detail

/// Graphviz digraph drawn bottom-up, one same-rank group per level. With a
/// highlight, chain edges are bold and the remaining edges dotted.
inline std::string to_dot(const GradedPoset& p, const RenderSpec& spec = {}) {
    const ColorMap colors = detail::resolve_colors(p, spec);
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> edges;
    if (spec.highlight)
        edges = detail::chain_edges(p, *spec.highlight);

    std::ostringstream os;
    os << "digraph \"" << detail::title_of(p) << "\" {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=" << (spec.labels == LabelMode::young ? "box" : "ellipse") << ", fontsize=10];\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << "  n" << i << " [label=\"" << detail::dot_escape(detail::text_label(p, i, spec.labels)) << "\"];\n";
    if (!p.empty()) {
        for (int s = 0; s <= p.height(); ++s) {
            os << "  { rank=same;";
            for (std::size_t i : p.level(s))
                os << " n" << i << ';';
            os << " }\n";
        }
    }
    for (const Cover& c : p.covers()) {
        os << "  n" << c.lower << " -> n" << c.upper << " [color=" << detail::color_of(colors, c.color);
        if (spec.highlight)
            os << (detail::chain_of_edge(edges, c) ? ", penwidth=3" : ", style=dotted");
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

/// Standalone SVG: y = height - rank, each level centered in canonical order.
/// Every element is one <circle class="node">, every cover one <line>; with a
/// highlight, each chain's edges sit in their own <g class="chain">.
inline std::string to_svg(const GradedPoset& p, const RenderSpec& spec = {}) {
    if (p.height() > spec.max_height)
        throw size_error("poset height " + std::to_string(p.height()) + " exceeds the render limit " +
                         std::to_string(spec.max_height));
    const ColorMap colors = detail::resolve_colors(p, spec);

    const int cell = 6;
    const int m = p.shape() ? p.shape()->m : 0;
    const int n = p.shape() ? p.shape()->n : 0;
    const bool young = spec.labels == LabelMode::young && p.shape();
    const int dx = young ? std::max(60, n * cell + 24) : 60;
    const int dy = young ? std::max(60, m * cell + 24) : 60;
    const int margin = 40;

    std::size_t widest = 1;
    std::vector<double> x(p.size()), y(p.size());
    if (!p.empty()) {
        std::vector<std::vector<std::size_t>> levels;
        for (int s = 0; s <= p.height(); ++s) {
            levels.push_back(p.level(s));
            widest = std::max(widest, levels.back().size());
        }
        const double cx = margin + (static_cast<double>(widest) - 1) * dx / 2.0;
        for (int s = 0; s <= p.height(); ++s) {
            const auto& lvl = levels[static_cast<std::size_t>(s)];
            for (std::size_t k = 0; k < lvl.size(); ++k) {
                x[lvl[k]] = cx + (static_cast<double>(k) - (static_cast<double>(lvl.size()) - 1) / 2.0) * dx;
                y[lvl[k]] = margin + static_cast<double>(p.height() - s) * dy;
            }
        }
    }
    const int width = 2 * margin + static_cast<int>(widest - 1) * dx;
    const int height = 2 * margin + p.height() * dy;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<title>" << detail::title_of(p) << "</title>\n";

    auto line = [&](const Cover& c, const char* extra) {
        os << "<line class=\"edge\" x1=\"" << x[c.lower] << "\" y1=\"" << y[c.lower] << "\" x2=\"" << x[c.upper]
           << "\" y2=\"" << y[c.upper] << "\" stroke=\"" << detail::color_of(colors, c.color) << "\"" << extra
           << "/>\n";
    };
    if (spec.highlight) {
        const auto edges = detail::chain_edges(p, *spec.highlight);
        std::vector<std::vector<const Cover*>> per_chain(spec.highlight->chains.size());
        os << "<g class=\"edges\">\n";
        for (const Cover& c : p.covers()) {
            if (auto ci = detail::chain_of_edge(edges, c))
                per_chain[*ci].push_back(&c);
            else
                line(c, " stroke-width=\"1\" stroke-dasharray=\"2,3\" opacity=\"0.5\"");
        }
        os << "</g>\n";
        for (std::size_t ci = 0; ci < per_chain.size(); ++ci) {
            os << "<g class=\"chain\" id=\"chain" << ci << "\">\n";
            for (const Cover* c : per_chain[ci])
                line(*c, " stroke-width=\"4\"");
            os << "</g>\n";
        }
    } else {
        os << "<g class=\"edges\">\n";
        for (const Cover& c : p.covers())
            line(c, " stroke-width=\"1.5\"");
        os << "</g>\n";
    }

    os << "<g class=\"nodes\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        os << "<circle class=\"node\" cx=\"" << x[i] << "\" cy=\"" << y[i] << "\" r=\"" << (young ? 3 : 4)
           << "\" fill=\"black\"/>\n";
        if (young) {
            // Cells of the Young diagram, left-justified rows, above-left of the node.
            const Partition part = *detail::partition_of(p, i);
            const double ox = x[i] - n * cell / 2.0, oy = y[i] - 6 - m * cell;
            os << "<g class=\"young\">";
            os << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << n * cell << "\" height=\"" << m * cell
               << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>";
            for (int r = 0; r < part.length(); ++r)
                for (int k = 0; k < part.part(static_cast<std::size_t>(r)); ++k)
                    os << "<rect x=\"" << ox + k * cell << "\" y=\"" << oy + r * cell << "\" width=\"" << cell
                       << "\" height=\"" << cell << "\" fill=\"white\" stroke=\"black\" stroke-width=\"0.7\"/>";
            os << "</g>\n";
        } else {
            os << "<text x=\"" << x[i] << "\" y=\"" << y[i] - 8 << "\">"
               << detail::xml_escape(detail::text_label(p, i, spec.labels)) << "</text>\n";
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace youngscd
