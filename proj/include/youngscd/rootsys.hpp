#pragma once

// Type A_n simple roots acting on L'(m,n), viewed as the weight diagram of
// highest weight m*e_1 (the lattice points of the dilated n-simplex, in
// translated nonnegative coordinates).

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <iterator>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace youngscd {

/// alpha_index = e_index - e_{index+1} in R^{n+1}; index is 1-based.
struct SimpleRoot {
    int index = 1;
    int n = 1;

    std::vector<int> vector() const {
        std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
        v[static_cast<std::size_t>(index - 1)] = 1;
        v[static_cast<std::size_t>(index)] = -1;
        return v;
    }
};

inline std::vector<SimpleRoot> simple_roots(int n) {
    std::vector<SimpleRoot> out;
    for (int i = 1; i <= n; ++i)
        out.push_back({i, n});
    return out;
}

/// Root index -> color name. Defaults to green, red, blue for alpha_1..3,
/// then a fixed extended palette, then generated hex colors.
class ColorMap {
  public:
    ColorMap() = default;

    static ColorMap standard(int n) {
        static const char* const palette[] = {"green",  "red",     "blue",  "orange", "purple",
                                              "brown",  "magenta", "cyan",  "gold",   "gray",
                                              "navy",   "olive"};
        constexpr int palette_size = static_cast<int>(std::size(palette));
        ColorMap cm;
        for (int i = 1; i <= n; ++i) {
            if (i <= palette_size) {
                cm.names_.emplace_back(palette[i - 1]);
            } else {
                // Fibonacci hash of the index; deterministic across runs.
                unsigned h = static_cast<unsigned>(i) * 2654435761u;
                char buf[8];
                std::snprintf(buf, sizeof buf, "#%02x%02x%02x", 32 + (h >> 24) % 192, 32 + (h >> 16) % 192,
                              32 + (h >> 8) % 192);
                cm.names_.emplace_back(buf);
            }
        }
        return cm;
    }

    /// Explicit assignment; names must be distinct.
    explicit ColorMap(std::vector<std::string> names) : names_(std::move(names)) {
        std::set<std::string> seen(names_.begin(), names_.end());
        if (seen.size() != names_.size())
            throw std::invalid_argument("color map must be injective");
    }

    int roots() const noexcept { return static_cast<int>(names_.size()); }

    const std::string& name(int root_index) const {
        if (root_index < 1 || root_index > roots())
            throw std::out_of_range("no color for root " + std::to_string(root_index));
        return names_[static_cast<std::size_t>(root_index - 1)];
    }

  private:
    std::vector<std::string> names_;
};

/// Returns the j with lower = upper - alpha_j, i.e. the edge moves one unit
/// from position j+1 of the lower element to position j. In partition terms
/// for n = 3: 1 reduces a 3 to 2, 2 reduces a 2 to 1, 3 removes a 1.
inline int edge_color(const WeakComposition& lower, const WeakComposition& upper) {
    if (lower.length() != upper.length() || lower.length() < 2)
        throw not_a_cover("edge_color: compositions of different lengths");
    int found = 0;
    for (std::size_t j = 0; j + 1 < lower.length(); ++j) {
        bool match = upper[j] == lower[j] + 1 && upper[j + 1] == lower[j + 1] - 1;
        for (std::size_t i = 0; match && i < lower.length(); ++i)
            if (i != j && i != j + 1 && upper[i] != lower[i])
                match = false;
        if (match) {
            found = static_cast<int>(j) + 1;
            break;
        }
    }
    if (!found)
        throw not_a_cover("edge_color: " + composition_key(upper) + " does not cover " + composition_key(lower));
    return found;
}

using WeightString = std::vector<WeakComposition>;

/// Maximal run gamma + k*alpha inside the simplex, highest element first.
/// Consecutive entries are covers of color root.index.
inline WeightString weight_string(const WeakComposition& gamma, const SimpleRoot& root, const Shape& shape) {
    detail::require_valid(gamma, shape);
    if (root.index < 1 || root.index > shape.n)
        throw std::invalid_argument("weight_string: root index out of range");
    const auto j = static_cast<std::size_t>(root.index - 1);
    std::vector<int> top(gamma.entries().begin(), gamma.entries().end());
    top[j] += top[j + 1];
    top[j + 1] = 0;
    WeightString out;
    const int length = gamma[j] + gamma[j + 1] + 1;
    for (int k = 0; k < length; ++k) {
        out.emplace_back(top);
        --top[j];
        ++top[j + 1];
    }
    return out;
}

} // namespace youngscd
