#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "rank_polynomial.hpp"
#include "rootsys.hpp"

namespace youngscd {

enum class Coordinates { partition, composition };

/// Directed Hasse edge; `color` is the simple-root index (0 when uncolored).
struct Cover {
    std::size_t lower = 0;
    std::size_t upper = 0;
    int color = 0;

    friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// Finite graded poset given by its cover relation. Elements are identified
/// by key strings; for lattices the keys are composition keys.
class GradedPoset {
  public:
    GradedPoset() = default;

    /// Validates that keys are distinct, cover endpoints are in range, and
    /// every cover climbs exactly one rank. Covers are stored sorted by
    /// (lower, upper).
    GradedPoset(std::vector<std::string> keys, std::vector<int> ranks, std::vector<Cover> covers,
                std::optional<Shape> shape = std::nullopt)
        : keys_(std::move(keys)), ranks_(std::move(ranks)), covers_(std::move(covers)), shape_(shape) {
        if (keys_.size() != ranks_.size())
            throw std::invalid_argument("poset: key/rank count mismatch");
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (!index_.emplace(keys_[i], i).second)
                throw std::invalid_argument("poset: duplicate key " + keys_[i]);
            if (ranks_[i] < 0)
                throw std::invalid_argument("poset: negative rank for " + keys_[i]);
            height_ = std::max(height_, ranks_[i]);
        }
        std::sort(covers_.begin(), covers_.end());
        up_.resize(keys_.size());
        down_.resize(keys_.size());
        for (const Cover& c : covers_) {
            if (c.lower >= keys_.size() || c.upper >= keys_.size())
                throw std::invalid_argument("poset: cover index out of range");
            if (ranks_[c.upper] != ranks_[c.lower] + 1)
                throw std::invalid_argument("poset: cover " + keys_[c.upper] + " > " + keys_[c.lower] +
                                            " does not climb one rank");
            if (!cover_set_.insert(pair_id(c.lower, c.upper)).second)
                throw std::invalid_argument("poset: duplicate cover");
            up_[c.lower].push_back(c.upper);
            down_[c.upper].push_back(c.lower);
        }
    }

    std::size_t size() const noexcept { return keys_.size(); }
    bool empty() const noexcept { return keys_.empty(); }
    const std::vector<std::string>& keys() const noexcept { return keys_; }
    const std::string& key(std::size_t i) const { return keys_.at(i); }
    int rank(std::size_t i) const { return ranks_.at(i); }
    const std::vector<int>& ranks() const noexcept { return ranks_; }
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    int height() const noexcept { return height_; }
    const std::optional<Shape>& shape() const noexcept { return shape_; }

    std::optional<std::size_t> find(std::string_view key) const {
        auto it = index_.find(std::string(key));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t at(std::string_view key) const {
        if (auto i = find(key))
            return *i;
        throw unknown_element("element " + std::string(key) + " is not in the poset");
    }

    bool is_cover(std::size_t upper, std::size_t lower) const {
        return cover_set_.contains(pair_id(lower, upper));
    }

    std::span<const std::size_t> upper_covers(std::size_t i) const { return up_.at(i); }
    std::span<const std::size_t> lower_covers(std::size_t i) const { return down_.at(i); }

    /// Element indices of rank s, in stored order.
    std::vector<std::size_t> level(int s) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < ranks_.size(); ++i)
            if (ranks_[i] == s)
                out.push_back(i);
        return out;
    }

    /// Unique minimum at rank 0 and unique maximum at the top rank.
    bool is_bounded() const {
        if (empty())
            return false;
        return std::count(ranks_.begin(), ranks_.end(), 0) == 1 &&
               std::count(ranks_.begin(), ranks_.end(), height_) == 1;
    }

  private:
    std::uint64_t pair_id(std::size_t lower, std::size_t upper) const {
        return static_cast<std::uint64_t>(lower) * keys_.size() + upper;
    }

    std::vector<std::string> keys_;
    std::vector<int> ranks_;
    std::vector<Cover> covers_;
    std::optional<Shape> shape_;
    int height_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
    std::unordered_set<std::uint64_t> cover_set_;
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> down_;
};

namespace detail {

struct Node {
    WeakComposition comp;
    int rank;
};

// Sorts rank-major then lexicographically and wires up the covers given as
// (lower, upper) composition pairs.
inline GradedPoset assemble(const Shape& shape, std::vector<Node> nodes,
                            const std::vector<std::pair<WeakComposition, WeakComposition>>& edges) {
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.comp < b.comp;
    });
    std::vector<std::string> keys;
    std::vector<int> ranks;
    std::unordered_map<std::string, std::size_t> pos;
    keys.reserve(nodes.size());
    ranks.reserve(nodes.size());
    for (const Node& nd : nodes) {
        pos.emplace(composition_key(nd.comp), keys.size());
        keys.push_back(composition_key(nd.comp));
        ranks.push_back(nd.rank);
    }
    std::vector<Cover> covers;
    covers.reserve(edges.size());
    for (const auto& [lo, hi] : edges)
        covers.push_back({pos.at(composition_key(lo)), pos.at(composition_key(hi)), edge_color(lo, hi)});
    return GradedPoset(std::move(keys), std::move(ranks), std::move(covers), shape);
}

} // namespace detail

/// Materializes L(m,n). Covers are generated constructively in the chosen
/// coordinate system; either way the resulting keys, ranks, and covers are
/// expressed in composition form, so both modes yield identical posets.
inline GradedPoset build_lattice(const Shape& shape, Coordinates coords = Coordinates::composition) {
    std::vector<detail::Node> nodes;
    std::vector<std::pair<WeakComposition, WeakComposition>> edges;
    if (shape.degenerate())
        return GradedPoset({}, {}, {}, shape);

    if (coords == Coordinates::composition) {
        for (const WeakComposition& c : enumerate_compositions(shape.m, shape.n + 1)) {
            nodes.push_back({c, composition_rank(c, shape)});
            // Moving one unit from position j+1 to j climbs one rank.
            for (std::size_t j = 0; j + 1 < c.length(); ++j) {
                if (c[j + 1] == 0)
                    continue;
                std::vector<int> up(c.entries().begin(), c.entries().end());
                ++up[j];
                --up[j + 1];
                edges.emplace_back(c, WeakComposition(std::move(up)));
            }
        }
    } else {
        for (const Partition& p : enumerate_partitions(shape)) {
            nodes.push_back({to_multiplicity(p, shape), rank(p)});
            // Grow part i when it stays below n and below its predecessor.
            std::vector<int> parts = p.padded(shape.m);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] == shape.n || (i > 0 && parts[i - 1] == parts[i]))
                    continue;
                std::vector<int> grown(parts);
                ++grown[i];
                edges.emplace_back(to_multiplicity(p, shape), to_multiplicity(Partition(std::move(grown)), shape));
            }
        }
    }
    return detail::assemble(shape, std::move(nodes), edges);
}

/// Number of elements at each rank 0..height.
inline RankPolynomial rank_profile(const GradedPoset& p) {
    if (p.empty())
        return {};
    std::vector<BigInt> counts(static_cast<std::size_t>(p.height()) + 1, BigInt(0));
    for (int r : p.ranks())
        counts[static_cast<std::size_t>(r)] += 1;
    return RankPolynomial(std::move(counts));
}

} // namespace youngscd
