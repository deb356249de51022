#include <map>
#include <set>

#include <gtest/gtest.h>

#include <youngscd/poset.hpp>
#include <youngscd/rootsys.hpp>

using namespace youngscd;

namespace {

WeakComposition W(std::string_view s) { return parse_composition_key(s); }

std::set<int> colors_used(const GradedPoset& p) {
    std::set<int> out;
    for (const Cover& c : p.covers())
        out.insert(c.color);
    return out;
}

} // namespace

TEST(SimpleRoots, Vectors) {
    auto roots = simple_roots(3);
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_EQ(roots[0].vector(), (std::vector<int>{1, -1, 0, 0}));
    EXPECT_EQ(roots[2].vector(), (std::vector<int>{0, 0, 1, -1}));
}

TEST(EdgeColor, Examples) {
    EXPECT_EQ(edge_color(W("1210"), W("1300")), 2);
    EXPECT_EQ(edge_color(W("0100"), W("1000")), 1);
    EXPECT_EQ(edge_color(W("1002"), W("1011")), 3);
    EXPECT_THROW(edge_color(W("1300"), W("1210")), not_a_cover);
    EXPECT_THROW(edge_color(W("0004"), W("1003")), not_a_cover);
    EXPECT_THROW(edge_color(W("001"), W("0010")), not_a_cover);
}

TEST(EdgeColor, PartitionMeaningForN3) {
    // green reduces a 3 to a 2, red a 2 to a 1, blue removes a 1
    const Shape s(4, 3);
    auto col = [&](const char* lo, const char* hi) {
        return edge_color(to_multiplicity(parse_partition(lo), s), to_multiplicity(parse_partition(hi), s));
    };
    EXPECT_EQ(col("2211", "3211"), 1);
    EXPECT_EQ(col("3111", "3211"), 2);
    EXPECT_EQ(col("321", "3211"), 3);
}

TEST(WeightString, Example) {
    const Shape s(4, 3);
    auto str = weight_string(W("1300"), SimpleRoot{2, 3}, s);
    std::vector<std::string> keys, parts;
    for (const auto& c : str) {
        keys.push_back(composition_key(c));
        parts.push_back(to_string(from_multiplicity(c, s)));
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"1300", "1210", "1120", "1030"}));
    EXPECT_EQ(parts, (std::vector<std::string>{"3222", "3221", "3211", "3111"}));
    // Any member gives the same string.
    EXPECT_EQ(weight_string(W("1120"), SimpleRoot{2, 3}, s), str);
}

TEST(WeightString, SingletonWhenNoRoom) {
    auto str = weight_string(W("1003"), SimpleRoot{2, 3}, Shape(4, 3));
    ASSERT_EQ(str.size(), 1u);
    EXPECT_EQ(str[0], W("1003"));
}

TEST(WeightString, RejectsBadInput) {
    EXPECT_THROW(weight_string(W("130"), SimpleRoot{1, 3}, Shape(4, 3)), invalid_composition);
    EXPECT_THROW(weight_string(W("1300"), SimpleRoot{4, 3}, Shape(4, 3)), std::invalid_argument);
}

TEST(WeightString, StringsPartitionTheLatticeAndAreMonochromeChains) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const Shape s(m, n);
            auto p = build_lattice(s);
            for (const SimpleRoot& r : simple_roots(n)) {
                std::map<std::string, int> seen;
                for (std::size_t i = 0; i < p.size(); ++i) {
                    auto str = weight_string(parse_composition_key(p.key(i)), r, s);
                    const std::string top = composition_key(str.front());
                    for (std::size_t k = 0; k + 1 < str.size(); ++k) {
                        const auto hi = p.at(composition_key(str[k]));
                        const auto lo = p.at(composition_key(str[k + 1]));
                        ASSERT_TRUE(p.is_cover(hi, lo));
                        ASSERT_EQ(edge_color(str[k + 1], str[k]), r.index);
                    }
                    // Every element lies on the string keyed by its top.
                    bool member = false;
                    for (const auto& c : str)
                        member = member || composition_key(c) == p.key(i);
                    ASSERT_TRUE(member);
                    ++seen[top];
                }
                // Each string is reached once per member, so counts equal lengths.
                std::size_t total = 0;
                for (const auto& [top, count] : seen) {
                    ASSERT_EQ(static_cast<std::size_t>(count),
                              weight_string(parse_composition_key(top), r, s).size());
                    total += static_cast<std::size_t>(count);
                }
                ASSERT_EQ(total, p.size());
            }
        }
}

TEST(ColorMap, Defaults) {
    auto cm = ColorMap::standard(3);
    EXPECT_EQ(cm.name(1), "green");
    EXPECT_EQ(cm.name(2), "red");
    EXPECT_EQ(cm.name(3), "blue");
    EXPECT_THROW(cm.name(4), std::out_of_range);
    auto wide = ColorMap::standard(40);
    std::set<std::string> names;
    for (int i = 1; i <= 40; ++i)
        names.insert(wide.name(i));
    EXPECT_EQ(names.size(), 40u);
    EXPECT_THROW(ColorMap({"red", "red"}), std::invalid_argument);
}

TEST(Coloring, EveryEdgeOneColorAndNColorsUsed) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto p = build_lattice(Shape(m, n));
            for (const Cover& c : p.covers())
                ASSERT_EQ(c.color, edge_color(parse_composition_key(p.key(c.lower)),
                                              parse_composition_key(p.key(c.upper))));
            auto used = colors_used(p);
            ASSERT_EQ(used.size(), static_cast<std::size_t>(n));
            ASSERT_EQ(*used.begin(), 1);
            ASSERT_EQ(*used.rbegin(), n);
        }
}

TEST(Coloring, ConjugateLatticesDiffer) {
    EXPECT_EQ(colors_used(build_lattice(Shape(3, 2))).size(), 2u);
    EXPECT_EQ(colors_used(build_lattice(Shape(2, 3))).size(), 3u);
}
