#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include <youngscd/partition.hpp>

#include "oracles.hpp"

using namespace youngscd;

namespace {

Partition P(std::string_view s) { return parse_partition(s); }
WeakComposition W(std::string_view s) { return parse_composition_key(s); }

} // namespace

TEST(Partition, NormalizesTrailingZeros) {
    EXPECT_EQ(Partition({3, 2, 1, 0}), P("321"));
    EXPECT_EQ(P("3210").length(), 3);
    EXPECT_TRUE(P("∅").empty());
    EXPECT_EQ(to_string(Partition()), "∅");
}

TEST(Partition, RejectsInvalidParts) {
    EXPECT_THROW(Partition({1, 2}), invalid_element);
    EXPECT_THROW(Partition({2, -1}), invalid_element);
    EXPECT_THROW(WeakComposition({1, -1}), invalid_composition);
    EXPECT_THROW(Shape(-1, 2), std::invalid_argument);
}

TEST(Partition, BracketedFormForLargeParts) {
    Partition big({12, 3});
    EXPECT_EQ(to_string(big), "[12,3]");
    EXPECT_EQ(parse_partition("[12,3]"), big);
    EXPECT_THROW(parse_partition("[12,x]"), std::invalid_argument);
    EXPECT_THROW(parse_partition("3a1"), std::invalid_argument);
}

TEST(Leq, Examples) {
    const Shape s(4, 3);
    EXPECT_TRUE(leq(P("22"), P("32"), s));
    EXPECT_FALSE(leq(P("1111"), P("22"), s));
    EXPECT_FALSE(leq(P("22"), P("1111"), s));
    EXPECT_TRUE(leq(P("3211"), P("3211"), s));
    EXPECT_THROW(leq(P("4"), P("3"), s), invalid_element);
    EXPECT_THROW(leq(P("11111"), P("3"), s), invalid_element);
}

TEST(Covers, Examples) {
    const Shape s(4, 3);
    EXPECT_TRUE(covers(P("3211"), P("2211"), s));
    EXPECT_TRUE(covers(P("3211"), P("3111"), s));
    EXPECT_TRUE(covers(P("3211"), P("321"), s));
    EXPECT_FALSE(covers(P("3211"), P("2111"), s));
    EXPECT_FALSE(covers(P("3211"), P("3211"), s));
    EXPECT_THROW(covers(P("4"), P("3"), s), invalid_element);
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(conjugate(P("32")), P("221"));
    EXPECT_EQ(conjugate(P("311")), P("311"));
    EXPECT_EQ(conjugate(Partition()), Partition());
    for (auto s : {"11111", "21111", "221", "311", "32"})
        EXPECT_EQ(conjugate(conjugate(P(s))), P(s));
}

TEST(Conjugate, InvolutionUpToSize30) {
    // Every partition of size <= 30 fits in the 30 x 30 box.
    std::size_t count = 0;
    for (int k = 0; k <= 30; ++k) {
        std::vector<int> cur;
        auto rec = [&](auto& self, int left, int cap) -> void {
            if (left == 0) {
                Partition p(cur);
                ASSERT_EQ(conjugate(conjugate(p)), p);
                ASSERT_EQ(rank(conjugate(p)), k);
                ++count;
                return;
            }
            for (int v = std::min(left, cap); v >= 1; --v) {
                cur.push_back(v);
                self(self, left - v, v);
                cur.pop_back();
            }
        };
        rec(rec, k, k);
    }
    EXPECT_EQ(count, 28629u); // sum of p(k) for k <= 30
}

TEST(Conjugate, OrderIsomorphismExhaustive) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const Shape s(m, n), t(n, m);
            const auto all = enumerate_partitions(s);
            for (const auto& a : all) {
                ASSERT_TRUE(conjugate(a).fits(t));
                for (const auto& b : all)
                    ASSERT_EQ(leq(a, b, s), leq(conjugate(a), conjugate(b), t));
            }
        }
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(P("322"), Shape(3, 3)), P("11"));
    EXPECT_EQ(complement(P("322"), Shape(3, 4)), P("221"));
    EXPECT_EQ(complement(P("322"), Shape(4, 3)), P("311"));
    EXPECT_EQ(complement(P("3333"), Shape(4, 3)), Partition());
    EXPECT_EQ(complement(Partition(), Shape(2, 3)), P("33"));
    EXPECT_THROW(complement(P("4"), Shape(4, 3)), invalid_element);
}

TEST(Complement, RankIdentityRandomSample) {
    const Shape s(5, 4);
    const auto all = enumerate_partitions(s);
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const Partition& a = all[pick(rng)];
        EXPECT_EQ(rank(a) + rank(complement(a, s)), 20);
    }
}

TEST(Complement, OrderReversingInvolutionExhaustive) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const Shape s(m, n);
            const auto all = enumerate_partitions(s);
            for (const auto& a : all) {
                const Partition ac = complement(a, s);
                ASSERT_EQ(complement(ac, s), a);
                ASSERT_EQ(rank(a) + rank(ac), m * n);
                for (const auto& b : all)
                    ASSERT_EQ(leq(a, b, s), leq(complement(b, s), ac, s));
            }
        }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(P("3211")), 7);
    EXPECT_EQ(rank(Partition()), 0);
    EXPECT_EQ(rank(P("333")), 9);
}

TEST(Multiplicity, Examples) {
    const Shape s(4, 3);
    EXPECT_EQ(to_multiplicity(P("3211"), s), W("1120"));
    EXPECT_EQ(to_multiplicity(P("321"), s), W("1111"));
    EXPECT_EQ(to_multiplicity(Partition(), s), W("0004"));
    EXPECT_EQ(from_multiplicity(W("1120"), s), P("3211"));
    EXPECT_EQ(from_multiplicity(W("1300"), s), P("3222"));
    EXPECT_EQ(from_multiplicity(W("0004"), s), Partition());
    EXPECT_THROW(to_multiplicity(P("4"), s), invalid_element);
    EXPECT_THROW(from_multiplicity(W("112"), s), invalid_composition);
    EXPECT_THROW(from_multiplicity(W("1121"), s), invalid_composition);
}

TEST(Multiplicity, WorkedCoverImages) {
    const Shape s(4, 3);
    EXPECT_EQ(to_multiplicity(P("2211"), s), W("0220"));
    EXPECT_EQ(to_multiplicity(P("3111"), s), W("1030"));
    EXPECT_EQ(to_multiplicity(P("321"), s), W("1111"));
}

TEST(Multiplicity, MatchesHandCount) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (const auto& padded : oracle::box_partitions(m, n)) {
                const auto c = to_multiplicity(oracle::to_partition(padded), Shape(m, n));
                ASSERT_EQ(std::vector<int>(c.entries().begin(), c.entries().end()),
                          oracle::multiplicities(padded, n));
            }
}

// Compositions are compared by the cover rule in composition coordinates:
// one unit moves from position j+1 to position j.
static bool composition_cover(const WeakComposition& hi, const WeakComposition& lo) {
    for (std::size_t j = 0; j + 1 < lo.length(); ++j) {
        std::vector<int> v(lo.entries().begin(), lo.entries().end());
        if (v[j + 1] == 0)
            continue;
        ++v[j];
        --v[j + 1];
        if (WeakComposition(v) == hi)
            return true;
    }
    return false;
}

TEST(Multiplicity, CoverPreservingBijectionExhaustive) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const Shape s(m, n);
            const auto parts = enumerate_partitions(s);
            std::set<WeakComposition> image;
            for (const auto& a : parts) {
                const auto c = to_multiplicity(a, s);
                ASSERT_EQ(from_multiplicity(c, s), a);
                image.insert(c);
            }
            ASSERT_EQ(image.size(), static_cast<std::size_t>(oracle::binomial(m + n, m)));
            for (const auto& a : parts)
                for (const auto& b : parts)
                    ASSERT_EQ(covers(b, a, s), composition_cover(to_multiplicity(b, s), to_multiplicity(a, s)));
        }
}

TEST(CompositionRank, Examples) {
    const Shape s(4, 3);
    EXPECT_EQ(composition_rank(W("1120"), s), 7);
    EXPECT_EQ(composition_rank(W("1300"), s), 9);
    EXPECT_EQ(composition_rank(W("0004"), s), 0);
    EXPECT_THROW(composition_rank(W("111"), s), invalid_composition);
}

TEST(CompositionRank, AgreesWithPartitionRankOnL64) {
    const Shape s(6, 4);
    for (const auto& a : enumerate_partitions(s))
        ASSERT_EQ(composition_rank(to_multiplicity(a, s), s), rank(a));
}

TEST(EnumerateCompositions, Examples) {
    auto two_three = enumerate_compositions(2, 3);
    std::set<WeakComposition> got(two_three.begin(), two_three.end());
    std::set<WeakComposition> want{W("200"), W("020"), W("002"), W("110"), W("101"), W("011")};
    EXPECT_EQ(two_three.size(), 6u);
    EXPECT_EQ(got, want);
    EXPECT_TRUE(std::is_sorted(two_three.begin(), two_three.end()));
    EXPECT_EQ(enumerate_compositions(0, 4).size(), 1u);
    EXPECT_EQ(enumerate_compositions(0, 4)[0], W("0000"));
    EXPECT_EQ(enumerate_compositions(3, 4).size(), 20u);
}

TEST(EnumerateCompositions, CountsMatchBinomial) {
    for (int k = 0; k <= 8; ++k)
        for (int p = 1; p <= 6; ++p)
            EXPECT_EQ(static_cast<std::int64_t>(enumerate_compositions(k, p).size()),
                      oracle::binomial(k + p - 1, p - 1));
}

TEST(EnumeratePartitions, DegenerateShapesAreEmpty) {
    EXPECT_TRUE(enumerate_partitions(Shape(0, 3)).empty());
    EXPECT_TRUE(enumerate_partitions(Shape(3, 0)).empty());
}

TEST(Keys, DigitAndBracketForms) {
    EXPECT_EQ(composition_key(W("1120")), "1120");
    WeakComposition big({10, 0, 2});
    EXPECT_EQ(composition_key(big), "[10,0,2]");
    EXPECT_EQ(parse_composition_key("[10,0,2]"), big);
    // Uniform within a lattice: total 10 brackets even single-digit entries.
    EXPECT_EQ(composition_key(WeakComposition({1, 9})), "[1,9]");
}
