#include <gtest/gtest.h>

#include <youngscd/poset_io.hpp>
#include <youngscd/scd_io.hpp>

using namespace youngscd;

namespace {

std::size_t line_of(const std::string& text) {
    try {
        poset_from_text(text);
    } catch (const parse_error& e) {
        return e.line();
    }
    return 0;
}

std::size_t scd_line_of(const std::string& text) {
    try {
        decomposition_from_text(text);
    } catch (const parse_error& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST(PosetFormat, L12Exact) {
    EXPECT_EQ(to_text(build_lattice(Shape(1, 2))), "poset L(1,2) height=2 count=3\n"
                                                   "0 0 001\n"
                                                   "1 1 010\n"
                                                   "2 2 100\n"
                                                   "0 1 2\n"
                                                   "1 2 1\n");
}

TEST(PosetFormat, RoundTripBitExact) {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            const std::string text = to_text(build_lattice(Shape(m, n)));
            const GradedPoset back = poset_from_text(text);
            ASSERT_EQ(to_text(back), text);
            ASSERT_EQ(back.covers(), build_lattice(Shape(m, n)).covers());
        }
    // Bracketed keys once the total reaches 10.
    const std::string big = to_text(build_lattice(Shape(10, 2)));
    EXPECT_NE(big.find("[0,0,10]"), std::string::npos);
    EXPECT_EQ(to_text(poset_from_text(big)), big);
}

TEST(PosetFormat, ErrorsCarryLineNumbers) {
    const std::string good = to_text(build_lattice(Shape(1, 2)));
    EXPECT_EQ(line_of(""), 1u);
    EXPECT_EQ(line_of("pozet L(1,2) height=2 count=3\n"), 1u);
    EXPECT_EQ(line_of("poset L(1,2 height=2 count=3\n"), 1u);
    EXPECT_EQ(line_of("poset L(1,2) height=2 count=3\n0 0 001\n1 2 010\n"), 3u);  // wrong rank
    EXPECT_EQ(line_of("poset L(1,2) height=2 count=3\n0 0 001\n2 1 010\n"), 3u);  // index gap
    EXPECT_EQ(line_of("poset L(1,2) height=2 count=3\n0 0 001\n1 1 0x0\n"), 3u);  // bad key
    EXPECT_EQ(line_of("poset L(1,2) height=2 count=3\n0 0 001\n1 1 0100\n"), 3u); // wrong length
    EXPECT_EQ(line_of("poset L(1,2) height=2 count=3\n0 0 001\n"), 3u);            // truncated
    EXPECT_EQ(line_of(good + "0 9 1\n"), 7u);
    EXPECT_EQ(line_of(good + "0 1 7\n"), 7u);
    EXPECT_EQ(line_of(good + "0 1\n"), 7u);
    EXPECT_THROW(poset_from_text("poset L(1,2) height=5 count=3\n0 0 001\n1 1 010\n2 2 100\n"), parse_error);
    EXPECT_EQ(line_of(good + "0 2 1\n"), 7u); // skips a rank
    EXPECT_EQ(line_of(good + "0 1 2\n"), 7u); // repeated cover
}

TEST(PosetFormat, RequiresShape) {
    GradedPoset vee({"a", "b", "c"}, {0, 1, 1}, {{0, 1, 0}, {0, 2, 0}});
    EXPECT_THROW(to_text(vee), std::invalid_argument);
}

TEST(ScdFormat, L13Exact) {
    EXPECT_EQ(to_text(lindstrom(1)), "scd L'(1,3) chains=1\n1000 0100 0010 0001\n");
}

TEST(ScdFormat, RoundTripBitExact) {
    for (int m = 1; m <= 20; ++m) {
        for (const auto& d : {lindstrom(m), scd_n2(m)}) {
            const std::string text = to_text(d);
            const auto back = decomposition_from_text(text);
            ASSERT_EQ(back, d);
            ASSERT_EQ(to_text(back), text);
        }
    }
}

TEST(ScdFormat, ErrorsCarryLineNumbers) {
    EXPECT_EQ(scd_line_of(""), 1u);
    EXPECT_EQ(scd_line_of("scd L'(1,3)\n"), 1u);
    EXPECT_EQ(scd_line_of("scd L'(1,3) chains=x\n"), 1u);
    EXPECT_EQ(scd_line_of("scd L'(1,3) chains=1\n1000 0100\n0010\n"), 3u);
    EXPECT_EQ(scd_line_of("scd L'(1,3) chains=2\n1000 0100 0010 0001\n"), 3u);
    EXPECT_EQ(scd_line_of("scd L'(1,3) chains=2\n1000 0100\n\n0010 0001\n"), 3u);
}

TEST(ScdFormat, UnknownKeysReachTheVerifier) {
    auto d = decomposition_from_text("scd L'(1,3) chains=1\n1000 zzz 0010 0001\n");
    auto r = verify_scd(d, build_lattice(Shape(1, 3)));
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.unknown, (std::vector<std::string>{"zzz"}));
    EXPECT_EQ(r.missing, (std::vector<std::string>{"0100"}));
}
