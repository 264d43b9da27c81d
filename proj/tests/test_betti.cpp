#include "sheafcalc/betti.hpp"
#include "sheafcalc/curve.hpp"

#include <gtest/gtest.h>

using namespace sheafcalc;

namespace {

BettiTable gm_first(std::int64_t a) {
    BettiTable b("gm-first");
    b.add(0, 3, a + 2);
    b.add(1, 4, a);
    b.add(1, 5, a);
    if (a > 1)
        b.add(2, 6, a - 1);
    b.validate();
    return b;
}

BettiTable gm_second(std::int64_t d) {
    BettiTable b("gm-second");
    b.add(0, 3, 10 - d);
    b.add(1, 4, 15 - 2 * d);
    if (d < 6)
        b.add(2, 5, 6 - d);
    b.validate();
    return b;
}

const BettiTable quintic("elliptic-quintic", {{0, 3, 5}, {1, 4, 5}, {2, 5, 1}});
const BettiTable ci33("ci-3-3", {{0, 3, 2}, {1, 6, 1}});
const BettiTable quartic("rational-quartic", {{0, 2, 1}, {0, 3, 3}, {1, 4, 4}, {2, 5, 1}});
const BettiTable double_line("double-line", {{0, 2, 3}, {0, 4, 1}, {1, 3, 2}, {1, 5, 2}, {2, 6, 1}});
const BettiTable conic("conic", {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}});
const BettiTable two_conics("two-disjoint-conics", {{0, 2, 1}, {0, 3, 2}, {0, 4, 1}, {1, 4, 2}, {1, 5, 2}, {2, 6, 1}});
const BettiTable conic_cubic("conic-and-twisted-cubic", {{0, 3, 3}, {0, 4, 3}, {1, 4, 2}, {1, 5, 5}, {2, 6, 2}});
const BettiTable sextic("elliptic-sextic", {{0, 3, 2}, {0, 4, 3}, {1, 5, 6}, {2, 6, 2}});
const BettiTable degree8("degree-8", {{0, 3, 2}, {0, 4, 1}, {1, 5, 2}});

} // namespace

TEST(BettiTable, Validation) {
    BettiTable b("bad");
    EXPECT_THROW(b.add(4, 1, 1), Error);
    EXPECT_THROW(b.add(-1, 1, 1), Error);
    EXPECT_THROW(b.add(0, 1, 0), Error);
    EXPECT_THROW(b.validate(), Error);
    b.add(0, 2, 2);
    EXPECT_THROW(b.validate(), Error);
    b.add(1, 4, 1);
    EXPECT_NO_THROW(b.validate());
}

TEST(HilbFromBetti, Examples) {
    EXPECT_EQ(hilb_from_betti(gm_first(3)), Polynomial::linear(3, 6));
    EXPECT_EQ(hilb_from_betti(quintic), Polynomial::linear(5, 0));
    EXPECT_EQ(hilb_from_betti(BettiTable("acm", {{0, 3, 3}, {1, 4, 1}, {1, 5, 1}})), Polynomial::linear(7, -4));
}

TEST(HilbFromBetti, GmFamilies) {
    for (std::int64_t a = 2; a <= 6; ++a)
        EXPECT_EQ(hilb_from_betti(gm_first(a)), Polynomial::linear(9 - 2 * a, 5 * a - 9)) << a;
    for (std::int64_t d = 4; d <= 6; ++d)
        EXPECT_EQ(hilb_from_betti(gm_second(d)), Polynomial::linear(d, 10 - 2 * d)) << d;
}

TEST(HilbFromBetti, MatchesCurveClasses) {
    EXPECT_EQ(hilb_from_betti(ci33), hilbert_poly(ci_curve(3, 3)));
    EXPECT_EQ(hilb_from_betti(quartic), hilbert_poly(CurveClass(4, 0)));
    EXPECT_EQ(hilb_from_betti(conic), hilbert_poly(CurveClass(2, 0)));
    EXPECT_EQ(hilb_from_betti(two_conics), hilbert_poly(CurveClass::disjoint_union({{2, 0}, {2, 0}})));
    EXPECT_EQ(hilb_from_betti(conic_cubic), hilbert_poly(CurveClass::disjoint_union({{2, 0}, {3, 0}})));
    EXPECT_EQ(hilb_from_betti(sextic), hilbert_poly(CurveClass(6, 1)));
    EXPECT_EQ(hilb_from_betti(degree8), hilbert_poly(CurveClass(8, 7)));
}

TEST(Regularity, Examples) {
    EXPECT_EQ(regularity(quintic), 3);
    EXPECT_EQ(regularity(ci33), 5);
    EXPECT_EQ(regularity(quartic), 3);
}

TEST(Regularity, AtLeastGeneratorDegree) {
    for (const auto *b : {&quintic, &ci33, &quartic, &double_line, &conic, &two_conics, &conic_cubic, &sextic, &degree8})
        EXPECT_GE(regularity(*b), max_gen_degree(*b)) << b->subject();
}

TEST(MaxGenDegree, Examples) {
    EXPECT_EQ(max_gen_degree(double_line), 4);
    EXPECT_EQ(max_gen_degree(conic), 2);
    EXPECT_EQ(max_gen_degree(ci33), 3);
}

TEST(GgTwistCheck, Examples) {
    EXPECT_EQ(gg_twist_check(double_line, 2, false).verdict, GgVerdict::NotGg);
    EXPECT_EQ(gg_twist_check(quintic, 3, false).verdict, GgVerdict::GgCertified);
    EXPECT_EQ(gg_twist_check(two_conics, 3, false).verdict, GgVerdict::NotGg);
    EXPECT_EQ(gg_twist_check(ci33, 3, true).verdict, GgVerdict::GgCertified);
}

TEST(GgTwistCheck, ReasonsAndGap) {
    EXPECT_EQ(gg_twist_check(double_line, 2).reason, "generator-degree");
    EXPECT_EQ(gg_twist_check(quintic, 3).reason, "regularity");
    EXPECT_EQ(gg_twist_check(ci33, 3, true).reason, "generator-degree-ci");
    const GgCheck gap = gg_twist_check(ci33, 3, false);
    EXPECT_EQ(gap.verdict, GgVerdict::Unknown);
    EXPECT_EQ(gap.reason, "gap");
    EXPECT_EQ(gg_twist_check(ci33, 5, false).verdict, GgVerdict::GgCertified);
}

TEST(GgTwistCheck, Monotone) {
    for (const auto *b : {&quintic, &ci33, &quartic, &double_line, &two_conics, &conic_cubic, &sextic, &degree8}) {
        for (bool hint : {false, true}) {
            for (std::int64_t m = -2; m <= 8; ++m) {
                const GgVerdict v = gg_twist_check(*b, m, hint).verdict;
                for (std::int64_t k = -2; k <= 8; ++k) {
                    const GgVerdict w = gg_twist_check(*b, k, hint).verdict;
                    if (v == GgVerdict::NotGg && k < m) {
                        EXPECT_EQ(w, GgVerdict::NotGg);
                    }
                    if (v == GgVerdict::GgCertified && k > m) {
                        EXPECT_EQ(w, GgVerdict::GgCertified);
                    }
                }
            }
        }
    }
}

TEST(GgVerdict, TextRoundTrip) {
    for (GgVerdict v : {GgVerdict::GgCertified, GgVerdict::NotGg, GgVerdict::Unknown})
        EXPECT_EQ(parse_gg_verdict(to_string(v)), v);
    EXPECT_THROW(parse_gg_verdict("Maybe"), ParseError);
}

TEST(BettiFormat, ParseAndRoundTrip) {
    const std::string text = "# subject: elliptic-quintic\n0 3 5\n1 4 5\n2 5 1\n";
    const BettiTable b = parse_betti(text);
    EXPECT_EQ(b, quintic);
    EXPECT_EQ(format_betti(b), text);
    EXPECT_EQ(parse_betti(format_betti(double_line)), double_line);
}

TEST(BettiFormat, CommentsAndCanonicalOrder) {
    const BettiTable b = parse_betti("# a comment\n\n2 5 1   # tail\n0 3 5\n  1 4 5\n");
    EXPECT_EQ(b.subject(), "");
    EXPECT_EQ(format_betti(b), "0 3 5\n1 4 5\n2 5 1\n");
}

TEST(BettiFormat, Errors) {
    try {
        parse_betti("0 3 5\n1 four 5\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_betti("0 3 5 7\n"), ParseError);
    EXPECT_THROW(parse_betti("0 3\n"), ParseError);
    EXPECT_THROW(parse_betti("0 3 0\n"), ParseError);
    EXPECT_THROW(parse_betti("5 3 1\n"), ParseError);
    EXPECT_THROW(parse_betti("0 3 2\n"), Error);
    EXPECT_THROW(parse_betti(""), Error);
}
