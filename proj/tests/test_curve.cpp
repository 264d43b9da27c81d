#include "oracles.hpp"
#include "sheafcalc/curve.hpp"

#include <gtest/gtest.h>

using namespace sheafcalc;

namespace {

const CurveClass conic(2, 0, -1);

CurveClass conics(int k) { return CurveClass::disjoint_union(std::vector<CurveClass>(k, conic)); }

} // namespace

TEST(CurveClass, ChecksDualizingTwist) {
    EXPECT_NO_THROW(CurveClass(9, 10, 2));
    EXPECT_THROW(CurveClass(9, 10, 1), Error);
    EXPECT_THROW(CurveClass(0, 0), Error);
    EXPECT_NO_THROW(CurveClass(1, -18));
}

TEST(CurveClass, DisjointUnion) {
    EXPECT_EQ(conics(3).degree(), 6);
    EXPECT_EQ(conics(3).genus(), -2);
    EXPECT_EQ(conics(4).genus(), -3);
    EXPECT_EQ(conics(3).components().size(), 3u);
    EXPECT_FALSE(conics(3).omega_twist());
    EXPECT_EQ(disjoint_union_genus({0, 0, 0}), -2);
    EXPECT_EQ(disjoint_union_genus({1}), 1);
    EXPECT_THROW(CurveClass::disjoint_union({}), Error);
    const CurveClass nested = CurveClass::disjoint_union({conics(2), conic});
    EXPECT_EQ(nested.components().size(), 3u);
    EXPECT_EQ(nested, conics(3));
}

TEST(HilbertPoly, Examples) {
    EXPECT_EQ(hilbert_poly(CurveClass(2, 0)), Polynomial::linear(2, 1));
    EXPECT_EQ(hilbert_poly(CurveClass(1, 0)), Polynomial::linear(1, 1));
    EXPECT_EQ(hilbert_poly(CurveClass(6, 3)), Polynomial::linear(6, -2));
}

TEST(HilbertPoly, DualizingDegreeConsistency) {
    for (std::int64_t d = 1; d <= 12; ++d) {
        for (std::int64_t e = -3; e <= 4; ++e) {
            if ((d * e) % 2 != 0)
                continue;
            const CurveClass y(d, 1 + d * e / 2, e);
            EXPECT_EQ(dualizing_chi(y), Polynomial::linear(d, y.genus() - 1));
        }
    }
}

TEST(CiCurve, Examples) {
    EXPECT_EQ(ci_curve(3, 3), CurveClass(9, 10, 2));
    EXPECT_EQ(ci_curve(2, 3), CurveClass(6, 4, 1));
    EXPECT_EQ(ci_curve(2, 2), CurveClass(4, 1, 0));
    EXPECT_THROW(ci_curve(0, 3), Error);
}

TEST(CiCurve, KoszulChiAgrees) {
    for (std::int64_t a = 1; a <= 6; ++a)
        for (std::int64_t b = 1; b <= 6; ++b)
            EXPECT_EQ(ci_chi(a, b), hilbert_poly(ci_curve(a, b)));
}

TEST(SerreRank2Genus, Examples) {
    EXPECT_EQ(serre_rank2_genus(3, 2), 0);
    EXPECT_EQ(serre_rank2_genus(4, 6), 1);
    EXPECT_EQ(serre_rank2_genus(3, 4), -1);
    EXPECT_EQ(serre_rank2_genus(3, 3), Rational(-1, 2));
}

TEST(SerreRank2Genus, ParityGuard) {
    for (std::int64_t k = 1; k <= 50; ++k) {
        EXPECT_TRUE(is_integral(serre_rank2_genus(3, 2 * k)));
        ASSERT_TRUE(rank2_zero_locus(3, 2 * k));
        EXPECT_EQ(rank2_zero_locus(3, 2 * k)->genus(), 1 - k);
        EXPECT_FALSE(rank2_zero_locus(3, 2 * k - 1));
    }
}

TEST(C3FromCurve, Examples) {
    EXPECT_EQ(c3_from_curve(3, ci_curve(3, 3)), 27);
    EXPECT_EQ(c3_from_curve(3, CurveClass(5, 1)), 5);
    EXPECT_EQ(c3_from_curve(3, CurveClass(6, 3)), 10);
    EXPECT_THROW(c3_from_curve(4, CurveClass(5, 1)), Error);
}

TEST(C3FromCurve, ChernColumn) {
    const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> rows = {
        {9, 10, 27}, {6, 3, 10}, {5, 1, 5}, {7, 5, 15}, {6, 4, 12}, {4, 1, 4}, {5, 2, 7}, {4, 0, 2}, {3, 1, 3}};
    for (const auto &[d, p, c3] : rows)
        EXPECT_EQ(c3_from_curve(3, CurveClass(d, p)), c3) << d << "," << p;
}

TEST(LiaisonResidue, Examples) {
    const auto quintic = liaison_residue(2, 3, CurveClass(1, 0));
    EXPECT_EQ(quintic.residue.degree(), 5);
    EXPECT_EQ(quintic.residue.genus(), 2);

    const auto three = liaison_residue(3, 3, conics(3));
    EXPECT_EQ(three.residue.degree(), 3);
    EXPECT_EQ(three.residue.genus(), -5);
    EXPECT_EQ(three.chi, Polynomial::linear(3, 6));

    const auto four = liaison_residue(3, 3, conics(4));
    EXPECT_EQ(four.residue.degree(), 1);
    EXPECT_EQ(four.residue.genus(), -10);
    EXPECT_EQ(four.chi, Polynomial::linear(1, 11));

    const auto cubic = liaison_residue(3, 3, ci_curve(2, 3));
    EXPECT_EQ(cubic.residue.degree(), 3);
    EXPECT_EQ(cubic.residue.genus(), 1);
}

TEST(LiaisonResidue, MatchesInt64Oracle) {
    for (int k = 1; k <= 4; ++k) {
        const auto res = liaison_residue(3, 3, conics(k));
        const std::vector<oracle::Part> parts(static_cast<std::size_t>(k), oracle::Part{2, 0, -1});
        for (std::int64_t t = -5; t <= 5; ++t)
            EXPECT_EQ(res.chi(t), oracle::residual_chi(3, 3, parts, t)) << k << " " << t;
    }
}

TEST(LiaisonResidue, Errors) {
    EXPECT_THROW(liaison_residue(3, 3, CurveClass(9, 10)), Error);
    EXPECT_THROW(liaison_residue(0, 3, CurveClass(1, 0)), Error);
    EXPECT_THROW(liaison_residue(2, 2, CurveClass(5, 0)), Error);
}

TEST(LiaisonResidue, Involution) {
    const std::vector<CurveClass> curves = {CurveClass(1, 0), CurveClass(2, 0), CurveClass(3, 1), CurveClass(3, 0),
                                            CurveClass(4, 1), ci_curve(2, 3),  conics(2),         conics(3)};
    for (const auto &y : curves) {
        const auto once = liaison_residue(3, 3, y);
        const auto twice = liaison_residue(3, 3, once.residue);
        EXPECT_EQ(twice.residue.degree(), y.degree());
        EXPECT_EQ(twice.residue.genus(), y.genus());
    }
}

TEST(MultipleLineChi, Examples) {
    EXPECT_EQ(multiple_line_chi({1, 0}), Polynomial::linear(2, 3));
    EXPECT_EQ(multiple_line_chi({2, 1, 0}), Polynomial::linear(3, 6));
    for (std::int64_t s = -3; s <= 3; ++s)
        EXPECT_EQ(multiple_line_chi({s, -1, -1, 0}), Polynomial::linear(4, s + 2));
    EXPECT_EQ(multiple_line_chi({0}), hilbert_poly(CurveClass(1, 0)));
    EXPECT_THROW(multiple_line_chi({}), Error);
}

TEST(CmExists, Examples) {
    EXPECT_TRUE(cm_exists(3, -11));
    EXPECT_FALSE(cm_exists(1, -18));
    EXPECT_TRUE(cm_exists(1, 0));
    EXPECT_FALSE(cm_exists(1, -10));
    EXPECT_TRUE(cm_exists(3, -5));
    EXPECT_TRUE(cm_exists(3, 1));
    EXPECT_TRUE(cm_exists(3, 0));
    EXPECT_FALSE(cm_exists(4, 2));
    EXPECT_THROW(cm_exists(0, 0), Error);
}

TEST(SectionCountRational, Examples) {
    EXPECT_EQ(section_count_rational(1, -1), 0);
    EXPECT_EQ(section_count_rational(1, 0), 1);
    EXPECT_EQ(section_count_rational(2, 1), 3);
    EXPECT_EQ(section_count_rational(3, -2), 0);
    EXPECT_THROW(section_count_rational(0, 1), Error);
}
