#include "oracles.hpp"
#include "sheafcalc/betti.hpp"
#include "sheafcalc/cohomology.hpp"
#include "sheafcalc/grammar.hpp"

#include <gtest/gtest.h>

using namespace sheafcalc;

TEST(HLine, Examples) {
    EXPECT_EQ(h_line(3, 0, 2), 10);
    EXPECT_EQ(h_line(3, 3, -4), 1);
    for (std::int64_t a = -8; a <= 8; ++a) {
        EXPECT_EQ(h_line(3, 1, a), 0);
        EXPECT_EQ(h_line(3, 2, a), 0);
    }
}

TEST(HLine, MatchesMonomialCount) {
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::int64_t a = -12; a <= 12; ++a)
                EXPECT_EQ(h_line(n, i, a), oracle::h_line(n, i, a)) << n << " " << i << " " << a;
}

TEST(HLine, AlternatingSumIsChi) {
    for (std::int64_t a = -10; a <= 10; ++a) {
        Integer alt = 0;
        for (int i = 0; i <= 3; ++i)
            alt += (i % 2 ? -1 : 1) * h_line(3, i, a);
        EXPECT_EQ(Rational(alt), chi_atom_poly(SheafAtom::line(a))(0)) << a;
    }
}

TEST(HLine, InvalidIndex) {
    EXPECT_THROW(h_line(3, 4, 0), Error);
    EXPECT_THROW(h_line(3, -1, 0), Error);
    EXPECT_THROW(h_line(0, 0, 0), Error);
}

TEST(HAtom, Examples) {
    EXPECT_EQ(h_atom(0, SheafAtom::tangent(-1)), 4);
    EXPECT_EQ(h_atom(0, SheafAtom::tangent(-2)), 0);
    EXPECT_EQ(h_atom(1, SheafAtom::cotangent(0)), 1);
    EXPECT_EQ(h_atom(0, SheafAtom::tangent(0)), 15);
}

TEST(HAtom, CotangentOnlyHasH1AtZero) {
    for (std::int64_t a = -20; a <= 20; ++a)
        EXPECT_EQ(h_atom(1, SheafAtom::cotangent(a)), a == 0 ? 1 : 0) << a;
}

TEST(HAtom, TangentVanishing) {
    for (std::int64_t a = -20; a <= 20; ++a) {
        EXPECT_EQ(h_atom(1, SheafAtom::tangent(a)), 0);
        EXPECT_EQ(h_atom(2, SheafAtom::tangent(a)), a == -4 ? 1 : 0);
        if (a <= -2) {
            EXPECT_EQ(h_atom(0, SheafAtom::tangent(a)), 0);
        }
    }
}

TEST(HAtom, EulerSequenceAlternatingIdentity) {
    for (std::int64_t a = -8; a <= 8; ++a) {
        Integer total = 0;
        for (int i = 0; i <= 3; ++i) {
            const Integer d = h_atom(i, SheafAtom::tangent(a)) - 4 * h_line(3, i, a + 1) + h_line(3, i, a);
            total += (i % 2 ? -1 : 1) * d;
        }
        EXPECT_EQ(total, 0) << a;
    }
}

TEST(HAtom, SerreDualityBetweenTangentAndCotangent) {
    for (std::int64_t a = -30; a <= 30; ++a)
        for (int i = 0; i <= 3; ++i)
            EXPECT_EQ(h_atom(i, SheafAtom::cotangent(a)), h_atom(3 - i, SheafAtom::tangent(-a - 4)));
}

TEST(HAtom, TableAgreesWithDerivationOutsideWindow) {
    for (std::int64_t a : {-40, -13, -12, 12, 13, 40})
        for (int i = 0; i <= 3; ++i)
            EXPECT_EQ(BottTable::instance().tangent(i, a), BottTable::derive_tangent(i, a));
}

TEST(HAtom, ChiOfTablesMatchesPolynomials) {
    for (std::int64_t a = -12; a <= 12; ++a) {
        for (const SheafAtom atom : {SheafAtom::tangent(a), SheafAtom::cotangent(a)}) {
            Integer alt = 0;
            for (int i = 0; i <= 3; ++i)
                alt += (i % 2 ? -1 : 1) * h_atom(i, atom);
            EXPECT_EQ(Rational(alt), chi_atom_poly(atom)(0));
        }
    }
}

TEST(HAtom, TangentNeedsP3) {
    EXPECT_THROW(h_atom(0, SheafAtom::tangent(0), 4), Error);
}

TEST(ChiAtomPoly, Examples) {
    const Polynomial o = chi_atom_poly(SheafAtom::line(0));
    EXPECT_EQ(o, (Polynomial::t() + Polynomial(1)) * (Polynomial::t() + Polynomial(2)) *
                     (Polynomial::t() + Polynomial(3)) / Rational(6));
    EXPECT_EQ(o(0), 1);
    EXPECT_EQ(chi_atom_poly(SheafAtom::line(-4))(0), -1);
    EXPECT_EQ(chi_atom_poly(SheafAtom::tangent(-2))(0), 0);
    for (std::int64_t a = -6; a <= 6; ++a)
        EXPECT_TRUE(chi_atom_poly(SheafAtom::cotangent(a)).is_integer_valued());
}

TEST(ChiComplexPoly, Examples) {
    EXPECT_EQ(chi_complex_poly(parse_complex("0 -> 3O(-1) -> 6O -> E -> 0"))(0), 6);
    EXPECT_TRUE(chi_complex_poly(parse_complex("0 -> O -> O -> E -> 0")).is_zero());
    const FreeComplex quintic({SheafSum::of(SheafAtom::line(-3), 5), SheafSum::of(SheafAtom::line(-4), 5),
                               SheafSum::of(SheafAtom::line(-5))},
                              "I_Y");
    EXPECT_EQ(chi_complex_poly(quintic)(3), 5);
}

TEST(ChiComplexPoly, MatchesOracleOnLineComplexes) {
    const FreeComplex c = parse_complex("0 -> O(-2) + O(-1) -> 5O -> E -> 0");
    const Polynomial p = chi_complex_poly(c);
    for (std::int64_t t = -10; t <= 10; ++t)
        EXPECT_EQ(p(t), 5 * oracle::chi_line(3, t) - oracle::chi_line(3, t - 2) - oracle::chi_line(3, t - 1));
}

TEST(H0FromResolution, ConicUnionCubic) {
    const FreeComplex ideal({SheafSum{{SheafAtom::line(-3), 3}, {SheafAtom::line(-4), 3}},
                             SheafSum{{SheafAtom::line(-4), 2}, {SheafAtom::line(-5), 5}},
                             SheafSum::of(SheafAtom::line(-6), 2)},
                            "I_Y");
    EXPECT_EQ(h0_from_resolution(ideal, 3).value, Integer(3));
    EXPECT_EQ(h0_from_resolution(ideal, 4).value, Integer(13));
}

TEST(H0FromResolution, EntryEightNegativeTwists) {
    const FreeComplex e = parse_complex("0 -> T(-2) -> 5O + O(1) -> E -> 0");
    EXPECT_EQ(h0_from_resolution(e, -1).value, Integer(1));
    EXPECT_EQ(h0_from_resolution(e, -2).value, Integer(0));
    EXPECT_EQ(h0_from_resolution(e, 0).value, Integer(9));
}

TEST(H0FromResolution, GuardFires) {
    const FreeComplex koszul = parse_complex("0 -> O(-4) -> 4O(-3) -> 6O(-2) -> 4O(-1) -> K -> 0");
    const H0Result r = h0_from_resolution(koszul, 0);
    EXPECT_FALSE(r.determinate());
    EXPECT_FALSE(r.reason.empty());
    EXPECT_EQ(h0_from_resolution(koszul, 1).value, Integer(4));
    // h^1 of Omega(0) in position 1 blocks the count.
    EXPECT_FALSE(h0_from_resolution(parse_complex("0 -> Om -> 4O(-1) -> Q -> 0"), 0).determinate());
}

TEST(H0FromResolution, NegativeTotalIsRejected) {
    EXPECT_THROW(h0_from_resolution(parse_complex("0 -> 5O -> O(1) -> E -> 0"), 0), Error);
}

TEST(H0FromResolution, ConsistencyIdentityOnDeterminateCases) {
    for (const char *text : {"0 -> O(-3) -> 4O -> E -> 0", "0 -> T(-2) -> 5O + O(1) -> E -> 0",
                             "0 -> O(-1) + T(-2) -> 7O -> E -> 0", "0 -> O(-2) -> 4O(-1) -> 5O + O(1) -> E -> 0",
                             "0 -> O(-6) -> 2O(-3) -> I -> 0"}) {
        const FreeComplex c = parse_complex(text);
        const Polynomial chi = chi_complex_poly(c);
        for (std::int64_t t = -6; t <= 6; ++t) {
            const H0Result r = h0_from_resolution(c, t);
            if (!r.determinate())
                continue;
            EXPECT_EQ(Rational(*r.value), chi(t) - Rational(higher_cohomology_defect(c, t))) << text << " t=" << t;
        }
    }
}
