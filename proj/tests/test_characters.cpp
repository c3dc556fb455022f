#include "support.hpp"

using namespace wallcross;
using namespace wallcross::testing;

namespace
{

const DivisorClass H1{1, 0};
const DivisorClass H2{0, 1};
const DivisorClass H{1, 1};
const ChernCharacter v{Q(2), DivisorClass{0, 0}, Q(-5)};

TEST(Twist, Identity)
{
    const auto S = preset_p1xp1().lattice;
    const ChernCharacter a{Q(3), DivisorClass{1, -2}, Q(7, 2)};
    EXPECT_EQ(twist(a, DivisorClass{0, 0}, S), a);
}

TEST(Twist, ExceptionalCurve)
{
    const auto S = preset_blowup_p2().lattice;
    EXPECT_EQ(twist(ch(1, DivisorClass{0, 0}, Q(0)), DivisorClass{0, -1}, S), ch(1, DivisorClass{0, -1}, Q(-1, 2)));
}

TEST(Twist, ByThreeH)
{
    const auto S = preset_p1xp1().lattice;
    const auto t = twist(v, Q(3) * H, S);
    EXPECT_EQ(t, ch(2, DivisorClass{6, 6}, Q(13)));
    EXPECT_EQ(euler_char(t, S) / t.r, Q(27, 2));
}

TEST(Slope, Examples)
{
    const auto S = preset_p1xp1().lattice;
    EXPECT_EQ(slope(v, H, S), 0);
    EXPECT_EQ(slope(ch(1, H1 - H2, Q(0)), DivisorClass{2, 1}, S), -1);
    EXPECT_ERROR_KIND(slope(ch(0, H1, Q(0)), H, S), ErrorKind::ZeroRank);
}

TEST(TwistedGieseker, Reflexive)
{
    const auto S = preset_p1xp1().lattice;
    const auto c = twisted_gieseker_compare(v, v, DivisorClass{0, 0}, H, S);
    EXPECT_EQ(c.outcome, Comparison::Neutral);
    EXPECT_EQ(c.slope_diff, 0);
    EXPECT_EQ(c.chi_diff, 0);
}

TEST(TwistedGieseker, EqualSlopeLargerChi)
{
    const auto S = preset_p1xp1().lattice;
    const auto c = twisted_gieseker_compare(ch(1, H1 - H2, Q(0)), v, DivisorClass{0, 0}, H, S);
    EXPECT_EQ(c.slope_diff, 0);
    EXPECT_EQ(c.chi_diff, Q(5, 2));
    EXPECT_EQ(c.outcome, Comparison::Destabilizes);
}

TEST(TwistedGieseker, SmallerSlope)
{
    const auto S = preset_p1xp1().lattice;
    const auto c = twisted_gieseker_compare(ch(1, -H1, Q(0)), v, DivisorClass{0, 0}, H, S);
    EXPECT_EQ(c.slope_diff, -1);
    EXPECT_EQ(c.outcome, Comparison::Stabilizes);
    EXPECT_ERROR_KIND(twisted_gieseker_compare(ch(0, H1, Q(0)), v, DivisorClass{0, 0}, H, S), ErrorKind::ZeroRank);
}

TEST(OneDimGieseker, Examples)
{
    const auto S = preset_p1xp1().lattice;
    const OneDimClass cv{H, Q(1)};
    const OneDimClass ca{H1, Q(1)};
    EXPECT_EQ(onedim_gieseker_compare(cv, cv, DivisorClass{2, 1}, S), Comparison::Neutral);
    EXPECT_EQ(onedim_gieseker_compare(ca, cv, DivisorClass{2, 1}, S), Comparison::Destabilizes);
    EXPECT_EQ(onedim_gieseker_compare(ca, cv, DivisorClass{1, 2}, S), Comparison::Destabilizes);
    EXPECT_ERROR_KIND(onedim_gieseker_compare(OneDimClass{H1 - H2, Q(1)}, cv, H, S), ErrorKind::NonPositiveDegree);
}

TEST(DetBundleClasses, Examples)
{
    const auto S = preset_p1xp1().lattice;
    const auto u = det_bundle_classes(v, H, S);
    EXPECT_EQ(u.u0, (ExtendedClass{Q(-2), DivisorClass{0, 0}, Q(-3)}));
    EXPECT_EQ(u.u1, (ExtendedClass{Q(0), Q(-2) * H, Q(4)}));
    EXPECT_ERROR_KIND(det_bundle_classes(ch(0, H, Q(1)), H, S), ErrorKind::ZeroRank);
}

TEST(DetIdentity, Examples)
{
    const auto S = preset_p1xp1().lattice;
    const auto one = det_identity_check(v, DivisorClass{0, 0}, H, Q(1), S);
    EXPECT_TRUE(one.holds());
    EXPECT_EQ(one.lhs, (ExtendedClass{Q(-2), Q(-4) * H, Q(-5)}));
    const auto zero = det_identity_check(v, DivisorClass{0, 0}, H, Q(0), S);
    EXPECT_TRUE(zero.holds());
    EXPECT_EQ(zero.rhs, (ExtendedClass{Q(-2), Q(-2) * H, Q(-5)}));
}

TEST(DetIdentity, RandomPresets)
{
    for (const auto &P : all_presets()) {
        const auto &S = P.lattice;
        RandomClasses rng(21);
        for (int i = 0; i < 10; ++i) {
            const auto w = rng.nonzero_rank_character(S.rank());
            const auto Hp = rng.ample_combination(S);
            for (int k = 0; k < 20; ++k) {
                EXPECT_TRUE(det_identity_check(w, DivisorClass::zero(S.rank()), Hp, rng.rational(20, 7), S).holds());
            }
        }
    }
}

TEST(CharacterProperties, TwistGroupAction)
{
    for (const auto &P : all_presets()) {
        const auto &S = P.lattice;
        RandomClasses rng(22);
        for (int i = 0; i < 100; ++i) {
            const auto a = rng.character(S.rank());
            const auto M = rng.divisor(S.rank());
            const auto N = rng.divisor(S.rank());
            EXPECT_EQ(twist(a, M + N, S), twist(twist(a, M, S), N, S));
            EXPECT_EQ(twist(twist(a, M, S), -M, S), a);
        }
    }
}

TEST(CharacterProperties, TwistMatchesProductWithExponential)
{
    for (const auto &P : all_presets()) {
        const auto &S = P.lattice;
        RandomClasses rng(23);
        for (int i = 0; i < 100; ++i) {
            const auto a = rng.character(S.rank());
            const auto M = rng.divisor(S.rank());
            EXPECT_EQ(euler_char(twist(a, M, S), S), euler_char(mul_extended(a.as_extended(), exponential(M, S), S), S));
        }
    }
}

TEST(CharacterProperties, ComparisonInvariantUnderRescaling)
{
    for (const auto &P : all_presets()) {
        const auto &S = P.lattice;
        RandomClasses rng(24);
        for (int i = 0; i < 100; ++i) {
            const auto a = rng.positive_rank_character(S.rank());
            const auto w = rng.positive_rank_character(S.rank());
            const auto L = rng.divisor(S.rank());
            const auto Hp = rng.ample_combination(S);
            const Rational n(rng.integer(2, 5));
            EXPECT_EQ(twisted_gieseker_compare(a, w, L, Hp, S).outcome,
                      twisted_gieseker_compare(n * a, w, L, Hp, S).outcome);
        }
    }
}

TEST(CharacterProperties, ComparisonAgreesWithPairingForLargeT)
{
    for (const auto &P : all_presets()) {
        const auto &S = P.lattice;
        RandomClasses rng(25);
        for (int i = 0; i < 100; ++i) {
            const auto a = rng.positive_rank_character(S.rank());
            const auto w = rng.positive_rank_character(S.rank());
            const auto L = rng.divisor(S.rank());
            const auto Hp = rng.ample_combination(S);
            const auto c = twisted_gieseker_compare(a, w, L, Hp, S);
            // Past the crossing, <a, alpha_t>/r(a) has the sign of the comparison.
            Rational t = c.crossing ? Rational(abs(*c.crossing) + 1) : Rational(1);
            const auto alpha = make_orthogonal_alpha(w, L, Hp, t, S);
            const Rational p = poincare_pairing(a.as_extended(), alpha.as_extended(), S);
            EXPECT_EQ(comparison_from_sign(sgn(p)), c.outcome);
        }
    }
}

TEST(CharacterProperties, HilbertPolynomialDegreeTwo)
{
    for (const auto &P : all_presets()) {
        const auto &S = P.lattice;
        RandomClasses rng(26);
        for (int i = 0; i < 50; ++i) {
            const auto a = rng.character(S.rank());
            const auto Hp = rng.ample_combination(S);
            std::vector<Rational> y;
            for (long n = 0; n < 5; ++n) {
                y.push_back(euler_char(twist(a, Rational(n) * Hp, S), S));
            }
            // Third forward difference vanishes; second difference is r H^2.
            const Rational d2 = y[2] - 2 * y[1] + y[0];
            EXPECT_EQ(d2, a.r * square(Hp, S));
            EXPECT_EQ(y[4] - 3 * y[3] + 3 * y[2] - y[1], 0);
        }
    }
}

} // namespace
