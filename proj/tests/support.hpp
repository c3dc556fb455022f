#ifndef WALLCROSS_TESTS_SUPPORT_HPP
#define WALLCROSS_TESTS_SUPPORT_HPP

#include <concepts>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "wallcross/random.hpp"
#include "wallcross/verify.hpp"
#include "wallcross/wallcross.hpp"

namespace wallcross::testing
{

inline Rational Q(const char *s)
{
    return parse_rational(s);
}

template <std::integral T>
Rational Q(T n, long d = 1)
{
    return make_rational(static_cast<long>(n), d);
}

inline std::vector<Preset> all_presets()
{
    return {preset_p2(), preset_p1xp1(), preset_blowup_p2()};
}

inline ChernCharacter ch(long r, DivisorClass c1, const Rational &ch2)
{
    return {Rational(r), std::move(c1), ch2};
}

inline FamilySpec quadrant_family(const ChernCharacter &v, const DivisorClass &H, const DivisorClass &Hp)
{
    return {FamilyKind::OrthogonalQuadrant, v, DivisorClass{}, {H, Hp}, {}};
}

#define EXPECT_ERROR_KIND(stmt, expected_kind)                                                                         \
    do {                                                                                                               \
        try {                                                                                                          \
            (void)(stmt);                                                                                                    \
            ADD_FAILURE() << "expected " << ::wallcross::to_string(expected_kind);                                     \
        } catch (const ::wallcross::error &e_) {                                                                       \
            EXPECT_EQ(e_.kind(), expected_kind) << e_.what();                                                          \
        }                                                                                                              \
    } while (0)

} // namespace wallcross::testing

#endif
