#ifndef WALLCROSS_PRESETS_HPP
#define WALLCROSS_PRESETS_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "stability.hpp"

namespace wallcross
{

/// A bundled surface with named divisor classes.
struct Preset {
    std::string name;
    SurfaceLattice lattice;
    /// Names of the NS basis vectors, in coordinate order.
    std::vector<std::string> basis;
    /// Named classes usable in class expressions (basis names included).
    std::map<std::string, DivisorClass> named;
    /// Cone directions used by enumeration and plots when none are given.
    std::vector<DivisorClass> nef_directions;
    long default_box;
};

inline Preset preset_p2()
{
    SurfaceLattice S("P2", {{1}}, DivisorClass{-3}, 1, {DivisorClass{1}});
    return {"p2", S, {"h"}, {{"h", DivisorClass{1}}, {"K", DivisorClass{-3}}}, {DivisorClass{1}}, 3};
}

inline Preset preset_p1xp1()
{
    SurfaceLattice S("P1xP1", {{0, 1}, {1, 0}}, DivisorClass{-2, -2}, 1, {DivisorClass{3, 1}, DivisorClass{1, 3}});
    return {"p1xp1",
            S,
            {"H1", "H2"},
            {{"H1", DivisorClass{1, 0}},
             {"H2", DivisorClass{0, 1}},
             {"H", DivisorClass{1, 1}},
             {"K", DivisorClass{-2, -2}}},
            {DivisorClass{1, 0}, DivisorClass{0, 1}},
            3};
}

inline Preset preset_blowup_p2()
{
    SurfaceLattice S("Bl_pP2", {{1, 0}, {0, -1}}, DivisorClass{-3, 1}, 1, {DivisorClass{2, -1}, DivisorClass{3, -1}});
    return {"blowup_p2",
            S,
            {"h", "e"},
            {{"h", DivisorClass{1, 0}}, {"e", DivisorClass{0, 1}}, {"K", DivisorClass{-3, 1}}},
            {DivisorClass{1, 0}, DivisorClass{1, -1}},
            3};
}

inline constexpr std::array<std::string_view, 3> preset_names{"p2", "p1xp1", "blowup_p2"};

inline Preset load_preset(std::string_view name)
{
    if (name == "p2") {
        return preset_p2();
    }
    if (name == "p1xp1") {
        return preset_p1xp1();
    }
    if (name == "blowup_p2") {
        return preset_blowup_p2();
    }
    raise(ErrorKind::InvalidInput, "unknown preset '" + std::string(name) + "' (expected p2, p1xp1 or blowup_p2)");
}

/// Blow-down of the exceptional curve on Bl_p P^2: the family
/// (1, -K/2 + sD + tH, 1) with D = 2h, H = 2h - e, the point ideal v = (1, 0, -1)
/// and the producer ch(O(-e)) = (1, -e, -1/2).
struct BlowdownScenario {
    FamilySpec family;
    ChernCharacter v;
    ChernCharacter producer;
    DivisorClass D;
    DivisorClass H;
};

inline BlowdownScenario blowdown_scenario()
{
    const DivisorClass D{2, 0};
    const DivisorClass H{2, -1};
    const ChernCharacter v{Rational(1), DivisorClass{0, 0}, Rational(-1)};
    const ChernCharacter producer{Rational(1), DivisorClass{0, -1}, Rational(-1, 2)};
    FamilySpec F{FamilyKind::FixedD4Quadrant, v, DivisorClass{}, {D, H}, {Rational(1)}};
    return {F, v, producer, D, H};
}

/// Rank 2 classes with c1 = 0 and ch2 = -5 on P1 x P1.
struct Rank2WallsScenario {
    ChernCharacter v;
    long box;
    std::vector<DivisorClass> expected_rays;
};

inline Rank2WallsScenario rank2_walls_scenario()
{
    return {{Rational(2), DivisorClass{0, 0}, Rational(-5)},
            3,
            {DivisorClass{1, 1}, DivisorClass{2, 1}, DivisorClass{1, 2}, DivisorClass{1, 0}, DivisorClass{0, 1}}};
}

} // namespace wallcross

#endif
