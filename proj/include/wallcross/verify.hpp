#ifndef WALLCROSS_VERIFY_HPP
#define WALLCROSS_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "characters.hpp"
#include "lattice.hpp"
#include "notation.hpp"
#include "presets.hpp"
#include "random.hpp"
#include "stability.hpp"
#include "walls.hpp"

namespace wallcross::verify
{

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const
    {
        return failures.empty();
    }

    void check(bool ok, const std::function<std::string()> &describe)
    {
        ++cases;
        if (!ok && failures.size() < 10) {
            failures.push_back(describe());
        }
    }
};

/// <u, w> = chi(u . td^-1 . w), symmetry, and td . td^-1 = 1.
inline SuiteResult pairing_riemann_roch(const SurfaceLattice &S, RandomClasses &rng, std::size_t n = 200)
{
    SuiteResult r{"pairing-riemann-roch", 0, {}};
    r.check(mul_extended(todd(S), todd_inverse(S), S) == unit_class(S), [] { return "td . td^-1 != 1"; });
    for (std::size_t i = 0; i < n; ++i) {
        const auto u = rng.extended(S.rank());
        const auto w = rng.extended(S.rank());
        const Rational lhs = poincare_pairing(u, w, S);
        const Rational rhs = euler_char(mul_extended(u, mul_extended(todd_inverse(S), w, S), S), S);
        r.check(lhs == rhs, [&] { return "case " + std::to_string(i) + ": " + to_string(lhs) + " != " + to_string(rhs); });
        r.check(lhs == poincare_pairing(w, u, S), [&] { return "case " + std::to_string(i) + ": pairing not symmetric"; });
    }
    return r;
}

inline SuiteResult det_identity(const SurfaceLattice &S, RandomClasses &rng, std::size_t nv = 10, std::size_t nt = 20)
{
    SuiteResult r{"det-identity", 0, {}};
    for (std::size_t i = 0; i < nv; ++i) {
        const auto v = rng.nonzero_rank_character(S.rank());
        const auto H = rng.ample_combination(S);
        for (std::size_t k = 0; k < nt; ++k) {
            const Rational t = rng.rational(20, 7);
            const auto id = det_identity_check(v, DivisorClass::zero(S.rank()), H, t, S);
            r.check(id.holds(), [&] { return "v#" + std::to_string(i) + " t=" + to_string(t); });
        }
    }
    return r;
}

/// Orthogonal-ray, orthogonal-quadrant and orthogonal-cone vectors pair to zero with v.
inline SuiteResult orthogonality(const SurfaceLattice &S, RandomClasses &rng, std::size_t n = 1000)
{
    SuiteResult r{"orthogonality", 0, {}};
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = rng.positive_rank_character(S.rank());
        const DivisorClass L = rng.integer(0, 1) == 0 ? DivisorClass{} : rng.divisor(S.rank());
        FamilySpec F{FamilyKind::OrthogonalRay, v, L, {rng.ample_combination(S)}, {}};
        const auto which = i % 3;
        if (which == 1) {
            F.kind = FamilyKind::OrthogonalQuadrant;
            F.directions.push_back(rng.ample_combination(S));
        } else if (which == 2) {
            F.kind = FamilyKind::OrthogonalCone;
            const auto extra = static_cast<std::size_t>(rng.integer(0, 3));
            for (std::size_t k = 0; k < extra; ++k) {
                F.directions.push_back(rng.ample_combination(S));
            }
        }
        std::vector<Rational> params;
        for (std::size_t k = 0; k < param_count(F); ++k) {
            params.push_back(rng.rational(12, 5));
        }
        const auto point = eval_family(F, params, S);
        const Rational p = poincare_pairing(v.as_extended(), point.alpha.as_extended(), S);
        r.check(sgn(p) == 0, [&] { return std::string(to_string(F.kind)) + " case " + std::to_string(i) + ": " + to_string(p); });
    }
    return r;
}

/// A class G != 0 with G.H = 0, when the lattice has rank >= 2.
inline DivisorClass orthogonal_complement_vector(const DivisorClass &H, const SurfaceLattice &S)
{
    const auto dual = S.dual(H);
    DivisorClass G = DivisorClass::zero(S.rank());
    for (std::size_t i = 0; i + 1 < S.rank(); ++i) {
        std::vector<Rational> c(S.rank(), Rational(0));
        c[i] = dual[i + 1];
        c[i + 1] = -dual[i];
        DivisorClass cand(std::move(c));
        if (!cand.is_zero()) {
            return cand;
        }
    }
    return G;
}

/// Wall polynomials have equal x^2, y^2 coefficients, no other quadratic terms,
/// and agree with the central charge cross product at sample points.
inline SuiteResult circle_form(const SurfaceLattice &S, RandomClasses &rng, std::size_t n = 50)
{
    SuiteResult r{"circle-form", 0, {}};
    for (std::size_t i = 0; i < n; ++i) {
        const auto H = rng.ample_combination(S);
        FamilySpec F{FamilyKind::MaciociaPlane, rng.character(S.rank()), DivisorClass{}, {H}, {}};
        const DivisorClass G = orthogonal_complement_vector(H, S);
        if (!G.is_zero() && rng.integer(0, 1) == 1) {
            F.directions.push_back(G);
            F.extra.push_back(rng.rational(5, 3));
        }
        const auto a = rng.character(S.rank());
        try {
            const auto circle = maciocia_wall_circle(a, F, S);
            r.check(circle.polynomial.coeff(2, 0) == circle.polynomial.coeff(0, 2),
                    [&] { return "case " + std::to_string(i) + ": unequal x^2, y^2"; });
            r.check(sgn(circle.polynomial.coeff(1, 1)) == 0, [&] { return "case " + std::to_string(i) + ": xy term"; });
            for (int k = 0; k < 4; ++k) {
                const Rational x = rng.rational(6, 4);
                const Rational y = rng.positive_rational(6, 4);
                const auto alpha = eval_family(F, {x, Rational(y * y)}, S).alpha;
                const auto za = central_charge(a, alpha, H, S);
                const auto zv = central_charge(F.character(), alpha, H, S);
                const Rational cross = za.re * zv.im - zv.re * za.im;
                r.check(cross == circle.polynomial.eval(x, y),
                        [&] { return "case " + std::to_string(i) + ": polynomial mismatch"; });
            }
        } catch (const std::logic_error &e) {
            r.check(false, [&] { return "case " + std::to_string(i) + ": " + e.what(); });
        }
    }
    return r;
}

/// Exceptional-curve blow-down: along t = 0 the point ideal and O(-e) both pair
/// to zero identically in s, and chi(I_Z(-e)) - chi(I_p) = -l(Z).
inline SuiteResult blowdown(std::size_t max_length = 10)
{
    SuiteResult r{"blowdown", 0, {}};
    const auto P = preset_blowup_p2();
    const auto &S = P.lattice;
    const auto sc = blowdown_scenario();
    for (const auto *c : {&sc.producer, &sc.v}) {
        // The pairing is affine in s; read off both coefficients and confirm affinity.
        auto at = [&](long s) {
            return poincare_pairing(c->as_extended(), eval_family(sc.family, {Rational(s), Rational(0)}, S).alpha.as_extended(), S);
        };
        const Rational c0 = at(0);
        const Rational c1 = at(1) - c0;
        r.check(sgn(c0) == 0 && sgn(c1) == 0, [&] { return "pairing coefficients " + to_string(c0) + ", " + to_string(c1); });
        for (long s = 2; s <= 5; ++s) {
            r.check(at(s) == c0 + c1 * s, [&] { return "pairing not affine in s"; });
        }
    }
    for (std::size_t l = 1; l <= max_length; ++l) {
        const Rational ell(static_cast<long>(l));
        const ChernCharacter ideal{Rational(1), DivisorClass{0, -1}, Rational(Rational(-1, 2) - ell)};
        const Rational diff = euler_char(ideal, S) - euler_char(sc.v, S);
        r.check(diff == -ell, [&] { return "l=" + std::to_string(l) + ": chi difference " + to_string(diff); });
    }
    return r;
}

/// Rank 2, c1 = 0, ch2 = -5 on P1 x P1: five slope walls, none strictly Gieseker.
inline SuiteResult rank2_walls()
{
    SuiteResult r{"rank2-walls", 0, {}};
    const auto P = preset_p1xp1();
    const auto sc = rank2_walls_scenario();
    const auto E = enumerate_rank2_destabilizers(sc.v, P.nef_directions, sc.box, P.lattice);
    r.check(E.walls.size() == sc.expected_rays.size(), [&] { return std::to_string(E.walls.size()) + " walls"; });
    for (const auto &expected : sc.expected_rays) {
        bool found = false;
        for (const auto &w : E.walls) {
            found = found || (w.ray && *w.ray == expected);
        }
        r.check(found, [&] { return "missing ray " + format_divisor(expected, P.basis); });
    }
    for (const auto &w : E.walls) {
        r.check(!w.wall.is_strict_gieseker, [&] { return "strict Gieseker wall found"; });
    }
    return r;
}

struct Report {
    std::string surface;
    std::uint64_t seed;
    std::vector<SuiteResult> suites;

    [[nodiscard]] bool passed() const
    {
        for (const auto &s : suites) {
            if (!s.passed()) {
                return false;
            }
        }
        return true;
    }
};

inline Report run_generic(const SurfaceLattice &S, std::uint64_t seed)
{
    RandomClasses rng(seed);
    Report out{S.label(), seed, {}};
    out.suites.push_back(pairing_riemann_roch(S, rng));
    out.suites.push_back(det_identity(S, rng));
    out.suites.push_back(orthogonality(S, rng));
    out.suites.push_back(circle_form(S, rng));
    return out;
}

} // namespace wallcross::verify

#endif
