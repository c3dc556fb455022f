#ifndef WALLCROSS_STABILITY_HPP
#define WALLCROSS_STABILITY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace wallcross
{

/// alpha = (a0, a1, a2) in the extended NS lattice, a0 > 0.
struct StabilityVector {
    Rational a0;
    DivisorClass a1;
    Rational a2;

    [[nodiscard]] ExtendedClass as_extended() const
    {
        return {a0, a1, a2};
    }

    [[nodiscard]] StabilityVector normalized() const
    {
        if (sgn(a0) <= 0) {
            raise(ErrorKind::InvalidInput, "stability vector needs a0 > 0");
        }
        return {Rational(1), a1 / a0, Rational(a2 / a0)};
    }

    friend bool operator==(const StabilityVector &a, const StabilityVector &b)
    {
        return a.a0 == b.a0 && a.a1 == b.a1 && a.a2 == b.a2;
    }
};

enum class FamilyKind {
    OrthogonalRay,
    OrthogonalQuadrant,
    FixedD4Quadrant,
    MaciociaPlane,
    OneDimRay,
    OneDimQuadrant,
    OrthogonalCone,
};

inline constexpr std::array<FamilyKind, 7> all_family_kinds{
    FamilyKind::OrthogonalRay, FamilyKind::OrthogonalQuadrant, FamilyKind::FixedD4Quadrant,
    FamilyKind::MaciociaPlane, FamilyKind::OneDimRay,          FamilyKind::OneDimQuadrant,
    FamilyKind::OrthogonalCone};

inline constexpr std::string_view to_string(FamilyKind k) noexcept
{
    switch (k) {
        case FamilyKind::OrthogonalRay: return "orthogonal-ray";
        case FamilyKind::OrthogonalQuadrant: return "orthogonal-quadrant";
        case FamilyKind::FixedD4Quadrant: return "fixed-d4-quadrant";
        case FamilyKind::MaciociaPlane: return "maciocia-plane";
        case FamilyKind::OneDimRay: return "onedim-ray";
        case FamilyKind::OneDimQuadrant: return "onedim-quadrant";
        case FamilyKind::OrthogonalCone: return "orthogonal-cone";
    }
    return "unknown";
}

inline FamilyKind parse_family_kind(std::string_view s)
{
    for (auto k : all_family_kinds) {
        if (to_string(k) == s) {
            return k;
        }
    }
    raise(ErrorKind::InvalidInput, "unknown family kind '" + std::string(s) + "'");
}

inline constexpr bool is_onedim(FamilyKind k) noexcept
{
    return k == FamilyKind::OneDimRay || k == FamilyKind::OneDimQuadrant;
}

/// Families whose vectors are forced orthogonal to v.
inline constexpr bool is_orthogonal(FamilyKind k) noexcept
{
    return k == FamilyKind::OrthogonalRay || k == FamilyKind::OrthogonalQuadrant || k == FamilyKind::OrthogonalCone;
}

/// A parametrized family of stability vectors.
///
/// Parameter k multiplies direction k. Kind-specific layout:
///  - orthogonal-ray:       directions [H],        params (t)
///  - orthogonal-quadrant:  directions [H, H'],    params (s, t)
///  - orthogonal-cone:      directions [H_1..H_n], params (a_1..a_n)
///  - fixed-d4-quadrant:    directions [D, H],     params (s, t), extra [d]
///  - maciocia-plane:       directions [H] or [H, G] with G.H = 0, params (x, y^2), extra [u0]
///  - onedim-ray:           directions [H],        params (tau)
///  - onedim-quadrant:      directions [H', H],    params (s, t), D = sH' + tH
struct FamilySpec {
    FamilyKind kind;
    std::variant<ChernCharacter, OneDimClass> v;
    /// Q-line bundle L; an empty class means zero.
    DivisorClass twist;
    std::vector<DivisorClass> directions;
    std::vector<Rational> extra;

    [[nodiscard]] const ChernCharacter &character() const
    {
        if (const auto *c = std::get_if<ChernCharacter>(&v)) {
            return *c;
        }
        raise(ErrorKind::InvalidInput, std::string(to_string(kind)) + " family expects a Chern character v");
    }
    [[nodiscard]] const OneDimClass &onedim() const
    {
        if (const auto *c = std::get_if<OneDimClass>(&v)) {
            return *c;
        }
        raise(ErrorKind::InvalidInput, std::string(to_string(kind)) + " family expects a 1-dimensional class v");
    }
    [[nodiscard]] DivisorClass twist_or_zero(const SurfaceLattice &S) const
    {
        return twist.size() == 0 ? DivisorClass::zero(S.rank()) : twist;
    }
};

inline std::size_t param_count(const FamilySpec &F)
{
    switch (F.kind) {
        case FamilyKind::OrthogonalRay:
        case FamilyKind::OneDimRay:
            return 1;
        case FamilyKind::OrthogonalCone:
            return F.directions.size();
        default:
            return 2;
    }
}

namespace detail
{

inline void require_direction_count(const FamilySpec &F, std::size_t lo, std::size_t hi)
{
    const auto n = F.directions.size();
    if (n < lo || n > hi) {
        raise(ErrorKind::InvalidInput, std::string(to_string(F.kind)) + " family needs "
                                           + (lo == hi ? std::to_string(lo)
                                                       : std::to_string(lo) + ".." + std::to_string(hi))
                                           + " directions, got " + std::to_string(n));
    }
}

} // namespace detail

inline void validate_family(const FamilySpec &F, const SurfaceLattice &S)
{
    using detail::require_direction_count;
    switch (F.kind) {
        case FamilyKind::OrthogonalRay:
        case FamilyKind::OneDimRay:
            require_direction_count(F, 1, 1);
            break;
        case FamilyKind::OrthogonalQuadrant:
        case FamilyKind::FixedD4Quadrant:
        case FamilyKind::OneDimQuadrant:
            require_direction_count(F, 2, 2);
            break;
        case FamilyKind::MaciociaPlane:
            require_direction_count(F, 1, 2);
            break;
        case FamilyKind::OrthogonalCone:
            require_direction_count(F, 1, 64);
            break;
    }
    for (const auto &d : F.directions) {
        S.require_dimension(d, "direction");
    }
    if (F.twist.size() != 0) {
        S.require_dimension(F.twist, "twist L");
        if (!F.twist.is_zero() && (is_onedim(F.kind) || F.kind == FamilyKind::MaciociaPlane)) {
            raise(ErrorKind::InvalidInput, std::string(to_string(F.kind)) + " family takes no twist L");
        }
    }

    if (is_onedim(F.kind)) {
        F.onedim().validate(S);
    } else if (F.kind != FamilyKind::FixedD4Quadrant) {
        require_dimension(F.character(), S);
    } else if (const auto *c = std::get_if<ChernCharacter>(&F.v)) {
        require_dimension(*c, S);
    }
    if (is_orthogonal(F.kind)) {
        require_positive_rank(F.character(), "v");
    }
    if (F.kind == FamilyKind::OneDimQuadrant && sgn(F.onedim().chi) <= 0) {
        raise(ErrorKind::NonPositiveChi, "onedim-quadrant family needs chi > 0");
    }

    if (F.kind == FamilyKind::MaciociaPlane) {
        require_ample_check(F.directions[0], S, "maciocia-plane polarization H");
        if (F.extra.size() > 1) {
            raise(ErrorKind::InvalidInput, "maciocia-plane takes at most one extra value (u0)");
        }
        const bool has_u0 = !F.extra.empty() && sgn(F.extra[0]) != 0;
        if (F.directions.size() == 2) {
            if (sgn(S.intersect(F.directions[0], F.directions[1])) != 0) {
                raise(ErrorKind::InvalidInput, "maciocia-plane direction G must satisfy G.H = 0");
            }
        } else if (has_u0) {
            raise(ErrorKind::InvalidInput, "maciocia-plane with u0 != 0 needs a direction G");
        }
    } else {
        for (std::size_t i = 0; i < F.directions.size(); ++i) {
            require_ample_check(F.directions[i], S, "direction " + std::to_string(i));
        }
    }
    if (F.kind == FamilyKind::FixedD4Quadrant && F.extra.size() != 1) {
        raise(ErrorKind::InvalidInput, "fixed-d4-quadrant needs exactly one extra value (d)");
    }
}

/// (1, -K/2 + L + tH, d_t), orthogonal to v.
inline StabilityVector make_orthogonal_alpha(const ChernCharacter &v, const DivisorClass &L, const DivisorClass &H,
                                             const Rational &t, const SurfaceLattice &S)
{
    require_nonzero_rank(v, "v");
    return {Rational(1), Rational(-1, 2) * S.canonical() + L + t * H, orthogonal_degree4(v, L, H, t, S)};
}

struct FamilyPoint {
    /// Normalized to a0 = 1.
    StabilityVector alpha;
    /// Leading entry of the unnormalized formula (DC/chi for onedim-quadrant, otherwise 1).
    Rational scale;
};

inline FamilyPoint eval_family(const FamilySpec &F, const std::vector<Rational> &params, const SurfaceLattice &S)
{
    validate_family(F, S);
    if (params.size() != param_count(F)) {
        raise(ErrorKind::BadParamCount, std::string(to_string(F.kind)) + " family takes "
                                            + std::to_string(param_count(F)) + " parameters, got "
                                            + std::to_string(params.size()));
    }
    const DivisorClass half_K = Rational(1, 2) * S.canonical();
    const DivisorClass L = F.twist_or_zero(S);
    auto combination = [&]() {
        DivisorClass D = DivisorClass::zero(S.rank());
        for (std::size_t k = 0; k < params.size(); ++k) {
            D += params[k] * F.directions[k];
        }
        return D;
    };

    switch (F.kind) {
        case FamilyKind::OrthogonalRay:
            return {make_orthogonal_alpha(F.character(), L, F.directions[0], params[0], S), Rational(1)};
        case FamilyKind::OrthogonalQuadrant:
        case FamilyKind::OrthogonalCone: {
            const auto &v = F.character();
            DivisorClass a1 = L - half_K + combination();
            Rational a2 = -(v.ch2 + S.intersect(v.c1, a1)) / v.r;
            return {{Rational(1), std::move(a1), std::move(a2)}, Rational(1)};
        }
        case FamilyKind::FixedD4Quadrant:
            return {{Rational(1), L - half_K + combination(), F.extra[0]}, Rational(1)};
        case FamilyKind::MaciociaPlane: {
            const auto &H = F.directions[0];
            DivisorClass beta = params[0] * H;
            if (F.directions.size() == 2 && !F.extra.empty()) {
                beta += F.extra[0] * F.directions[1];
            }
            if (sgn(params[1]) <= 0) {
                raise(ErrorKind::InvalidInput, "maciocia-plane needs y^2 > 0");
            }
            Rational a2 = (square(beta, S) - params[1] * square(H, S)) / 2;
            return {{Rational(1), -beta, std::move(a2)}, Rational(1)};
        }
        case FamilyKind::OneDimRay: {
            const auto &v = F.onedim();
            const Rational CH = S.intersect(v.curve, F.directions[0]);
            if (sgn(CH) == 0) {
                raise(ErrorKind::ZeroDegree, "C.H = 0");
            }
            return {{Rational(1), -half_K - (v.chi / CH) * F.directions[0], Rational(-params[0])}, Rational(1)};
        }
        case FamilyKind::OneDimQuadrant: {
            const auto &v = F.onedim();
            const DivisorClass D = combination();
            const Rational DC = S.intersect(D, v.curve);
            if (sgn(DC) == 0) {
                raise(ErrorKind::ZeroDegree, "D.C = 0 at the given parameters");
            }
            if (sgn(DC) < 0) {
                raise(ErrorKind::NonPositiveDegree, "D.C < 0 at the given parameters");
            }
            // tau = -K^2/8 - (chi/2)(D.K)/(D.C) + chi/(D.C); the vector is (DC/chi) * beta^D_tau.
            const Rational ratio = v.chi / DC;
            const Rational tau =
                -square(S.canonical(), S) / 8 - ratio * S.intersect(D, S.canonical()) / 2 + ratio;
            return {{Rational(1), -half_K - ratio * D, Rational(-tau)}, Rational(DC / v.chi)};
        }
    }
    raise(ErrorKind::InvalidInput, "unhandled family kind");
}

struct BogomolovResult {
    Rational margin;
    bool ok;
};

/// a1^2 - 2 a0 a2, admissible iff strictly positive.
inline BogomolovResult bogomolov_ok(const StabilityVector &alpha, const SurfaceLattice &S)
{
    Rational margin = square(alpha.a1, S) - 2 * alpha.a0 * alpha.a2;
    const bool ok = sgn(margin) > 0;
    return {std::move(margin), ok};
}

/// beta^H_tau is admissible iff tau exceeds the returned value.
inline Rational onedim_bogomolov_threshold(const OneDimClass &v, const DivisorClass &H, const SurfaceLattice &S)
{
    v.validate(S);
    const Rational CH = S.intersect(v.curve, H);
    if (sgn(CH) == 0) {
        raise(ErrorKind::ZeroDegree, "C.H = 0");
    }
    const DivisorClass b = Rational(-1, 2) * S.canonical() - (v.chi / CH) * H;
    return -square(b, S) / 2;
}

struct CentralChargeValue {
    Rational re;
    Rational im;

    friend CentralChargeValue operator+(const CentralChargeValue &a, const CentralChargeValue &b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend bool operator==(const CentralChargeValue &a, const CentralChargeValue &b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

/// Z(a) = -<ch(a), alpha> + i <ch(a), alpha . H>.
inline CentralChargeValue central_charge(const ChernCharacter &a, const StabilityVector &alpha,
                                         const DivisorClass &H, const SurfaceLattice &S)
{
    const ExtendedClass ch = a.as_extended();
    const ExtendedClass al = alpha.as_extended();
    const ExtendedClass alH = mul_extended(al, {Rational(0), H, Rational(0)}, S);
    return {-poincare_pairing(ch, al, S), poincare_pairing(ch, alH, S)};
}

struct AssumptionVerdict {
    /// K^2/8 > chi(O) - chi(v)/r(v).
    bool chi_bound;
    /// mu_H'(v) > K.H'/2.
    bool slope_bound;
};

inline AssumptionVerdict assumption_check(const ChernCharacter &v, const DivisorClass &Hp, const SurfaceLattice &S)
{
    require_positive_rank(v, "v");
    const auto &K = S.canonical();
    const bool chi_bound = square(K, S) / 8 > static_cast<long>(S.chi_O()) - euler_char(v, S) / v.r;
    const bool slope_bound = slope(v, Hp, S) > S.intersect(K, Hp) / 2;
    return {chi_bound, slope_bound};
}

enum class HeartPart { TorsionFreePart, TiltedPart, Neither };

inline constexpr std::string_view to_string(HeartPart p) noexcept
{
    switch (p) {
        case HeartPart::TorsionFreePart: return "TorsionFreePart";
        case HeartPart::TiltedPart: return "TiltedPart";
        case HeartPart::Neither: return "Neither";
    }
    return "Unknown";
}

struct HeartClassification {
    HeartPart part;
    Rational threshold;
};

/// Torsion-pair membership of a torsion-free sheaf from its HN slope ladder.
/// The threshold is -(a1.H)/a0; the free part takes the closed condition.
inline HeartClassification heart_membership(const std::vector<Rational> &hn_slopes, const StabilityVector &alpha,
                                            const DivisorClass &H, const SurfaceLattice &S)
{
    if (hn_slopes.empty()) {
        raise(ErrorKind::EmptyLadder, "HN slope ladder is empty");
    }
    for (std::size_t i = 1; i < hn_slopes.size(); ++i) {
        if (!(hn_slopes[i] < hn_slopes[i - 1])) {
            raise(ErrorKind::NonDescending, "HN slopes must be strictly descending (index " + std::to_string(i) + ")");
        }
    }
    if (sgn(alpha.a0) <= 0) {
        raise(ErrorKind::InvalidInput, "stability vector needs a0 > 0");
    }
    Rational theta = -S.intersect(alpha.a1, H) / alpha.a0;
    HeartPart part = HeartPart::Neither;
    if (hn_slopes.front() <= theta) {
        part = HeartPart::TorsionFreePart;
    } else if (hn_slopes.back() > theta) {
        part = HeartPart::TiltedPart;
    }
    return {part, std::move(theta)};
}

} // namespace wallcross

#endif
