#ifndef WALLCROSS_CHARACTERS_HPP
#define WALLCROSS_CHARACTERS_HPP

#include <optional>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace wallcross
{

/// Chern character (rank, c1, ch2) as an element of the extended NS lattice.
struct ChernCharacter {
    Rational r;
    DivisorClass c1;
    Rational ch2;

    [[nodiscard]] ExtendedClass as_extended() const
    {
        return {r, c1, ch2};
    }
    static ChernCharacter from_extended(const ExtendedClass &u)
    {
        return {u.deg0, u.deg2, u.deg4};
    }

    friend ChernCharacter operator+(const ChernCharacter &a, const ChernCharacter &b)
    {
        return {a.r + b.r, a.c1 + b.c1, a.ch2 + b.ch2};
    }
    friend ChernCharacter operator-(const ChernCharacter &a, const ChernCharacter &b)
    {
        return {a.r - b.r, a.c1 - b.c1, a.ch2 - b.ch2};
    }
    friend ChernCharacter operator*(const Rational &q, const ChernCharacter &a)
    {
        return {q * a.r, q * a.c1, q * a.ch2};
    }
    friend bool operator==(const ChernCharacter &a, const ChernCharacter &b)
    {
        return a.r == b.r && a.c1 == b.c1 && a.ch2 == b.ch2;
    }
};

/// Numerical class of a pure 1-dimensional sheaf: curve class and Euler characteristic.
struct OneDimClass {
    DivisorClass curve;
    Rational chi;

    /// (0, C, K.C/2 + chi).
    [[nodiscard]] ChernCharacter to_character(const SurfaceLattice &S) const
    {
        validate(S);
        return {Rational(0), curve, Rational(S.intersect(S.canonical(), curve) / 2 + chi)};
    }

    void validate(const SurfaceLattice &S) const
    {
        S.require_dimension(curve, "curve class");
        if (curve.is_zero()) {
            raise(ErrorKind::InvalidInput, "curve class of a 1-dimensional class must be nonzero");
        }
    }

    friend bool operator==(const OneDimClass &a, const OneDimClass &b)
    {
        return a.curve == b.curve && a.chi == b.chi;
    }
};

inline Rational euler_char(const ChernCharacter &a, const SurfaceLattice &S)
{
    return euler_char(a.as_extended(), S);
}

inline void require_dimension(const ChernCharacter &a, const SurfaceLattice &S)
{
    S.require_dimension(a.c1, "c1");
}

inline void require_nonzero_rank(const ChernCharacter &a, std::string_view name)
{
    if (sgn(a.r) == 0) {
        raise(ErrorKind::ZeroRank, std::string(name) + " has rank 0");
    }
}

inline void require_positive_rank(const ChernCharacter &a, std::string_view name)
{
    require_nonzero_rank(a, name);
    if (sgn(a.r) < 0) {
        raise(ErrorKind::NonPositiveRank, std::string(name) + " has negative rank");
    }
}

/// Exponential e^M = (1, M, M^2/2).
inline ExtendedClass exponential(const DivisorClass &M, const SurfaceLattice &S)
{
    return {Rational(1), M, Rational(square(M, S) / 2)};
}

/// a . e^M = (r, c1 + rM, ch2 + c1.M + r M^2/2).
inline ChernCharacter twist(const ChernCharacter &a, const DivisorClass &M, const SurfaceLattice &S)
{
    require_dimension(a, S);
    S.require_dimension(M, "twist");
    return {a.r, a.c1 + a.r * M, a.ch2 + S.intersect(a.c1, M) + a.r * square(M, S) / 2};
}

inline Rational slope(const ChernCharacter &a, const DivisorClass &H, const SurfaceLattice &S)
{
    require_nonzero_rank(a, "slope argument");
    return S.intersect(a.c1, H) / a.r;
}

/// ch(O_H) = (0, H, -H^2/2).
inline ExtendedClass divisor_sheaf_class(const DivisorClass &H, const SurfaceLattice &S)
{
    return {Rational(0), H, Rational(-square(H, S) / 2)};
}

enum class Comparison { Destabilizes, Neutral, Stabilizes };

inline constexpr std::string_view to_string(Comparison c) noexcept
{
    switch (c) {
        case Comparison::Destabilizes: return "Destabilizes";
        case Comparison::Neutral: return "Neutral";
        case Comparison::Stabilizes: return "Stabilizes";
    }
    return "Unknown";
}

inline Comparison comparison_from_sign(int s) noexcept
{
    return s > 0 ? Comparison::Destabilizes : (s < 0 ? Comparison::Stabilizes : Comparison::Neutral);
}

struct TwistedGiesekerComparison {
    Comparison outcome;
    /// mu_H(a) - mu_H(v).
    Rational slope_diff;
    /// chi(a.L)/r(a) - chi(v.L)/r(v).
    Rational chi_diff;
    /// The t at which chi_diff + t * slope_diff changes sign, when slope_diff != 0.
    std::optional<Rational> crossing;
};

/// Lexicographic (slope, twisted reduced chi) comparison; this is the t >> 0
/// content of the L-twisted H-Gieseker inequality.
inline TwistedGiesekerComparison twisted_gieseker_compare(const ChernCharacter &a, const ChernCharacter &v,
                                                          const DivisorClass &L, const DivisorClass &H,
                                                          const SurfaceLattice &S)
{
    require_positive_rank(a, "subobject");
    require_positive_rank(v, "v");
    const Rational slope_diff = slope(a, H, S) - slope(v, H, S);
    const Rational chi_diff = euler_char(twist(a, L, S), S) / a.r - euler_char(twist(v, L, S), S) / v.r;
    TwistedGiesekerComparison out{Comparison::Neutral, slope_diff, chi_diff, std::nullopt};
    if (sgn(slope_diff) != 0) {
        out.outcome = comparison_from_sign(sgn(slope_diff));
        out.crossing = Rational(-chi_diff / slope_diff);
    } else {
        out.outcome = comparison_from_sign(sgn(chi_diff));
    }
    return out;
}

/// Sign of chi(a) (C_v.H) - chi(v) (C_a.H); positive means a has the larger
/// reduced Euler characteristic.
inline Comparison onedim_gieseker_compare(const OneDimClass &a, const OneDimClass &v, const DivisorClass &H,
                                          const SurfaceLattice &S)
{
    a.validate(S);
    v.validate(S);
    const Rational deg_a = S.intersect(a.curve, H);
    const Rational deg_v = S.intersect(v.curve, H);
    if (sgn(deg_a) <= 0 || sgn(deg_v) <= 0) {
        raise(ErrorKind::NonPositiveDegree, "1-dimensional classes must have positive degree against H");
    }
    return comparison_from_sign(sgn(Rational(a.chi * deg_v - v.chi * deg_a)));
}

/// chi(a)/r(a) == chi(v)/r(v), by cross multiplication.
inline bool reduced_chi_equal(const ChernCharacter &a, const ChernCharacter &v, const SurfaceLattice &S)
{
    require_nonzero_rank(a, "subobject");
    require_nonzero_rank(v, "v");
    return euler_char(a, S) * v.r == euler_char(v, S) * a.r;
}

/// chi(a)/r(a) >= chi(v)/r(v) for positive ranks.
inline bool reduced_chi_at_least(const ChernCharacter &a, const ChernCharacter &v, const SurfaceLattice &S)
{
    require_positive_rank(a, "subobject");
    require_positive_rank(v, "v");
    return euler_char(a, S) * v.r >= euler_char(v, S) * a.r;
}

struct DeterminantClasses {
    ExtendedClass u0;
    ExtendedClass u1;
};

/// ch(u_i) for u_i = -c0 h^i + chi(v h^i) [C_x], i = 0, 1, with h = [O_H].
inline DeterminantClasses det_bundle_classes(const ChernCharacter &v, const DivisorClass &H, const SurfaceLattice &S)
{
    require_dimension(v, S);
    require_nonzero_rank(v, "v");
    const ExtendedClass vv = v.as_extended();
    const ExtendedClass h = divisor_sheaf_class(H, S);
    const ExtendedClass pt = point_class(S);
    const Rational c0 = v.r;
    DeterminantClasses out{Rational(-c0) * unit_class(S) + euler_char(vv, S) * pt,
                           Rational(-c0) * h + euler_char(mul_extended(vv, h, S), S) * pt};
    return out;
}

/// d_t = -chi(v)/r(v) - (c1(v)/r(v)).(L + tH) + chi(O).
inline Rational orthogonal_degree4(const ChernCharacter &v, const DivisorClass &L, const DivisorClass &H,
                                   const Rational &t, const SurfaceLattice &S)
{
    require_dimension(v, S);
    require_nonzero_rank(v, "v");
    return -euler_char(v, S) / v.r - S.intersect(v.c1, L + t * H) / v.r + static_cast<long>(S.chi_O());
}

struct DetIdentity {
    ExtendedClass lhs;
    ExtendedClass rhs;

    [[nodiscard]] bool holds() const
    {
        return lhs == rhs;
    }
};

/// lhs = (ch(u0) + t ch(u1)) . td(X), rhs = -c0 (1, -K/2 + L + tH, d_t).
inline DetIdentity det_identity_check(const ChernCharacter &v, const DivisorClass &L, const DivisorClass &H,
                                      const Rational &t, const SurfaceLattice &S)
{
    const auto u = det_bundle_classes(v, H, S);
    const ExtendedClass lhs = mul_extended(u.u0 + t * u.u1, todd(S), S);
    const ExtendedClass alpha{Rational(1), Rational(-1, 2) * S.canonical() + L + t * H,
                              orthogonal_degree4(v, L, H, t, S)};
    return {lhs, Rational(-v.r) * alpha};
}

} // namespace wallcross

#endif
