#ifndef WALLCROSS_WALLS_HPP
#define WALLCROSS_WALLS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "stability.hpp"

namespace wallcross
{

enum class WallStatus {
    Wall,
    /// The wall function vanishes identically (a proportional to v on the family).
    Degenerate,
    /// The wall function is a nonzero constant: no locus.
    NoWall,
};

inline constexpr std::string_view to_string(WallStatus s) noexcept
{
    switch (s) {
        case WallStatus::Wall: return "wall";
        case WallStatus::Degenerate: return "degenerate";
        case WallStatus::NoWall: return "no-wall";
    }
    return "unknown";
}

namespace detail
{

inline WallStatus classify_affine(const std::vector<Rational> &coefs, const Rational &constant)
{
    for (const auto &c : coefs) {
        if (sgn(c) != 0) {
            return WallStatus::Wall;
        }
    }
    return sgn(constant) == 0 ? WallStatus::Degenerate : WallStatus::NoWall;
}

} // namespace detail

/// coef_s * s + coef_t * t + coef_const = 0 in a two-parameter quadrant.
struct WallLine {
    Rational coef_s;
    Rational coef_t;
    Rational coef_const;
    ChernCharacter producer;
    bool normalized = false;
    WallStatus status = WallStatus::Wall;

    [[nodiscard]] Rational eval(const Rational &s, const Rational &t) const
    {
        return coef_s * s + coef_t * t + coef_const;
    }

    [[nodiscard]] WallLine normalized_form() const
    {
        auto c = primitive_integer_vector({coef_s, coef_t, coef_const});
        return {c[0], c[1], c[2], producer, true, status};
    }

    [[nodiscard]] bool through_origin() const
    {
        return status == WallStatus::Wall && sgn(coef_const) == 0;
    }
};

/// sum_k coefs[k] a_k + coef_const = 0 in an n-parameter cone.
struct WallHyperplane {
    std::vector<Rational> coefs;
    Rational coef_const;
    ChernCharacter producer;
    bool normalized = false;
    WallStatus status = WallStatus::Wall;

    [[nodiscard]] Rational eval(const std::vector<Rational> &point) const
    {
        Rational out = coef_const;
        for (std::size_t k = 0; k < coefs.size(); ++k) {
            out += coefs[k] * point.at(k);
        }
        return out;
    }

    [[nodiscard]] WallHyperplane normalized_form() const
    {
        auto all = coefs;
        all.push_back(coef_const);
        all = primitive_integer_vector(all);
        Rational c = all.back();
        all.pop_back();
        return {std::move(all), std::move(c), producer, true, status};
    }
};

namespace detail
{

/// <a, alpha> = kappa + delta.(L - K/2) + sum_k p_k delta.H_k for every vector of
/// an orthogonal family, with delta = c1(a) - (r(a)/r(v)) c1(v) and
/// kappa = ch2(a) - (r(a)/r(v)) ch2(v).
inline WallHyperplane orthogonal_wall(const ChernCharacter &a, const FamilySpec &F, const SurfaceLattice &S)
{
    validate_family(F, S);
    require_dimension(a, S);
    const auto &v = F.character();
    const Rational ratio = a.r / v.r;
    const DivisorClass delta = a.c1 - ratio * v.c1;
    const Rational kappa = a.ch2 - ratio * v.ch2;
    std::vector<Rational> coefs;
    coefs.reserve(F.directions.size());
    for (const auto &H : F.directions) {
        coefs.push_back(S.intersect(delta, H));
    }
    Rational constant = kappa + S.intersect(delta, F.twist_or_zero(S) - Rational(1, 2) * S.canonical());
    const auto status = classify_affine(coefs, constant);
    return {std::move(coefs), std::move(constant), a, false, status};
}

inline void require_kind(const FamilySpec &F, FamilyKind kind)
{
    if (F.kind != kind) {
        raise(ErrorKind::InvalidInput, "expected a " + std::string(to_string(kind)) + " family, got "
                                           + std::string(to_string(F.kind)));
    }
}

} // namespace detail

inline WallLine wall_line_quadrant(const ChernCharacter &a, const FamilySpec &F, const SurfaceLattice &S)
{
    detail::require_kind(F, FamilyKind::OrthogonalQuadrant);
    auto h = detail::orthogonal_wall(a, F, S);
    return {h.coefs[0], h.coefs[1], h.coef_const, a, false, h.status};
}

inline WallHyperplane wall_hyperplane_cone(const ChernCharacter &a, const FamilySpec &F, const SurfaceLattice &S)
{
    detail::require_kind(F, FamilyKind::OrthogonalCone);
    return detail::orthogonal_wall(a, F, S);
}

struct GiesekerCrossing {
    enum class Kind { Crossing, NoWall, Everywhere };
    Kind kind;
    std::optional<Rational> t;
};

/// t = -(chi(a)/r(a) - chi(v)/r(v)) / (mu_H+(a) - mu_H+(v)).
inline GiesekerCrossing gieseker_wall_t(const ChernCharacter &a, const ChernCharacter &v, const DivisorClass &Hplus,
                                        const SurfaceLattice &S)
{
    require_positive_rank(a, "subobject");
    require_positive_rank(v, "v");
    const Rational chi_diff = euler_char(a, S) / a.r - euler_char(v, S) / v.r;
    const Rational slope_diff = slope(a, Hplus, S) - slope(v, Hplus, S);
    if (sgn(slope_diff) == 0) {
        return {sgn(chi_diff) == 0 ? GiesekerCrossing::Kind::Everywhere : GiesekerCrossing::Kind::NoWall,
                std::nullopt};
    }
    return {GiesekerCrossing::Kind::Crossing, Rational(-chi_diff / slope_diff)};
}

enum class CircleShape { Circle, VerticalLine, Degenerate, NoWall };

inline constexpr std::string_view to_string(CircleShape s) noexcept
{
    switch (s) {
        case CircleShape::Circle: return "circle";
        case CircleShape::VerticalLine: return "vertical-line";
        case CircleShape::Degenerate: return "degenerate";
        case CircleShape::NoWall: return "no-wall";
    }
    return "unknown";
}

/// quad (x^2 + y^2) + lin_x x + const_ = 0 in the half plane y > 0.
struct WallCircle {
    CircleShape shape;
    Rational quad_coef;
    Rational lin_x;
    Rational const_;
    ChernCharacter producer;
    /// Full expansion of Re Z(a) Im Z(v) - Re Z(v) Im Z(a) in (x, y).
    Polynomial2 polynomial;

    [[nodiscard]] std::optional<Rational> center() const
    {
        if (shape == CircleShape::Circle) {
            return Rational(-lin_x / (2 * quad_coef));
        }
        if (shape == CircleShape::VerticalLine) {
            return Rational(-const_ / lin_x);
        }
        return std::nullopt;
    }

    [[nodiscard]] std::optional<Rational> radius_squared() const
    {
        if (shape != CircleShape::Circle) {
            return std::nullopt;
        }
        const Rational c = -lin_x / (2 * quad_coef);
        return Rational(c * c - const_ / quad_coef);
    }
};

namespace detail
{

/// Extended class whose entries are polynomials in (x, y).
using ClassPolynomial = std::map<Polynomial2::Monomial, ExtendedClass>;

inline void accumulate(ClassPolynomial &p, Polynomial2::Monomial m, const ExtendedClass &c)
{
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
    }
}

inline Polynomial2 pair_with(const ChernCharacter &a, const ClassPolynomial &p, const SurfaceLattice &S,
                             const Rational &scale)
{
    Polynomial2 out;
    for (const auto &[m, c] : p) {
        out.add_term(m, Rational(scale * poincare_pairing(a.as_extended(), c, S)));
    }
    return out;
}

/// alpha_{x,y} = (1, -beta_x, (beta_x^2 - y^2 H^2)/2) with beta_x = xH + B.
inline ClassPolynomial maciocia_alpha(const DivisorClass &H, const DivisorClass &B, const SurfaceLattice &S)
{
    const auto n = S.rank();
    const DivisorClass zero = DivisorClass::zero(n);
    const Rational HH = square(H, S);
    ClassPolynomial alpha;
    accumulate(alpha, {0, 0}, {Rational(1), -B, Rational(square(B, S) / 2)});
    accumulate(alpha, {1, 0}, {Rational(0), -H, S.intersect(H, B)});
    accumulate(alpha, {2, 0}, {Rational(0), zero, Rational(HH / 2)});
    accumulate(alpha, {0, 2}, {Rational(0), zero, Rational(-HH / 2)});
    return alpha;
}

} // namespace detail

/// Re Z(a) Im Z(v) - Re Z(v) Im Z(a) on a Maciocia half plane, as a polynomial in (x, y).
inline Polynomial2 maciocia_wall_polynomial(const ChernCharacter &a, const FamilySpec &F, const SurfaceLattice &S)
{
    detail::require_kind(F, FamilyKind::MaciociaPlane);
    validate_family(F, S);
    require_dimension(a, S);
    const auto &v = F.character();
    const auto &H = F.directions[0];
    DivisorClass B = DivisorClass::zero(S.rank());
    if (F.directions.size() == 2 && !F.extra.empty()) {
        B = F.extra[0] * F.directions[1];
    }
    const auto alpha = detail::maciocia_alpha(H, B, S);
    detail::ClassPolynomial alpha_H;
    for (const auto &[m, c] : alpha) {
        detail::accumulate(alpha_H, m, mul_extended(c, {Rational(0), H, Rational(0)}, S));
    }
    const Polynomial2 re_a = detail::pair_with(a, alpha, S, Rational(-1));
    const Polynomial2 im_a = detail::pair_with(a, alpha_H, S, Rational(1));
    const Polynomial2 re_v = detail::pair_with(v, alpha, S, Rational(-1));
    const Polynomial2 im_v = detail::pair_with(v, alpha_H, S, Rational(1));
    return re_a * im_v - re_v * im_a;
}

inline WallCircle maciocia_wall_circle(const ChernCharacter &a, const FamilySpec &F, const SurfaceLattice &S)
{
    Polynomial2 poly = maciocia_wall_polynomial(a, F, S);
    const Rational quad = poly.coeff(2, 0);
    for (const auto &[m, c] : poly.terms()) {
        const bool allowed = m == Polynomial2::Monomial{2, 0} || m == Polynomial2::Monomial{0, 2}
                             || m == Polynomial2::Monomial{1, 0} || m == Polynomial2::Monomial{0, 0};
        if (!allowed) {
            throw std::logic_error("maciocia wall polynomial has an unexpected monomial x^" + std::to_string(m.first)
                                   + " y^" + std::to_string(m.second));
        }
    }
    if (poly.coeff(0, 2) != quad) {
        throw std::logic_error("maciocia wall polynomial has unequal x^2 and y^2 coefficients");
    }
    WallCircle out{CircleShape::Circle, quad, poly.coeff(1, 0), poly.coeff(0, 0), a, std::move(poly)};
    if (sgn(out.quad_coef) == 0) {
        if (sgn(out.lin_x) != 0) {
            out.shape = CircleShape::VerticalLine;
        } else {
            out.shape = sgn(out.const_) == 0 ? CircleShape::Degenerate : CircleShape::NoWall;
        }
    }
    return out;
}

/// Wall of a producer for 1-dimensional v in the onedim-quadrant family with
/// D = sH' + tH and C.H = C.H':
///   s (chi(a) - r'(chi(O) - K^2/8) - (chi/CH) c'.H' + r'(chi/CH) K.H'/2)
/// + t (chi(a) - r'(chi(O) - K^2/8) - (chi/CH) c'.H  + r'(chi/CH) K.H/2) - r' chi/CH = 0.
/// This is (chi/CH) times the pairing of a against the unnormalized family vector.
inline WallLine onedim_wall_line(const ChernCharacter &a, const FamilySpec &F, const SurfaceLattice &S)
{
    detail::require_kind(F, FamilyKind::OneDimQuadrant);
    validate_family(F, S);
    require_dimension(a, S);
    const auto &v = F.onedim();
    const auto &Hp = F.directions[0];
    const auto &H = F.directions[1];
    const Rational CH = S.intersect(v.curve, H);
    const Rational CHp = S.intersect(v.curve, Hp);
    if (sgn(CH) == 0 || sgn(CHp) == 0) {
        raise(ErrorKind::ZeroDegree, "C.H = 0");
    }
    if (CH != CHp) {
        raise(ErrorKind::DegreeMismatch, "onedim wall line needs C.H = C.H' (got " + to_string(CH) + " and "
                                             + to_string(CHp) + ")");
    }
    const auto &K = S.canonical();
    const Rational ratio = v.chi / CH;
    const Rational base = euler_char(a, S) - a.r * (static_cast<long>(S.chi_O()) - square(K, S) / 8);
    Rational cs = base - ratio * S.intersect(a.c1, Hp) + a.r * ratio * S.intersect(K, Hp) / 2;
    Rational ct = base - ratio * S.intersect(a.c1, H) + a.r * ratio * S.intersect(K, H) / 2;
    Rational cc = -a.r * ratio;
    const auto status = detail::classify_affine({cs, ct}, cc);
    return {std::move(cs), std::move(ct), std::move(cc), a, false, status};
}

/// Hyperplane {H : (c1(A)/r(A) - c1(v)/r(v)).H = 0} in the ample cone.
struct GiesekerWall {
    /// Primitive integer coefficients of H -> delta.H in NS coordinates.
    std::vector<Rational> normal;
    ChernCharacter producer;
    /// Some destabilizer has chi(A)/r(A) = chi(v)/r(v).
    bool is_strict_gieseker = false;
    /// Some destabilizer has chi(A)/r(A) >= chi(v)/r(v).
    bool is_weak_gieseker = false;
};

/// A line bundle L of the normal form with 0 -> L -> E -> I_Z(-L) -> 0.
struct Destabilizer {
    DivisorClass line;
    /// L^2.
    Rational line_square;
    /// l(Z) = L^2 - ch2 of the normal form.
    Rational length;
    /// ch of the sub line bundle of E for the original (untwisted) v.
    ChernCharacter producer;
    Rational chi;
};

struct EnumeratedWall {
    GiesekerWall wall;
    /// Primitive polarization on the wall, when the cone is 2-dimensional.
    std::optional<DivisorClass> ray;
    std::vector<Destabilizer> witnesses;
};

struct Enumeration {
    std::vector<EnumeratedWall> walls;
    /// v was twisted by -M to reach c1 = 0.
    DivisorClass normal_form_twist;
    ChernCharacter normal_form;
    /// Smallest box bound for which the wall set is provably complete, if known.
    std::optional<long> certificate_bound;
    bool complete = false;
};

namespace detail
{

inline bool is_integral(const DivisorClass &d)
{
    return std::all_of(d.coords().begin(), d.coords().end(), [](const Rational &q) { return is_integer(q); });
}

inline bool meets_cone(const std::vector<Rational> &values)
{
    bool pos = false, neg = false;
    for (const auto &x : values) {
        const int s = sgn(x);
        if (s == 0) {
            return true;
        }
        pos = pos || s > 0;
        neg = neg || s < 0;
    }
    return pos && neg;
}

inline bool lex_less(const std::vector<Rational> &a, const std::vector<Rational> &b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool all_coordinates(const std::vector<DivisorClass> &ds, bool (*pred)(const DivisorClass &))
{
    return std::all_of(ds.begin(), ds.end(), pred);
}

} // namespace detail

/// Box bound beyond which no new wall rays can appear, for the lattice shapes
/// where this is provable: rank 1 positive, the hyperbolic plane with cone in
/// the first quadrant, and diag(1,-1) with cone inside {x >= |y|}.
inline std::optional<long> enumeration_certificate_bound(const Rational &ch2, const std::vector<DivisorClass> &dirs,
                                                         const SurfaceLattice &S)
{
    const auto &M = S.intersection_matrix();
    auto floor_of = [](const Rational &q) {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return f.get_si();
    };
    if (S.rank() == 1 && M[0][0] > 0) {
        return 0L;
    }
    if (S.rank() != 2) {
        return std::nullopt;
    }
    if (M[0][0] == 0 && M[1][1] == 0 && M[0][1] == 1) {
        const bool first_quadrant = detail::all_coordinates(
            dirs, [](const DivisorClass &d) { return sgn(d[0]) >= 0 && sgn(d[1]) >= 0; });
        if (!first_quadrant) {
            return std::nullopt;
        }
        if (sgn(ch2) > 0) {
            return 0L;
        }
        return std::max(1L, floor_of(Rational(-ch2 / 2)));
    }
    if (M[0][0] == 1 && M[1][1] == -1 && M[0][1] == 0) {
        const bool inside = detail::all_coordinates(dirs, [](const DivisorClass &d) {
            return d[0] >= abs(d[1]) && sgn(d[0]) > 0;
        });
        if (!inside) {
            return std::nullopt;
        }
        if (sgn(ch2) > 0) {
            return 0L;
        }
        return std::max(1L, floor_of(Rational(-ch2)));
    }
    return std::nullopt;
}

/// Rank-2 slope walls from line subbundles: integer L in [-B, B]^rank with
/// l(Z) = L^2 - ch2(v) a nonnegative integer and L orthogonal to some nonzero
/// nonnegative combination of the cone directions. v is first twisted to c1 = 0.
inline Enumeration enumerate_rank2_destabilizers(const ChernCharacter &v, const std::vector<DivisorClass> &directions,
                                                 long box, const SurfaceLattice &S)
{
    require_dimension(v, S);
    if (v.r != 2) {
        raise(ErrorKind::BadRank, "destabilizer enumeration needs rank 2, got " + to_string(v.r));
    }
    if (box < 0) {
        raise(ErrorKind::InvalidInput, "box bound must be nonnegative");
    }
    if (directions.empty()) {
        raise(ErrorKind::InvalidInput, "enumeration needs at least one cone direction");
    }
    for (std::size_t i = 0; i < directions.size(); ++i) {
        S.require_dimension(directions[i], "cone direction");
        if (directions[i].is_zero()) {
            raise(ErrorKind::InvalidInput, "cone direction " + std::to_string(i) + " is zero");
        }
        for (std::size_t j = i; j < directions.size(); ++j) {
            if (sgn(S.intersect(directions[i], directions[j])) < 0) {
                raise(ErrorKind::InvalidInput, "cone directions " + std::to_string(i) + " and " + std::to_string(j)
                                                   + " intersect negatively");
            }
        }
    }
    const DivisorClass M = v.c1 / Rational(2);
    if (!detail::is_integral(M)) {
        raise(ErrorKind::UnsupportedC1, "c1(v) is not twist-reachable from 0 (c1/2 not integral)");
    }
    const ChernCharacter normal = twist(v, -M, S);

    Enumeration out{{}, M, normal, enumeration_certificate_bound(normal.ch2, directions, S), false};
    out.complete = out.certificate_bound.has_value() && box >= *out.certificate_bound;

    const auto n = S.rank();
    std::vector<long> coords(n, -box);
    std::map<std::vector<Rational>, EnumeratedWall, bool (*)(const std::vector<Rational> &,
                                                              const std::vector<Rational> &)>
        by_normal(detail::lex_less);
    const ChernCharacter unit{Rational(1), DivisorClass::zero(n), Rational(0)};
    const Rational half_v = euler_char(v, S) / v.r;

    for (;;) {
        std::vector<Rational> qs(coords.begin(), coords.end());
        DivisorClass L(std::move(qs));
        if (!L.is_zero()) {
            const Rational L2 = square(L, S);
            const Rational length = L2 - normal.ch2;
            std::vector<Rational> values;
            values.reserve(directions.size());
            for (const auto &d : directions) {
                values.push_back(S.intersect(L, d));
            }
            if (sgn(length) >= 0 && is_integer(length) && detail::meets_cone(values)) {
                const ChernCharacter line_bundle = twist(unit, L, S);
                ChernCharacter producer = twist(line_bundle, M, S);
                Rational chi = euler_char(producer, S);
                auto key = primitive_integer_vector(S.dual(L));
                auto [it, inserted] = by_normal.try_emplace(key);
                auto &wall = it->second;
                if (inserted) {
                    wall.wall.normal = key;
                    wall.wall.producer = producer;
                    if (directions.size() == 2) {
                        Rational a = values[1];
                        Rational b = -values[0];
                        if (sgn(a) < 0 || sgn(b) < 0) {
                            a = -a;
                            b = -b;
                        }
                        wall.ray = DivisorClass(primitive_integer_vector((a * directions[0] + b * directions[1]).coords()));
                    }
                }
                wall.wall.is_strict_gieseker = wall.wall.is_strict_gieseker || chi == half_v;
                wall.wall.is_weak_gieseker = wall.wall.is_weak_gieseker || chi >= half_v;
                wall.witnesses.push_back({L, L2, length, std::move(producer), std::move(chi)});
            }
        }
        std::size_t k = 0;
        while (k < n && coords[k] == box) {
            coords[k] = -box;
            ++k;
        }
        if (k == n) {
            break;
        }
        ++coords[k];
    }

    for (auto &[key, wall] : by_normal) {
        std::sort(wall.witnesses.begin(), wall.witnesses.end(), [](const Destabilizer &x, const Destabilizer &y) {
            return detail::lex_less(x.line.coords(), y.line.coords());
        });
        wall.wall.producer = wall.witnesses.front().producer;
        out.walls.push_back(std::move(wall));
    }
    return out;
}

struct Crossing {
    /// Position on the segment, in [0, 1].
    Rational parameter;
    /// Family parameters at the crossing.
    std::vector<Rational> point;
    std::vector<ChernCharacter> producers;
    bool at_boundary = false;
    /// Bogomolov inequality holds at the crossing.
    bool admissible = true;
};

namespace detail
{

/// Function whose zero set is the wall of producer a in family F. For every
/// family except the Maciocia plane this is (scale) <a, alpha>, which is affine
/// in the parameters; for the Maciocia plane it is the central charge cross product.
inline Rational wall_function(const ChernCharacter &a, const FamilySpec &F, const std::vector<Rational> &params,
                              const SurfaceLattice &S)
{
    const auto point = eval_family(F, params, S);
    if (F.kind == FamilyKind::MaciociaPlane) {
        const auto &H = F.directions[0];
        const auto za = central_charge(a, point.alpha, H, S);
        const auto zv = central_charge(F.character(), point.alpha, H, S);
        return za.re * zv.im - zv.re * za.im;
    }
    return point.scale * poincare_pairing(a.as_extended(), point.alpha.as_extended(), S);
}

inline std::vector<Rational> lerp(const std::vector<Rational> &p, const std::vector<Rational> &q, const Rational &l)
{
    std::vector<Rational> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.emplace_back(p[i] + l * (q[i] - p[i]));
    }
    return out;
}

} // namespace detail

/// Exact crossings of each candidate's wall with the segment start -> end,
/// sorted by position, with coincident crossings merged.
inline std::vector<Crossing> segment_scan(const FamilySpec &F, const std::vector<Rational> &start,
                                          const std::vector<Rational> &end,
                                          const std::vector<ChernCharacter> &candidates, const SurfaceLattice &S)
{
    validate_family(F, S);
    if (start.size() != param_count(F) || end.size() != param_count(F)) {
        raise(ErrorKind::BadParamCount, "segment endpoints need " + std::to_string(param_count(F)) + " parameters");
    }
    for (const auto *p : {&start, &end}) {
        if (!bogomolov_ok(eval_family(F, *p, S).alpha, S).ok) {
            raise(ErrorKind::InadmissibleEndpoint, "segment endpoint violates the Bogomolov inequality");
        }
    }

    std::map<Rational, Crossing> found;
    const Rational half(1, 2);
    for (const auto &a : candidates) {
        require_dimension(a, S);
        auto g = [&](const Rational &l) { return detail::wall_function(a, F, detail::lerp(start, end, l), S); };
        // g is a polynomial of degree <= 2 along the segment: interpolate at 0, 1/2, 1.
        const Rational g0 = g(Rational(0)), gh = g(half), g1 = g(Rational(1));
        const Rational c2 = 2 * g0 - 4 * gh + 2 * g1;
        const Rational c1 = -3 * g0 + 4 * gh - g1;
        const Rational &c0 = g0;
        for (const Rational &probe : {Rational(1, 3), Rational(3, 4)}) {
            if (g(probe) != c0 + c1 * probe + c2 * probe * probe) {
                throw std::logic_error("wall function is not quadratic along the segment");
            }
        }
        std::vector<Rational> roots;
        if (sgn(c2) == 0) {
            if (sgn(c1) == 0) {
                continue;
            }
            roots.emplace_back(-c0 / c1);
        } else {
            const Rational disc = c1 * c1 - 4 * c2 * c0;
            if (sgn(disc) < 0) {
                continue;
            }
            const auto root = rational_sqrt(disc);
            if (!root) {
                raise(ErrorKind::IrrationalCrossing, "wall crosses the segment at an irrational parameter");
            }
            roots.emplace_back((-c1 - *root) / (2 * c2));
            if (sgn(*root) != 0) {
                roots.emplace_back((-c1 + *root) / (2 * c2));
            }
        }
        for (const auto &l : roots) {
            if (sgn(l) < 0 || l > 1) {
                continue;
            }
            auto [it, inserted] = found.try_emplace(l);
            auto &c = it->second;
            if (inserted) {
                c.parameter = l;
                c.point = detail::lerp(start, end, l);
                c.at_boundary = sgn(l) == 0 || l == 1;
                c.admissible = bogomolov_ok(eval_family(F, c.point, S).alpha, S).ok;
            }
            c.producers.push_back(a);
        }
    }
    std::vector<Crossing> out;
    out.reserve(found.size());
    for (auto &[l, c] : found) {
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace wallcross

#endif
