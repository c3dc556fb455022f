// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "wallcross/random.hpp"
#include "wallcross/verify.hpp"
#include "wallcross/wallcross.hpp"

using namespace wallcross;

namespace
{

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome from_suites(const std::vector<verify::SuiteResult> &suites)
{
    std::size_t cases = 0;
    for (const auto &s : suites) {
        cases += s.cases;
        if (!s.passed()) {
            return {false, s.name + ": " + s.failures.front()};
        }
    }
    return {true, std::to_string(cases) + " checks"};
}

std::vector<Preset> presets()
{
    return {preset_p2(), preset_p1xp1(), preset_blowup_p2()};
}

Outcome enumeration()
{
    const auto P = preset_p1xp1();
    const ChernCharacter v{Rational(2), DivisorClass{0, 0}, Rational(-5)};
    const auto t0 = std::chrono::steady_clock::now();
    const auto E = enumerate_rank2_destabilizers(v, P.nef_directions, 3, P.lattice);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::set<std::vector<Rational>> rays, expected;
    for (const auto &r : rank2_walls_scenario().expected_rays) {
        expected.insert(r.coords());
    }
    std::set<Rational> squares;
    const Rational reduced = euler_char(v, P.lattice) / v.r;
    for (const auto &w : E.walls) {
        if (!w.ray) {
            return {false, "wall without a ray"};
        }
        rays.insert(w.ray->coords());
        if (w.wall.is_strict_gieseker) {
            return {false, "strict Gieseker wall " + format_divisor(*w.ray, P.basis)};
        }
        for (const auto &d : w.witnesses) {
            squares.insert(d.line_square);
            if (!is_integer(d.chi) || d.chi == reduced) {
                return {false, "witness chi " + to_string(d.chi)};
            }
        }
    }
    if (reduced != Rational(-3, 2)) {
        return {false, "chi(v)/r(v) = " + to_string(reduced)};
    }
    if (rays != expected || E.walls.size() != 5) {
        return {false, std::to_string(E.walls.size()) + " walls, ray set differs"};
    }
    if (squares != std::set<Rational>{Rational(-4), Rational(-2), Rational(0)}) {
        return {false, "unexpected L^2 values"};
    }
    if (seconds >= 1.0) {
        return {false, "runtime " + std::to_string(seconds) + " s"};
    }
    return {true, "5 walls, L^2 in {-4,-2,0}, none strict, " + std::to_string(seconds) + " s"};
}

Outcome det_identity()
{
    std::vector<verify::SuiteResult> out;
    for (const auto &P : presets()) {
        RandomClasses rng(1002);
        out.push_back(verify::det_identity(P.lattice, rng, 10, 20));
    }
    return from_suites(out);
}

Outcome riemann_roch()
{
    std::vector<verify::SuiteResult> out;
    for (const auto &P : presets()) {
        RandomClasses rng(1003);
        out.push_back(verify::pairing_riemann_roch(P.lattice, rng, 200));
    }
    return from_suites(out);
}

Outcome orthogonality()
{
    std::vector<verify::SuiteResult> out;
    for (const auto &P : presets()) {
        RandomClasses rng(1004);
        out.push_back(verify::orthogonality(P.lattice, rng, 1000));
    }
    return from_suites(out);
}

Outcome blowdown()
{
    return from_suites({verify::blowdown(10)});
}

// Sign-change roots of g on [lo, hi] after splitting at the given grid, bisected to tol.
std::vector<double> bisect_roots(const std::function<Rational(const Rational &)> &g, std::vector<Rational> grid,
                                 const Rational &tol)
{
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        Rational lo = grid[i], hi = grid[i + 1];
        int slo = sgn(g(lo));
        const int shi = sgn(g(hi));
        if (slo == 0) {
            roots.push_back(to_double(lo));
            continue;
        }
        if (shi == 0 || slo == shi) {
            continue;
        }
        while (hi - lo > tol) {
            const Rational mid = (lo + hi) / 2;
            const int sm = sgn(g(mid));
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            if (sm == slo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push_back(to_double(Rational((lo + hi) / 2)));
    }
    if (!grid.empty() && sgn(g(grid.back())) == 0) {
        roots.push_back(to_double(grid.back()));
    }
    return roots;
}

Rational to_rational(double x)
{
    return Rational(x);
}

Outcome maciocia()
{
    const Rational tol(1, 10000000);
    std::size_t triples = 0, heights = 0;
    for (const auto &P : {preset_p2(), preset_p1xp1()}) {
        const auto &S = P.lattice;
        RandomClasses rng(1006);
        for (int i = 0; i < 50; ++i) {
            const auto H = rng.ample_combination(S);
            FamilySpec F{FamilyKind::MaciociaPlane, rng.character(S.rank()), DivisorClass{}, {H}, {}};
            const auto G = verify::orthogonal_complement_vector(H, S);
            if (!G.is_zero()) {
                F.directions.push_back(G);
                F.extra.push_back(rng.rational());
            }
            const auto a = rng.character(S.rank());
            const auto c = maciocia_wall_circle(a, F, S);
            const auto &p = c.polynomial;
            const std::string where = P.name + " triple " + std::to_string(i);
            if (p.coeff(2, 0) != p.coeff(0, 2) || sgn(p.coeff(1, 1)) != 0) {
                return {false, where + ": polynomial not of circle form"};
            }
            ++triples;

            // Central-charge cross product, evaluated directly from the family.
            auto cross_at = [&](const Rational &Y) {
                return [&, Y](const Rational &x) {
                    const auto alpha = eval_family(F, {x, Y}, S).alpha;
                    const auto za = central_charge(a, alpha, H, S);
                    const auto zv = central_charge(F.character(), alpha, H, S);
                    return Rational(za.re * zv.im - zv.re * za.im);
                };
            };

            std::vector<Rational> ys;
            std::vector<std::vector<double>> predicted;
            Rational lo, hi;
            std::vector<Rational> splits;
            if (c.shape == CircleShape::Circle && sgn(*c.radius_squared()) > 0) {
                const Rational r2 = *c.radius_squared();
                const double R = std::sqrt(to_double(r2));
                lo = *c.center() - to_rational(R) - 2;
                hi = *c.center() + to_rational(R) + 2;
                splits.push_back(*c.center());
                for (long k = 1; k <= 10; ++k) {
                    const Rational Y = r2 * make_rational(k * k, 121);
                    ys.push_back(Y);
                    const double half = std::sqrt(to_double(Rational(r2 - Y)));
                    predicted.push_back({to_double(*c.center()) - half, to_double(*c.center()) + half});
                }
            } else {
                const Rational mid = c.shape == CircleShape::VerticalLine ? *c.center()
                                     : c.shape == CircleShape::Circle ? *c.center()
                                                                       : Rational(0);
                lo = mid - 10;
                hi = mid + 10;
                for (long k = 1; k <= 10; ++k) {
                    ys.push_back(make_rational(k, 3));
                    predicted.push_back(c.shape == CircleShape::VerticalLine ? std::vector<double>{to_double(mid)}
                                                                              : std::vector<double>{});
                }
            }
            for (std::size_t k = 0; k < ys.size(); ++k) {
                const auto g = cross_at(ys[k]);
                if (c.shape == CircleShape::Degenerate) {
                    if (sgn(g(lo)) != 0 || sgn(g(hi)) != 0 || sgn(g(Rational(1, 3))) != 0) {
                        return {false, where + ": degenerate wall with nonzero cross product"};
                    }
                    ++heights;
                    continue;
                }
                std::vector<Rational> grid = splits;
                for (long j = 0; j <= 200; ++j) {
                    grid.push_back(lo + (hi - lo) * make_rational(j, 200));
                }
                const auto roots = bisect_roots(g, grid, tol);
                if (roots.size() != predicted[k].size()) {
                    return {false, where + ": oracle found " + std::to_string(roots.size()) + " roots, circle predicts "
                                       + std::to_string(predicted[k].size())};
                }
                for (std::size_t m = 0; m < roots.size(); ++m) {
                    if (std::abs(roots[m] - predicted[k][m]) > 1e-6) {
                        return {false, where + ": root " + std::to_string(roots[m]) + " vs "
                                           + std::to_string(predicted[k][m])};
                    }
                }
                ++heights;
            }
        }
    }
    return {true, std::to_string(triples) + " triples, " + std::to_string(heights) + " heights"};
}

Outcome origin()
{
    const auto P = preset_p1xp1();
    const auto &S = P.lattice;
    RandomClasses rng(1007);
    std::size_t through = 0;
    for (int i = 0; i < 200; ++i) {
        // C = H1 + H2 has equal degree against (p, q) and (q, p).
        const long p = rng.integer(1, 4), q = rng.integer(1, 4);
        const FamilySpec F{FamilyKind::OneDimQuadrant, OneDimClass{DivisorClass{1, 1}, rng.positive_rational()},
                           DivisorClass{}, {DivisorClass{p, q}, DivisorClass{q, p}}, {}};
        auto a = rng.character(S.rank());
        if (i % 2 == 0) {
            a.r = 0;
        }
        const auto w = onedim_wall_line(a, F, S);
        const bool at_origin = sgn(w.coef_const) == 0;
        if (at_origin != (sgn(a.r) == 0)) {
            return {false, "producer " + std::to_string(i) + " rank " + to_string(a.r)};
        }
        through += at_origin ? 1 : 0;
    }
    return {true, "200 producers, " + std::to_string(through) + " through the origin"};
}

Outcome gieseker_consistency()
{
    const auto P = preset_p1xp1();
    const ChernCharacter v{Rational(2), DivisorClass{0, 0}, Rational(-5)};
    const ChernCharacter a{Rational(1), DivisorClass{1, -1}, Rational(0)};
    const DivisorClass Hplus{2, 1};
    const auto g = gieseker_wall_t(a, v, Hplus, P.lattice);
    const FamilySpec F{FamilyKind::OrthogonalQuadrant, v, DivisorClass{}, {Hplus, DivisorClass{1, 2}}, {}};
    const auto line = wall_line_quadrant(a, F, P.lattice);
    if (g.kind != GiesekerCrossing::Kind::Crossing || sgn(line.coef_s) == 0) {
        return {false, "no crossing"};
    }
    const Rational intercept = -line.coef_const / line.coef_s;
    if (*g.t != Rational(5, 2) || intercept != *g.t) {
        return {false, "t = " + to_string(*g.t) + ", s-intercept " + to_string(intercept)};
    }
    return {true, "t = 5/2 = s-intercept"};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"P1xP1 rank-2 enumeration (box 3)", enumeration},
        {"determinant identity, 3 presets x 10 v x 20 t", det_identity},
        {"Riemann-Roch pairing identity, 200 pairs per preset", riemann_roch},
        {"orthogonal family vectors pair to zero", orthogonality},
        {"blow-down scenario on Bl_p P2", blowdown},
        {"Maciocia circle form and bisection oracle", maciocia},
        {"1-dimensional origin criterion, 200 producers", origin},
        {"gieseker_wall_t matches the quadrant s-intercept", gieseker_consistency},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s [%zu] %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
