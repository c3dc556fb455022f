#ifndef WALLCROSS_POLYNOMIAL_HPP
#define WALLCROSS_POLYNOMIAL_HPP

#include <map>
#include <utility>

#include "rational.hpp"

namespace wallcross
{

/// Sparse bivariate polynomial in (x, y) with rational coefficients.
class Polynomial2
{
public:
    using Monomial = std::pair<int, int>;

    Polynomial2() = default;

    static Polynomial2 constant(const Rational &c)
    {
        Polynomial2 p;
        p.add_term({0, 0}, c);
        return p;
    }

    static Polynomial2 monomial(int i, int j, const Rational &c = Rational(1))
    {
        Polynomial2 p;
        p.add_term({i, j}, c);
        return p;
    }

    void add_term(Monomial m, const Rational &c)
    {
        if (sgn(c) == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) {
                m_terms.erase(it);
            }
        }
    }

    [[nodiscard]] Rational coeff(int i, int j) const
    {
        auto it = m_terms.find({i, j});
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] const std::map<Monomial, Rational> &terms() const noexcept
    {
        return m_terms;
    }

    [[nodiscard]] bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    [[nodiscard]] Rational eval(const Rational &x, const Rational &y) const
    {
        Rational out = 0;
        for (const auto &[m, c] : m_terms) {
            Rational term = c;
            for (int k = 0; k < m.first; ++k) {
                term *= x;
            }
            for (int k = 0; k < m.second; ++k) {
                term *= y;
            }
            out += term;
        }
        return out;
    }

    Polynomial2 &operator+=(const Polynomial2 &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add_term(m, c);
        }
        return *this;
    }
    Polynomial2 &operator-=(const Polynomial2 &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add_term(m, Rational(-c));
        }
        return *this;
    }
    friend Polynomial2 operator+(Polynomial2 a, const Polynomial2 &b)
    {
        return a += b;
    }
    friend Polynomial2 operator-(Polynomial2 a, const Polynomial2 &b)
    {
        return a -= b;
    }
    friend Polynomial2 operator*(const Polynomial2 &a, const Polynomial2 &b)
    {
        Polynomial2 out;
        for (const auto &[ma, ca] : a.m_terms) {
            for (const auto &[mb, cb] : b.m_terms) {
                out.add_term({ma.first + mb.first, ma.second + mb.second}, Rational(ca * cb));
            }
        }
        return out;
    }
    friend bool operator==(const Polynomial2 &a, const Polynomial2 &b)
    {
        return a.m_terms == b.m_terms;
    }

private:
    std::map<Monomial, Rational> m_terms;
};

} // namespace wallcross

#endif
