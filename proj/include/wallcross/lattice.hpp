#ifndef WALLCROSS_LATTICE_HPP
#define WALLCROSS_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace wallcross
{

/// Rational coordinate vector in a fixed basis of NS(X).
class DivisorClass
{
public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rational> coords) : m_coords(std::move(coords)) {}
    DivisorClass(std::initializer_list<long> coords)
    {
        m_coords.reserve(coords.size());
        for (long c : coords) {
            m_coords.emplace_back(c);
        }
    }

    static DivisorClass zero(std::size_t n)
    {
        return DivisorClass(std::vector<Rational>(n, Rational(0)));
    }

    [[nodiscard]] std::size_t size() const noexcept
    {
        return m_coords.size();
    }
    [[nodiscard]] const Rational &operator[](std::size_t i) const
    {
        return m_coords[i];
    }
    [[nodiscard]] const std::vector<Rational> &coords() const noexcept
    {
        return m_coords;
    }
    [[nodiscard]] bool is_zero() const
    {
        for (const auto &c : m_coords) {
            if (sgn(c) != 0) {
                return false;
            }
        }
        return true;
    }

    DivisorClass &operator+=(const DivisorClass &o)
    {
        check_size(o);
        for (std::size_t i = 0; i < m_coords.size(); ++i) {
            m_coords[i] += o.m_coords[i];
        }
        return *this;
    }
    DivisorClass &operator-=(const DivisorClass &o)
    {
        check_size(o);
        for (std::size_t i = 0; i < m_coords.size(); ++i) {
            m_coords[i] -= o.m_coords[i];
        }
        return *this;
    }
    DivisorClass &operator*=(const Rational &q)
    {
        for (auto &c : m_coords) {
            c *= q;
        }
        return *this;
    }

    friend DivisorClass operator+(DivisorClass a, const DivisorClass &b)
    {
        return a += b;
    }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass &b)
    {
        return a -= b;
    }
    friend DivisorClass operator-(DivisorClass a)
    {
        for (auto &c : a.m_coords) {
            c = -c;
        }
        return a;
    }
    friend DivisorClass operator*(const Rational &q, DivisorClass a)
    {
        return a *= q;
    }
    friend DivisorClass operator*(DivisorClass a, const Rational &q)
    {
        return a *= q;
    }
    friend DivisorClass operator/(DivisorClass a, const Rational &q)
    {
        if (sgn(q) == 0) {
            raise(ErrorKind::InvalidInput, "division of a divisor class by zero");
        }
        return a *= Rational(1 / q);
    }
    friend bool operator==(const DivisorClass &a, const DivisorClass &b)
    {
        return a.m_coords == b.m_coords;
    }

private:
    void check_size(const DivisorClass &o) const
    {
        if (o.size() != size()) {
            raise(ErrorKind::DimensionMismatch, "divisor classes of lengths " + std::to_string(size()) + " and "
                                                    + std::to_string(o.size()));
        }
    }

    std::vector<Rational> m_coords;
};

/// Element (u0, u2, u4) of H^0 + NS + H^4 with rational coefficients.
struct ExtendedClass {
    Rational deg0;
    DivisorClass deg2;
    Rational deg4;

    ExtendedClass &operator+=(const ExtendedClass &o)
    {
        deg0 += o.deg0;
        deg2 += o.deg2;
        deg4 += o.deg4;
        return *this;
    }
    ExtendedClass &operator-=(const ExtendedClass &o)
    {
        deg0 -= o.deg0;
        deg2 -= o.deg2;
        deg4 -= o.deg4;
        return *this;
    }
    friend ExtendedClass operator+(ExtendedClass a, const ExtendedClass &b)
    {
        return a += b;
    }
    friend ExtendedClass operator-(ExtendedClass a, const ExtendedClass &b)
    {
        return a -= b;
    }
    friend ExtendedClass operator*(const Rational &q, ExtendedClass a)
    {
        a.deg0 *= q;
        a.deg2 *= q;
        a.deg4 *= q;
        return a;
    }
    friend bool operator==(const ExtendedClass &a, const ExtendedClass &b)
    {
        return a.deg0 == b.deg0 && a.deg2 == b.deg2 && a.deg4 == b.deg4;
    }
};

/// Finite presentation of a surface: intersection form on NS(X), K_X, chi(O_X)
/// and a user-declared cone inside Amp(X). Immutable after construction.
class SurfaceLattice
{
public:
    using Matrix = std::vector<std::vector<std::int64_t>>;

    SurfaceLattice(std::string label, Matrix intersection_matrix, DivisorClass canonical, std::int64_t chi_O,
                   std::vector<DivisorClass> ample_generators)
        : m_label(std::move(label)), m_matrix(std::move(intersection_matrix)), m_canonical(std::move(canonical)),
          m_chi_O(chi_O), m_ample(std::move(ample_generators))
    {
        validate();
    }

    [[nodiscard]] const std::string &label() const noexcept
    {
        return m_label;
    }
    [[nodiscard]] std::size_t rank() const noexcept
    {
        return m_matrix.size();
    }
    [[nodiscard]] const Matrix &intersection_matrix() const noexcept
    {
        return m_matrix;
    }
    [[nodiscard]] std::int64_t form(std::size_t i, std::size_t j) const
    {
        return m_matrix[i][j];
    }
    [[nodiscard]] const DivisorClass &canonical() const noexcept
    {
        return m_canonical;
    }
    [[nodiscard]] std::int64_t chi_O() const noexcept
    {
        return m_chi_O;
    }
    [[nodiscard]] const std::vector<DivisorClass> &ample_generators() const noexcept
    {
        return m_ample;
    }

    void require_dimension(const DivisorClass &d, const char *what = "divisor class") const
    {
        if (d.size() != rank()) {
            raise(ErrorKind::DimensionMismatch, std::string(what) + " has " + std::to_string(d.size())
                                                    + " coordinates, surface rank is " + std::to_string(rank()));
        }
    }

    [[nodiscard]] Rational intersect(const DivisorClass &a, const DivisorClass &b) const
    {
        require_dimension(a);
        require_dimension(b);
        Rational out = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (sgn(a[i]) == 0) {
                continue;
            }
            Rational row = 0;
            for (std::size_t j = 0; j < rank(); ++j) {
                if (m_matrix[i][j] != 0) {
                    row += Rational(static_cast<long>(m_matrix[i][j])) * b[j];
                }
            }
            out += a[i] * row;
        }
        return out;
    }

    /// Row vector d^T M, i.e. the linear form H -> d.H in coordinates.
    [[nodiscard]] std::vector<Rational> dual(const DivisorClass &d) const
    {
        require_dimension(d);
        std::vector<Rational> out(rank(), Rational(0));
        for (std::size_t j = 0; j < rank(); ++j) {
            for (std::size_t i = 0; i < rank(); ++i) {
                out[j] += d[i] * Rational(static_cast<long>(m_matrix[i][j]));
            }
        }
        return out;
    }

private:
    void validate() const
    {
        const auto n = m_matrix.size();
        if (n == 0) {
            raise(ErrorKind::InvalidInput, "ns_rank must be positive");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (m_matrix[i].size() != n) {
                raise(ErrorKind::DimensionMismatch,
                      "intersection_matrix row " + std::to_string(i) + " has " + std::to_string(m_matrix[i].size())
                          + " entries, expected " + std::to_string(n));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (m_matrix[i][j] != m_matrix[j][i]) {
                    raise(ErrorKind::InvalidInput, "intersection_matrix is not symmetric at (" + std::to_string(i)
                                                       + "," + std::to_string(j) + ")");
                }
            }
        }
        require_dimension(m_canonical, "canonical");
        if (m_ample.empty()) {
            raise(ErrorKind::InvalidInput, "ample_generators must be nonempty");
        }
        for (std::size_t i = 0; i < m_ample.size(); ++i) {
            require_dimension(m_ample[i], "ample generator");
            for (std::size_t j = i; j < m_ample.size(); ++j) {
                if (sgn(intersect(m_ample[i], m_ample[j])) <= 0) {
                    raise(ErrorKind::InvalidInput, "ample generators " + std::to_string(i) + " and "
                                                       + std::to_string(j) + " do not intersect positively");
                }
            }
        }
    }

    std::string m_label;
    Matrix m_matrix;
    DivisorClass m_canonical;
    std::int64_t m_chi_O;
    std::vector<DivisorClass> m_ample;
};

inline Rational intersect(const DivisorClass &a, const DivisorClass &b, const SurfaceLattice &S)
{
    return S.intersect(a, b);
}

inline Rational square(const DivisorClass &a, const SurfaceLattice &S)
{
    return S.intersect(a, a);
}

/// Necessary conditions for d to sit inside the declared ample cone:
/// d.d > 0 and d.g > 0 for every declared generator g.
inline bool passes_ample_check(const DivisorClass &d, const SurfaceLattice &S)
{
    S.require_dimension(d);
    if (sgn(square(d, S)) <= 0) {
        return false;
    }
    for (const auto &g : S.ample_generators()) {
        if (sgn(S.intersect(d, g)) <= 0) {
            return false;
        }
    }
    return true;
}

inline void require_ample_check(const DivisorClass &d, const SurfaceLattice &S, const std::string &what)
{
    if (!passes_ample_check(d, S)) {
        raise(ErrorKind::InvalidInput, what + " fails the positivity check against the declared ample cone");
    }
}

inline void require_dimension(const ExtendedClass &u, const SurfaceLattice &S)
{
    S.require_dimension(u.deg2, "extended class");
}

inline ExtendedClass zero_class(const SurfaceLattice &S)
{
    return {Rational(0), DivisorClass::zero(S.rank()), Rational(0)};
}

inline ExtendedClass unit_class(const SurfaceLattice &S)
{
    return {Rational(1), DivisorClass::zero(S.rank()), Rational(0)};
}

/// Class of a point, [C_x] = (0, 0, 1).
inline ExtendedClass point_class(const SurfaceLattice &S)
{
    return {Rational(0), DivisorClass::zero(S.rank()), Rational(1)};
}

/// Cup product truncated above degree 4.
inline ExtendedClass mul_extended(const ExtendedClass &u, const ExtendedClass &w, const SurfaceLattice &S)
{
    require_dimension(u, S);
    require_dimension(w, S);
    return {u.deg0 * w.deg0, u.deg0 * w.deg2 + w.deg0 * u.deg2,
            u.deg0 * w.deg4 + S.intersect(u.deg2, w.deg2) + u.deg4 * w.deg0};
}

inline Rational poincare_pairing(const ExtendedClass &u, const ExtendedClass &w, const SurfaceLattice &S)
{
    require_dimension(u, S);
    require_dimension(w, S);
    return u.deg0 * w.deg4 + S.intersect(u.deg2, w.deg2) + u.deg4 * w.deg0;
}

inline ExtendedClass todd(const SurfaceLattice &S)
{
    return {Rational(1), Rational(-1, 2) * S.canonical(), Rational(static_cast<long>(S.chi_O()))};
}

inline ExtendedClass todd_inverse(const SurfaceLattice &S)
{
    const auto &K = S.canonical();
    return {Rational(1), Rational(1, 2) * K,
            Rational(square(K, S) / 4) - Rational(static_cast<long>(S.chi_O()))};
}

/// chi(u) = integral of u . td(X).
inline Rational euler_char(const ExtendedClass &u, const SurfaceLattice &S)
{
    require_dimension(u, S);
    return u.deg4 - S.intersect(u.deg2, S.canonical()) / 2 + u.deg0 * static_cast<long>(S.chi_O());
}

} // namespace wallcross

#endif
