#ifndef WALLCROSS_RANDOM_HPP
#define WALLCROSS_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "characters.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace wallcross
{

/// Seeded source of small random rationals and classes, for property suites.
class RandomClasses
{
public:
    explicit RandomClasses(std::uint64_t seed) : m_engine(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(m_engine);
    }

    /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
    Rational rational(long num_bound = 9, long den_bound = 6)
    {
        return make_rational(integer(-num_bound, num_bound), integer(1, den_bound));
    }

    Rational nonzero_rational(long num_bound = 9, long den_bound = 6)
    {
        Rational q;
        do {
            q = rational(num_bound, den_bound);
        } while (sgn(q) == 0);
        return q;
    }

    Rational positive_rational(long num_bound = 9, long den_bound = 6)
    {
        return make_rational(integer(1, num_bound), integer(1, den_bound));
    }

    DivisorClass divisor(std::size_t n, long num_bound = 5, long den_bound = 3)
    {
        std::vector<Rational> c;
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            c.push_back(rational(num_bound, den_bound));
        }
        return DivisorClass(std::move(c));
    }

    DivisorClass integral_divisor(std::size_t n, long bound = 4)
    {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < n; ++i) {
            c.emplace_back(integer(-bound, bound));
        }
        return DivisorClass(std::move(c));
    }

    ExtendedClass extended(std::size_t n)
    {
        return {rational(), divisor(n), rational()};
    }

    ChernCharacter character(std::size_t n)
    {
        return {rational(4, 2), divisor(n), rational()};
    }

    /// Integral class with rank in [1, max_rank].
    ChernCharacter positive_rank_character(std::size_t n, long max_rank = 4)
    {
        return {Rational(integer(1, max_rank)), integral_divisor(n), make_rational(integer(-12, 12), 2)};
    }

    ChernCharacter nonzero_rank_character(std::size_t n)
    {
        return {nonzero_rational(4, 2), divisor(n), rational()};
    }

    /// Positive combination of the declared ample generators, never zero.
    DivisorClass ample_combination(const SurfaceLattice &S, long bound = 3)
    {
        DivisorClass out = DivisorClass::zero(S.rank());
        for (const auto &g : S.ample_generators()) {
            out += Rational(integer(0, bound)) * g;
        }
        if (out.is_zero()) {
            out = S.ample_generators().front();
        }
        return out;
    }

    std::mt19937_64 &engine() noexcept
    {
        return m_engine;
    }

private:
    std::mt19937_64 m_engine;
};

} // namespace wallcross

#endif
