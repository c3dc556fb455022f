#ifndef WALLCROSS_NOTATION_HPP
#define WALLCROSS_NOTATION_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace wallcross
{

/// Command-line notation for classes. Column numbers in errors are 1-based
/// and refer to the full argument string.
///
///   divisor:   2H1+H2, H1-1/2H2, 3*h, [1,-1], 0
///   character: r,c1,ch2 (c1 a divisor) or r,x1,..,xn,ch2
///   onedim:    C,chi
///   params:    q1,q2,...
class Notation
{
public:
    Notation(std::size_t rank, std::map<std::string, DivisorClass> names)
        : m_rank(rank), m_names(std::move(names))
    {
    }

    [[nodiscard]] DivisorClass divisor(std::string_view text) const
    {
        return divisor_at(text, 0, text);
    }

    [[nodiscard]] std::vector<Rational> rationals(std::string_view text) const
    {
        std::vector<Rational> out;
        for (const auto &f : split_top(text)) {
            out.push_back(rational_at(f.text, f.offset, text));
        }
        return out;
    }

    [[nodiscard]] ChernCharacter character(std::string_view text) const
    {
        const auto fields = split_top(text);
        if (fields.size() == 3) {
            return {rational_at(fields[0].text, fields[0].offset, text),
                    divisor_at(fields[1].text, fields[1].offset, text),
                    rational_at(fields[2].text, fields[2].offset, text)};
        }
        if (fields.size() == m_rank + 2) {
            std::vector<Rational> c1;
            for (std::size_t i = 1; i <= m_rank; ++i) {
                c1.push_back(rational_at(fields[i].text, fields[i].offset, text));
            }
            return {rational_at(fields[0].text, fields[0].offset, text), DivisorClass(std::move(c1)),
                    rational_at(fields.back().text, fields.back().offset, text)};
        }
        fail(text, text.size(), "expected 'r,c1,ch2' or " + std::to_string(m_rank + 2) + " comma-separated values, got "
                                    + std::to_string(fields.size()) + " fields");
    }

    [[nodiscard]] OneDimClass onedim(std::string_view text) const
    {
        const auto fields = split_top(text);
        if (fields.size() != 2) {
            fail(text, text.size(), "expected 'C,chi', got " + std::to_string(fields.size()) + " fields");
        }
        return {divisor_at(fields[0].text, fields[0].offset, text), rational_at(fields[1].text, fields[1].offset, text)};
    }

private:
    struct Field {
        std::string_view text;
        std::size_t offset;
    };

    [[noreturn]] static void fail(std::string_view whole, std::size_t pos, const std::string &what)
    {
        raise(ErrorKind::InvalidInput, "in '" + std::string(whole) + "' at column " + std::to_string(pos + 1) + ": " + what);
    }

    static std::vector<Field> split_top(std::string_view text)
    {
        std::vector<Field> out;
        int depth = 0;
        std::size_t begin = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '[') {
                ++depth;
            } else if (text[i] == ']') {
                if (depth == 0) {
                    fail(text, i, "unbalanced ']'");
                }
                --depth;
            } else if (text[i] == ',' && depth == 0) {
                out.push_back({text.substr(begin, i - begin), begin});
                begin = i + 1;
            }
        }
        if (depth != 0) {
            fail(text, text.size(), "missing ']'");
        }
        out.push_back({text.substr(begin), begin});
        return out;
    }

    static Rational rational_at(std::string_view field, std::size_t offset, std::string_view whole)
    {
        std::size_t lead = 0;
        while (lead < field.size() && field[lead] == ' ') {
            ++lead;
        }
        std::size_t trail = field.size();
        while (trail > lead && field[trail - 1] == ' ') {
            --trail;
        }
        const auto core = field.substr(lead, trail - lead);
        if (auto err = rational_syntax_error(core)) {
            // Shift the column reported by the rational parser to the full string.
            const auto at = err->rfind("column ");
            if (at != std::string::npos) {
                const auto col = std::stoul(err->substr(at + 7));
                fail(whole, offset + lead + col - 1, err->substr(0, at - 4));
            }
            fail(whole, offset + lead, *err);
        }
        return parse_rational(core);
    }

    DivisorClass divisor_at(std::string_view field, std::size_t offset, std::string_view whole) const
    {
        std::size_t i = 0;
        auto skip = [&] {
            while (i < field.size() && field[i] == ' ') {
                ++i;
            }
        };
        skip();
        if (i < field.size() && field[i] == '[') {
            const auto close = field.find(']', i);
            if (close == std::string_view::npos) {
                fail(whole, offset + field.size(), "missing ']'");
            }
            std::size_t after = close + 1;
            while (after < field.size() && field[after] == ' ') {
                ++after;
            }
            if (after != field.size()) {
                fail(whole, offset + after, "unexpected text after ']'");
            }
            const auto inner = field.substr(i + 1, close - i - 1);
            std::vector<Rational> coords;
            if (inner.find_first_not_of(' ') != std::string_view::npos) {
                for (const auto &f : split_top(inner)) {
                    coords.push_back(rational_at(f.text, offset + i + 1 + f.offset, whole));
                }
            }
            if (coords.size() != m_rank) {
                raise(ErrorKind::DimensionMismatch, "in '" + std::string(whole) + "' at column "
                                                        + std::to_string(offset + i + 1) + ": vector has "
                                                        + std::to_string(coords.size()) + " coordinates, surface rank is "
                                                        + std::to_string(m_rank));
            }
            return DivisorClass(std::move(coords));
        }
        if (i == field.size()) {
            fail(whole, offset + i, "empty divisor expression");
        }

        DivisorClass out = DivisorClass::zero(m_rank);
        bool first = true;
        while (true) {
            skip();
            if (i == field.size()) {
                break;
            }
            Rational sign(1);
            if (field[i] == '+' || field[i] == '-') {
                sign = field[i] == '-' ? Rational(-1) : Rational(1);
                ++i;
                skip();
            } else if (!first) {
                fail(whole, offset + i, "expected '+' or '-'");
            }
            first = false;
            const std::size_t term_start = i;
            std::size_t j = i;
            while (j < field.size() && (std::isdigit(static_cast<unsigned char>(field[j])) || field[j] == '/')) {
                ++j;
            }
            Rational coef(1);
            const bool has_coef = j > i;
            if (has_coef) {
                coef = rational_at(field.substr(i, j - i), offset + i, whole);
                i = j;
                skip();
                if (i < field.size() && field[i] == '*') {
                    ++i;
                    skip();
                }
            }
            std::size_t k = i;
            while (k < field.size() && (std::isalnum(static_cast<unsigned char>(field[k])) || field[k] == '_')
                   && !(k == i && std::isdigit(static_cast<unsigned char>(field[k])))) {
                ++k;
            }
            if (k == i) {
                if (!has_coef) {
                    fail(whole, offset + i, i < field.size() ? "unexpected character '" + std::string(1, field[i]) + "'"
                                                             : std::string("missing term"));
                }
                if (m_rank == 1) {
                    out += sign * coef * DivisorClass{1};
                } else if (sgn(coef) != 0) {
                    fail(whole, offset + term_start, "bare number is only allowed as 0 on a surface of rank > 1");
                }
                continue;
            }
            const std::string name(field.substr(i, k - i));
            auto it = m_names.find(name);
            if (it == m_names.end()) {
                fail(whole, offset + i, "unknown class name '" + name + "'");
            }
            out += (sign * coef) * it->second;
            i = k;
        }
        return out;
    }

    std::size_t m_rank;
    std::map<std::string, DivisorClass> m_names;
};

/// 2H1+H2 style rendering over the basis names, or [..] when none are known.
inline std::string format_divisor(const DivisorClass &d, const std::vector<std::string> &basis)
{
    if (basis.size() != d.size()) {
        std::string out = "[";
        for (std::size_t i = 0; i < d.size(); ++i) {
            out += (i == 0 ? "" : ",") + to_string(d[i]);
        }
        return out + "]";
    }
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Rational &c = d[i];
        if (sgn(c) == 0) {
            continue;
        }
        const Rational mag = abs(c);
        out += sgn(c) < 0 ? "-" : (out.empty() ? "" : "+");
        if (mag != 1) {
            out += to_string(mag);
        }
        out += basis[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace wallcross

#endif
