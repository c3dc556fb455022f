#ifndef WALLCROSS_IO_HPP
#define WALLCROSS_IO_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "characters.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "rational.hpp"
#include "stability.hpp"
#include "walls.hpp"

namespace wallcross::io
{

using json = nlohmann::ordered_json;

// Rationals are written as strings; integers are also accepted on input.

inline json to_json(const Rational &q)
{
    return to_string(q);
}

inline Rational rational_from_json(const json &j, const std::string &path)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (auto err = rational_syntax_error(s)) {
            raise(ErrorKind::InvalidInput, path + ": invalid rational '" + s + "': " + *err);
        }
        return parse_rational(s);
    }
    if (j.is_number_integer()) {
        return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_number_unsigned()) {
        return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    }
    raise(ErrorKind::InvalidInput, path + ": expected a rational as \"p/q\" string or integer");
}

inline std::int64_t integer_from_json(const json &j, const std::string &path)
{
    if (!j.is_number_integer()) {
        raise(ErrorKind::InvalidInput, path + ": expected an integer");
    }
    return j.get<std::int64_t>();
}

inline const json &field(const json &j, const char *key, const std::string &path)
{
    if (!j.is_object()) {
        raise(ErrorKind::InvalidInput, path + ": expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        raise(ErrorKind::InvalidInput, path + ": missing field '" + key + "'");
    }
    return *it;
}

inline const json &array_at(const json &j, const std::string &path)
{
    if (!j.is_array()) {
        raise(ErrorKind::InvalidInput, path + ": expected an array");
    }
    return j;
}

inline json to_json(const DivisorClass &d)
{
    json out = json::array();
    for (const auto &q : d.coords()) {
        out.push_back(to_json(q));
    }
    return out;
}

inline DivisorClass divisor_from_json(const json &j, const std::string &path)
{
    std::vector<Rational> coords;
    std::size_t i = 0;
    for (const auto &x : array_at(j, path)) {
        coords.push_back(rational_from_json(x, path + "[" + std::to_string(i++) + "]"));
    }
    return DivisorClass(std::move(coords));
}

inline json to_json(const SurfaceLattice &S)
{
    json matrix = json::array();
    for (const auto &row : S.intersection_matrix()) {
        matrix.push_back(row);
    }
    json ample = json::array();
    for (const auto &g : S.ample_generators()) {
        ample.push_back(to_json(g));
    }
    return json{{"label", S.label()},
                {"ns_rank", S.rank()},
                {"intersection_matrix", std::move(matrix)},
                {"canonical", to_json(S.canonical())},
                {"chi_O", S.chi_O()},
                {"ample_generators", std::move(ample)}};
}

inline SurfaceLattice surface_from_json(const json &j)
{
    const std::string p = "surface";
    const auto &label = field(j, "label", p);
    if (!label.is_string()) {
        raise(ErrorKind::InvalidInput, p + ".label: expected a string");
    }
    const auto n = integer_from_json(field(j, "ns_rank", p), p + ".ns_rank");
    if (n <= 0) {
        raise(ErrorKind::InvalidInput, p + ".ns_rank must be positive");
    }
    SurfaceLattice::Matrix M;
    std::size_t i = 0;
    for (const auto &row : array_at(field(j, "intersection_matrix", p), p + ".intersection_matrix")) {
        const auto rp = p + ".intersection_matrix[" + std::to_string(i++) + "]";
        std::vector<std::int64_t> r;
        std::size_t k = 0;
        for (const auto &x : array_at(row, rp)) {
            r.push_back(integer_from_json(x, rp + "[" + std::to_string(k++) + "]"));
        }
        M.push_back(std::move(r));
    }
    if (M.size() != static_cast<std::size_t>(n)) {
        raise(ErrorKind::DimensionMismatch, p + ".intersection_matrix has " + std::to_string(M.size())
                                                + " rows, ns_rank is " + std::to_string(n));
    }
    std::vector<DivisorClass> ample;
    i = 0;
    for (const auto &g : array_at(field(j, "ample_generators", p), p + ".ample_generators")) {
        ample.push_back(divisor_from_json(g, p + ".ample_generators[" + std::to_string(i++) + "]"));
    }
    return SurfaceLattice(label.get<std::string>(), std::move(M),
                          divisor_from_json(field(j, "canonical", p), p + ".canonical"),
                          integer_from_json(field(j, "chi_O", p), p + ".chi_O"), std::move(ample));
}

inline json to_json(const ChernCharacter &a)
{
    return json{{"r", to_json(a.r)}, {"c1", to_json(a.c1)}, {"ch2", to_json(a.ch2)}};
}

inline ChernCharacter character_from_json(const json &j, const std::string &path)
{
    return {rational_from_json(field(j, "r", path), path + ".r"), divisor_from_json(field(j, "c1", path), path + ".c1"),
            rational_from_json(field(j, "ch2", path), path + ".ch2")};
}

inline json to_json(const OneDimClass &c)
{
    return json{{"C", to_json(c.curve)}, {"chi", to_json(c.chi)}};
}

inline OneDimClass onedim_from_json(const json &j, const std::string &path)
{
    return {divisor_from_json(field(j, "C", path), path + ".C"), rational_from_json(field(j, "chi", path), path + ".chi")};
}

inline json to_json(const ExtendedClass &u)
{
    return json::array({to_json(u.deg0), to_json(u.deg2), to_json(u.deg4)});
}

inline json to_json(const StabilityVector &a)
{
    return json::array({to_json(a.a0), to_json(a.a1), to_json(a.a2)});
}

inline json to_json(const std::vector<Rational> &qs)
{
    json out = json::array();
    for (const auto &q : qs) {
        out.push_back(to_json(q));
    }
    return out;
}

inline json to_json(const FamilySpec &F)
{
    json v = std::holds_alternative<OneDimClass>(F.v) ? to_json(F.onedim()) : to_json(std::get<ChernCharacter>(F.v));
    json dirs = json::array();
    for (const auto &d : F.directions) {
        dirs.push_back(to_json(d));
    }
    json out{{"kind", std::string(to_string(F.kind))}, {"v", std::move(v)}};
    if (F.twist.size() != 0) {
        out["L"] = to_json(F.twist);
    }
    out["directions"] = std::move(dirs);
    out["extra"] = to_json(F.extra);
    return out;
}

inline FamilySpec family_from_json(const json &j)
{
    const std::string p = "family";
    const auto &kind = field(j, "kind", p);
    if (!kind.is_string()) {
        raise(ErrorKind::InvalidInput, p + ".kind: expected a string");
    }
    FamilySpec F{parse_family_kind(kind.get<std::string>()), ChernCharacter{}, DivisorClass{}, {}, {}};
    const auto &v = field(j, "v", p);
    if (v.is_object() && v.contains("C")) {
        F.v = onedim_from_json(v, p + ".v");
    } else {
        F.v = character_from_json(v, p + ".v");
    }
    if (j.contains("L")) {
        F.twist = divisor_from_json(j["L"], p + ".L");
    }
    std::size_t i = 0;
    for (const auto &d : array_at(field(j, "directions", p), p + ".directions")) {
        F.directions.push_back(divisor_from_json(d, p + ".directions[" + std::to_string(i++) + "]"));
    }
    if (j.contains("extra")) {
        i = 0;
        for (const auto &x : array_at(j["extra"], p + ".extra")) {
            F.extra.push_back(rational_from_json(x, p + ".extra[" + std::to_string(i++) + "]"));
        }
    }
    return F;
}

inline json wall_json(const WallLine &w)
{
    json flags = json::array({std::string(to_string(w.status))});
    if (w.through_origin()) {
        flags.push_back("through-origin");
    }
    const auto n = w.normalized_form();
    return json{{"kind", "line"},
                {"coefs", to_json(std::vector<Rational>{w.coef_s, w.coef_t, w.coef_const})},
                {"normalized", to_json(std::vector<Rational>{n.coef_s, n.coef_t, n.coef_const})},
                {"producer", to_json(w.producer)},
                {"flags", std::move(flags)}};
}

inline json wall_json(const WallHyperplane &w)
{
    auto coefs = w.coefs;
    coefs.push_back(w.coef_const);
    auto n = w.normalized_form();
    n.coefs.push_back(n.coef_const);
    return json{{"kind", "hyperplane"},
                {"coefs", to_json(coefs)},
                {"normalized", to_json(n.coefs)},
                {"producer", to_json(w.producer)},
                {"flags", json::array({std::string(to_string(w.status))})}};
}

inline json wall_json(const WallCircle &w)
{
    json out{{"kind", "circle"},
             {"coefs", to_json(std::vector<Rational>{w.quad_coef, w.lin_x, w.const_})},
             {"producer", to_json(w.producer)},
             {"flags", json::array({std::string(to_string(w.shape))})}};
    if (auto c = w.center()) {
        out["center"] = to_json(*c);
    }
    if (auto r = w.radius_squared()) {
        out["radius2"] = to_json(*r);
    }
    return out;
}

inline json wall_json(const EnumeratedWall &w)
{
    json flags = json::array();
    flags.push_back(w.wall.is_strict_gieseker ? "strict-gieseker" : "not-strict-gieseker");
    flags.push_back(w.wall.is_weak_gieseker ? "weak-gieseker" : "not-weak-gieseker");
    json witnesses = json::array();
    for (const auto &d : w.witnesses) {
        witnesses.push_back(json{{"L", to_json(d.line)},
                                 {"L2", to_json(d.line_square)},
                                 {"length", to_json(d.length)},
                                 {"producer", to_json(d.producer)},
                                 {"chi", to_json(d.chi)}});
    }
    json out{{"kind", "gieseker"}, {"coefs", to_json(w.wall.normal)}, {"producer", to_json(w.wall.producer)},
             {"flags", std::move(flags)}};
    if (w.ray) {
        out["ray"] = to_json(*w.ray);
    }
    out["witnesses"] = std::move(witnesses);
    return out;
}

inline json to_json(const Crossing &c)
{
    json producers = json::array();
    for (const auto &p : c.producers) {
        producers.push_back(to_json(p));
    }
    json flags = json::array();
    if (c.at_boundary) {
        flags.push_back("boundary");
    }
    flags.push_back(c.admissible ? "admissible" : "inadmissible");
    return json{{"parameter", to_json(c.parameter)},
                {"point", to_json(c.point)},
                {"producers", std::move(producers)},
                {"flags", std::move(flags)}};
}

inline std::string join(const std::vector<Rational> &qs, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += to_string(qs[i]);
    }
    return out;
}

inline std::string csv_character(const ChernCharacter &a)
{
    return to_string(a.r) + ";[" + join(a.c1.coords(), ';') + "];" + to_string(a.ch2);
}

/// One wall per row: kind,coefs,producer,flags with ';' inside fields.
inline std::string walls_csv(const json &walls)
{
    std::ostringstream out;
    out << "kind,coefs,producer,flags\n";
    for (const auto &w : walls) {
        std::vector<Rational> coefs;
        for (const auto &c : w["coefs"]) {
            coefs.push_back(parse_rational(c.get<std::string>()));
        }
        const auto producer = character_from_json(w["producer"], "producer");
        std::string flags;
        for (const auto &f : w["flags"]) {
            flags += (flags.empty() ? "" : ";") + f.get<std::string>();
        }
        out << w["kind"].get<std::string>() << ',' << join(coefs, ';') << ',' << csv_character(producer) << ','
            << flags << '\n';
    }
    return out.str();
}

inline std::string crossings_csv(const std::vector<Crossing> &cs)
{
    std::ostringstream out;
    out << "parameter,point,producers,flags\n";
    for (const auto &c : cs) {
        std::string producers;
        for (const auto &p : c.producers) {
            producers += (producers.empty() ? "" : "|") + csv_character(p);
        }
        out << to_string(c.parameter) << ',' << join(c.point, ';') << ',' << producers << ','
            << (c.at_boundary ? "boundary;" : "") << (c.admissible ? "admissible" : "inadmissible") << '\n';
    }
    return out.str();
}

} // namespace wallcross::io

#endif
