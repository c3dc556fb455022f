// wallcross: wall-and-chamber computations on surfaces given by lattice data.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wallcross/io.hpp"
#include "wallcross/svg.hpp"
#include "wallcross/verify.hpp"
#include "wallcross/wallcross.hpp"

namespace
{

using namespace wallcross;
using io::json;

enum ExitCode { Ok = 0, Failed = 1, Validation = 2, Domain = 3 };

struct Options {
    std::string preset;
    std::string surface_file;
    std::string format = "json";
    std::string out;

    std::string v;
    std::string L;
    std::vector<std::string> dirs;
    std::vector<std::string> producers;
    std::vector<std::string> extra;
    std::string family;
    std::string family_file;
    std::string G;
    std::string u0;
    std::string H;
    std::string from;
    std::string to;
    std::optional<long> box;
    std::string mode = "quadrant";
    std::string smax = "5";
    std::string tmax = "5";
    std::string scenario;
    std::uint64_t seed = 1;
};

/// Surface plus the names usable in class expressions.
struct Context {
    SurfaceLattice S;
    Notation notation;
    std::vector<std::string> basis;
    std::vector<DivisorClass> nef_directions;
    std::optional<long> default_box;
};

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        raise(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        raise(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

Context load_context(const Options &o)
{
    if (!o.preset.empty() && !o.surface_file.empty()) {
        raise(ErrorKind::InvalidInput, "give either --preset or --surface, not both");
    }
    if (!o.surface_file.empty()) {
        auto S = io::surface_from_json(read_json_file(o.surface_file));
        std::map<std::string, DivisorClass> names{{"K", S.canonical()}};
        Notation n(S.rank(), names);
        auto nef = S.ample_generators();
        return {std::move(S), std::move(n), {}, std::move(nef), std::nullopt};
    }
    auto P = load_preset(o.preset.empty() ? "p1xp1" : o.preset);
    Notation n(P.lattice.rank(), P.named);
    return {P.lattice, std::move(n), P.basis, P.nef_directions, P.default_box};
}

void emit(const Options &o, const std::string &text)
{
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out, std::ios::binary);
    if (!out) {
        raise(ErrorKind::InvalidInput, "cannot write '" + o.out + "'");
    }
    out << text;
}

void require(const std::string &value, const char *flag)
{
    if (value.empty()) {
        raise(ErrorKind::InvalidInput, std::string("missing required option ") + flag);
    }
}

std::vector<DivisorClass> parse_dirs(const Context &c, const std::vector<std::string> &dirs)
{
    std::vector<DivisorClass> out;
    for (const auto &d : dirs) {
        out.push_back(c.notation.divisor(d));
    }
    return out;
}

std::vector<ChernCharacter> parse_producers(const Context &c, const Options &o)
{
    if (o.producers.empty()) {
        raise(ErrorKind::InvalidInput, "missing required option --a (at least one producer)");
    }
    std::vector<ChernCharacter> out;
    for (const auto &a : o.producers) {
        out.push_back(c.notation.character(a));
    }
    return out;
}

/// Family from --family-file, or from --v/--L/--dir/--extra with the given kind.
FamilySpec build_family(const Context &c, const Options &o, FamilyKind kind)
{
    if (!o.family_file.empty()) {
        auto F = io::family_from_json(read_json_file(o.family_file));
        if (F.kind != kind) {
            raise(ErrorKind::InvalidInput, "family file has kind " + std::string(to_string(F.kind)) + ", expected "
                                               + std::string(to_string(kind)));
        }
        validate_family(F, c.S);
        return F;
    }
    require(o.v, "--v");
    FamilySpec F{kind, ChernCharacter{}, DivisorClass{}, parse_dirs(c, o.dirs), {}};
    if (is_onedim(kind)) {
        F.v = c.notation.onedim(o.v);
    } else {
        F.v = c.notation.character(o.v);
    }
    if (!o.L.empty()) {
        F.twist = c.notation.divisor(o.L);
    }
    for (const auto &x : o.extra) {
        F.extra.push_back(parse_rational(x));
    }
    if (kind == FamilyKind::MaciociaPlane) {
        if (!o.G.empty()) {
            F.directions.push_back(c.notation.divisor(o.G));
        }
        if (!o.u0.empty()) {
            F.extra.insert(F.extra.begin(), parse_rational(o.u0));
        }
    }
    validate_family(F, c.S);
    return F;
}

json envelope(const Context &c, const char *command)
{
    return json{{"surface", c.S.label()}, {"command", command}};
}

std::string render_lines(const Context &c, const Options &o, const char *command, const FamilySpec &F,
                         const std::vector<WallLine> &lines)
{
    if (o.format == "svg") {
        return svg::quadrant_plot(lines, parse_rational(o.smax), parse_rational(o.tmax),
                                  std::string(command) + " walls on " + c.S.label(), c.basis);
    }
    json walls = json::array();
    for (const auto &w : lines) {
        walls.push_back(io::wall_json(w));
    }
    if (o.format == "csv") {
        return io::walls_csv(walls);
    }
    json out = envelope(c, command);
    out["family"] = io::to_json(F);
    out["walls"] = std::move(walls);
    return out.dump(2) + "\n";
}

void require_format(const Options &o, std::initializer_list<const char *> allowed)
{
    for (const char *f : allowed) {
        if (o.format == f) {
            return;
        }
    }
    raise(ErrorKind::InvalidInput, "format '" + o.format + "' is not available for this command");
}

std::string cmd_quadrant(const Options &o)
{
    require_format(o, {"json", "csv", "svg"});
    const auto c = load_context(o);
    const auto F = build_family(c, o, FamilyKind::OrthogonalQuadrant);
    std::vector<WallLine> lines;
    for (const auto &a : parse_producers(c, o)) {
        lines.push_back(wall_line_quadrant(a, F, c.S));
    }
    return render_lines(c, o, "quadrant", F, lines);
}

std::string cmd_onedim(const Options &o)
{
    require_format(o, {"json", "csv", "svg"});
    const auto c = load_context(o);
    const auto F = build_family(c, o, FamilyKind::OneDimQuadrant);
    std::vector<WallLine> lines;
    for (const auto &a : parse_producers(c, o)) {
        lines.push_back(onedim_wall_line(a, F, c.S));
    }
    return render_lines(c, o, "onedim", F, lines);
}

std::string cmd_cone(const Options &o)
{
    require_format(o, {"json", "csv"});
    const auto c = load_context(o);
    const auto F = build_family(c, o, FamilyKind::OrthogonalCone);
    json walls = json::array();
    for (const auto &a : parse_producers(c, o)) {
        walls.push_back(io::wall_json(wall_hyperplane_cone(a, F, c.S)));
    }
    if (o.format == "csv") {
        return io::walls_csv(walls);
    }
    json out = envelope(c, "cone");
    out["family"] = io::to_json(F);
    out["walls"] = std::move(walls);
    return out.dump(2) + "\n";
}

std::string cmd_maciocia(const Options &o)
{
    require_format(o, {"json", "csv"});
    const auto c = load_context(o);
    const auto F = build_family(c, o, FamilyKind::MaciociaPlane);
    json walls = json::array();
    for (const auto &a : parse_producers(c, o)) {
        walls.push_back(io::wall_json(maciocia_wall_circle(a, F, c.S)));
    }
    if (o.format == "csv") {
        return io::walls_csv(walls);
    }
    json out = envelope(c, "maciocia");
    out["family"] = io::to_json(F);
    out["walls"] = std::move(walls);
    return out.dump(2) + "\n";
}

std::string cmd_gieseker(const Options &o)
{
    require_format(o, {"json", "csv"});
    const auto c = load_context(o);
    require(o.v, "--v");
    require(o.H, "--H");
    const auto v = c.notation.character(o.v);
    const auto H = c.notation.divisor(o.H);
    require_ample_check(H, c.S, "--H");
    json walls = json::array();
    for (const auto &a : parse_producers(c, o)) {
        const auto g = gieseker_wall_t(a, v, H, c.S);
        const DivisorClass delta = a.c1 / a.r - v.c1 / v.r;
        json flags = json::array();
        switch (g.kind) {
            case GiesekerCrossing::Kind::Crossing: flags.push_back("crossing"); break;
            case GiesekerCrossing::Kind::NoWall: flags.push_back("no-wall"); break;
            case GiesekerCrossing::Kind::Everywhere: flags.push_back("no-wall"); flags.push_back("everywhere"); break;
        }
        flags.push_back(reduced_chi_equal(a, v, c.S) ? "strict-gieseker" : "not-strict-gieseker");
        flags.push_back(reduced_chi_at_least(a, v, c.S) ? "weak-gieseker" : "not-weak-gieseker");
        json w{{"kind", "gieseker"},
               {"coefs", io::to_json(primitive_integer_vector(c.S.dual(delta)))},
               {"producer", io::to_json(a)},
               {"flags", std::move(flags)}};
        if (g.t) {
            w["t"] = io::to_json(*g.t);
        }
        walls.push_back(std::move(w));
    }
    if (o.format == "csv") {
        return io::walls_csv(walls);
    }
    json out = envelope(c, "gieseker");
    out["v"] = io::to_json(v);
    out["H"] = io::to_json(H);
    out["walls"] = std::move(walls);
    return out.dump(2) + "\n";
}

struct EnumerationJob {
    Context context;
    ChernCharacter v;
    std::vector<DivisorClass> directions;
    long box;
    Enumeration result;
};

EnumerationJob run_enumeration(const Options &o)
{
    auto c = load_context(o);
    require(o.v, "--v");
    const auto v = c.notation.character(o.v);
    auto dirs = o.dirs.empty() ? c.nef_directions : parse_dirs(c, o.dirs);
    const std::optional<long> box = o.box ? o.box : c.default_box;
    if (!box) {
        raise(ErrorKind::InvalidInput, "missing required option --box (no preset default for custom surfaces)");
    }
    auto E = enumerate_rank2_destabilizers(v, dirs, *box, c.S);
    return {std::move(c), v, std::move(dirs), *box, std::move(E)};
}

std::string cmd_enumerate(const Options &o)
{
    require_format(o, {"json", "csv", "svg"});
    const auto job = run_enumeration(o);
    const auto &c = job.context;
    if (o.format == "svg") {
        return svg::ample_slice_plot(job.result.walls, job.directions, c.S,
                                     "slope walls for v on " + c.S.label(), c.basis);
    }
    json walls = json::array();
    for (const auto &w : job.result.walls) {
        walls.push_back(io::wall_json(w));
    }
    if (o.format == "csv") {
        return io::walls_csv(walls);
    }
    json dirs = json::array();
    for (const auto &d : job.directions) {
        dirs.push_back(io::to_json(d));
    }
    json out = envelope(c, "enumerate");
    out["v"] = io::to_json(job.v);
    out["directions"] = std::move(dirs);
    out["box"] = job.box;
    out["normal_form_twist"] = io::to_json(job.result.normal_form_twist);
    out["normal_form"] = io::to_json(job.result.normal_form);
    out["certificate_bound"] = job.result.certificate_bound ? json(*job.result.certificate_bound) : json(nullptr);
    out["complete"] = job.result.complete;
    out["walls"] = std::move(walls);
    return out.dump(2) + "\n";
}

std::string cmd_scan(const Options &o)
{
    require_format(o, {"json", "csv"});
    const auto c = load_context(o);
    if (o.family.empty() && o.family_file.empty()) {
        raise(ErrorKind::InvalidInput, "missing required option --family (or --family-file)");
    }
    const FamilyKind kind =
        o.family_file.empty() ? parse_family_kind(o.family) : io::family_from_json(read_json_file(o.family_file)).kind;
    const auto F = build_family(c, o, kind);
    require(o.from, "--from");
    require(o.to, "--to");
    const auto start = c.notation.rationals(o.from);
    const auto end = c.notation.rationals(o.to);
    const auto crossings = segment_scan(F, start, end, parse_producers(c, o), c.S);
    if (o.format == "csv") {
        return io::crossings_csv(crossings);
    }
    json list = json::array();
    for (const auto &x : crossings) {
        list.push_back(io::to_json(x));
    }
    json out = envelope(c, "scan");
    out["family"] = io::to_json(F);
    out["segment"] = json{{"from", io::to_json(start)}, {"to", io::to_json(end)}};
    out["crossings"] = std::move(list);
    return out.dump(2) + "\n";
}

std::string cmd_plot(const Options &o)
{
    if (o.format != "json" && o.format != "svg") {
        raise(ErrorKind::InvalidInput, "plot only emits svg");
    }
    if (o.mode == "ample-slice") {
        const auto job = run_enumeration(o);
        return svg::ample_slice_plot(job.result.walls, job.directions, job.context.S,
                                     "slope walls for v on " + job.context.S.label(), job.context.basis);
    }
    if (o.mode != "quadrant") {
        raise(ErrorKind::InvalidInput, "unknown plot mode '" + o.mode + "' (expected quadrant or ample-slice)");
    }
    const auto c = load_context(o);
    const auto kind = o.family.empty() ? FamilyKind::OrthogonalQuadrant : parse_family_kind(o.family);
    const auto F = build_family(c, o, kind);
    std::vector<WallLine> lines;
    for (const auto &text : o.producers) {
        const auto a = c.notation.character(text);
        if (kind == FamilyKind::OrthogonalQuadrant) {
            lines.push_back(wall_line_quadrant(a, F, c.S));
        } else if (kind == FamilyKind::OneDimQuadrant) {
            lines.push_back(onedim_wall_line(a, F, c.S));
        } else {
            raise(ErrorKind::UnsupportedDimension, "quadrant plots need a two-parameter line family");
        }
    }
    return svg::quadrant_plot(lines, parse_rational(o.smax), parse_rational(o.tmax), "walls on " + c.S.label(),
                              c.basis);
}

json suite_json(const verify::SuiteResult &s)
{
    return json{{"name", s.name}, {"passed", s.passed()}, {"cases", s.cases}, {"failures", s.failures}};
}

int cmd_verify(const Options &o)
{
    const auto c = load_context(o);
    auto report = verify::run_generic(c.S, o.seed);
    if (o.scenario == "blowdown") {
        report.suites.push_back(verify::blowdown());
    } else if (o.scenario == "rank2-walls") {
        report.suites.push_back(verify::rank2_walls());
    } else if (!o.scenario.empty()) {
        raise(ErrorKind::InvalidInput, "unknown scenario '" + o.scenario + "' (expected blowdown or rank2-walls)");
    }
    json suites = json::array();
    for (const auto &s : report.suites) {
        suites.push_back(suite_json(s));
    }
    json out{{"surface", report.surface}, {"seed", report.seed}, {"suites", std::move(suites)}, {"passed", report.passed()}};
    emit(o, out.dump(2) + "\n");
    return report.passed() ? Ok : Failed;
}

std::string cmd_surface(const Options &o)
{
    return io::to_json(load_context(o).S).dump(2) + "\n";
}

} // namespace

int main(int argc, char **argv)
{
    Options o;
    CLI::App app{"Wall-and-chamber computations for stability conditions on surfaces given by lattice data"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--preset", o.preset, "bundled surface: p2, p1xp1, blowup_p2 (default p1xp1)");
    app.add_option("--surface", o.surface_file, "surface description JSON file");
    app.add_option("--format", o.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    app.add_option("--out", o.out, "output path (default stdout)");

    auto class_options = [&](CLI::App *sub, bool with_family) {
        sub->add_option("--v", o.v, "class v: r,c1,ch2 (or C,chi for 1-dimensional kinds)");
        sub->add_option("--L", o.L, "twist line bundle L");
        sub->add_option("--dir", o.dirs, "family direction (repeatable, in parameter order)");
        sub->add_option("--a", o.producers, "producer r,c1,ch2 (repeatable)");
        if (with_family) {
            sub->add_option("--family-file", o.family_file, "family JSON file");
            sub->add_option("--extra", o.extra, "extra family value (repeatable)");
        }
    };

    auto *walls = app.add_subcommand("walls", "wall loci for one family or lattice");
    walls->require_subcommand(1);
    auto *quadrant = walls->add_subcommand("quadrant", "wall lines in an orthogonal (s,t) quadrant");
    class_options(quadrant, true);
    quadrant->add_option("--smax", o.smax, "svg extent in s");
    quadrant->add_option("--tmax", o.tmax, "svg extent in t");
    auto *cone = walls->add_subcommand("cone", "wall hyperplanes in an orthogonal n-parameter cone");
    class_options(cone, true);
    auto *maciocia = walls->add_subcommand("maciocia", "semicircular walls in a Maciocia half plane");
    class_options(maciocia, true);
    maciocia->add_option("--G", o.G, "direction G with G.H = 0");
    maciocia->add_option("--u0", o.u0, "offset u0 along G");
    auto *onedim = walls->add_subcommand("onedim", "wall lines for a 1-dimensional class");
    class_options(onedim, true);
    onedim->add_option("--smax", o.smax, "svg extent in s");
    onedim->add_option("--tmax", o.tmax, "svg extent in t");
    auto *gieseker = walls->add_subcommand("gieseker", "Gieseker wall values and slope-wall normals");
    class_options(gieseker, false);
    gieseker->add_option("--H", o.H, "polarization H+");
    auto *enumerate = walls->add_subcommand("enumerate", "rank 2 line-subbundle destabilizers in a box");
    class_options(enumerate, false);
    enumerate->add_option("--box", o.box, "coordinate bound B");
    auto *scan = walls->add_subcommand("scan", "exact wall crossings along a segment");
    class_options(scan, true);
    scan->add_option("--family", o.family, "family kind");
    scan->add_option("--G", o.G, "maciocia direction G");
    scan->add_option("--u0", o.u0, "maciocia offset u0");
    scan->add_option("--from", o.from, "segment start parameters");
    scan->add_option("--to", o.to, "segment end parameters");

    auto *verify_cmd = app.add_subcommand("verify", "run the invariant suites and print a report");
    verify_cmd->add_option("--scenario", o.scenario, "blowdown or rank2-walls");
    verify_cmd->add_option("--seed", o.seed, "random seed");

    auto *plot = app.add_subcommand("plot", "SVG of wall lines or wall rays");
    class_options(plot, true);
    plot->add_option("--mode", o.mode, "quadrant or ample-slice");
    plot->add_option("--family", o.family, "family kind for quadrant mode");
    plot->add_option("--box", o.box, "coordinate bound B for ample-slice mode");
    plot->add_option("--smax", o.smax, "extent in s");
    plot->add_option("--tmax", o.tmax, "extent in t");

    app.add_subcommand("surface", "print the surface description JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return Validation;
    }

    try {
        if (verify_cmd->parsed()) {
            return cmd_verify(o);
        }
        std::string text;
        if (quadrant->parsed()) {
            text = cmd_quadrant(o);
        } else if (cone->parsed()) {
            text = cmd_cone(o);
        } else if (maciocia->parsed()) {
            text = cmd_maciocia(o);
        } else if (onedim->parsed()) {
            text = cmd_onedim(o);
        } else if (gieseker->parsed()) {
            text = cmd_gieseker(o);
        } else if (enumerate->parsed()) {
            text = cmd_enumerate(o);
        } else if (scan->parsed()) {
            text = cmd_scan(o);
        } else if (plot->parsed()) {
            text = cmd_plot(o);
        } else {
            text = cmd_surface(o);
        }
        emit(o, text);
        return Ok;
    } catch (const wallcross::error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_validation(e.kind()) ? Validation : Domain;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Failed;
    }
}
