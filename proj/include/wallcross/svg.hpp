#ifndef WALLCROSS_SVG_HPP
#define WALLCROSS_SVG_HPP

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "notation.hpp"
#include "rational.hpp"
#include "walls.hpp"

namespace wallcross::svg
{

/// Decimal rendering at 12 significant digits; presentation only.
inline std::string num(double x)
{
    if (x == 0.0) {
        x = 0.0; // drop negative zero
    }
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

inline std::string escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Canvas {
    double width = 640;
    double height = 640;
    double margin = 60;
    double xmin, xmax, ymin, ymax;

    [[nodiscard]] double px(double x) const
    {
        return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
    }
    [[nodiscard]] double py(double y) const
    {
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    }
};

class Document
{
public:
    explicit Document(Canvas c, const std::string &title) : m_canvas(c)
    {
        m_body << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(c.width) << "\" height=\""
               << num(c.height) << "\" viewBox=\"0 0 " << num(c.width) << ' ' << num(c.height) << "\">\n"
               << "<title>" << escape(title) << "</title>\n"
               << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    void axes(const std::string &xlabel, const std::string &ylabel)
    {
        const auto &c = m_canvas;
        const double x0 = std::clamp(0.0, c.xmin, c.xmax);
        const double y0 = std::clamp(0.0, c.ymin, c.ymax);
        segment(c.xmin, y0, c.xmax, y0, "black", 1.5, false);
        segment(x0, c.ymin, x0, c.ymax, "black", 1.5, false);
        text(c.xmax, y0, xlabel, 8, 16);
        text(x0, c.ymax, ylabel, 6, -6);
        for (auto [v, horizontal] : {std::pair{c.xmax, true}, std::pair{c.ymax, false}}) {
            if (horizontal) {
                text(v, y0, num(v), -4, 30);
            } else {
                text(x0, v, num(v), -40, 4);
            }
        }
    }

    void segment(double x1, double y1, double x2, double y2, const std::string &stroke, double width, bool dashed)
    {
        const auto &c = m_canvas;
        m_body << "<line x1=\"" << num(c.px(x1)) << "\" y1=\"" << num(c.py(y1)) << "\" x2=\"" << num(c.px(x2))
               << "\" y2=\"" << num(c.py(y2)) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << '"'
               << (dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
    }

    void text(double x, double y, const std::string &s, double dx = 4, double dy = -4)
    {
        const auto &c = m_canvas;
        m_body << "<text x=\"" << num(c.px(x) + dx) << "\" y=\"" << num(c.py(y) + dy)
               << "\" font-family=\"monospace\" font-size=\"11\">" << escape(s) << "</text>\n";
    }

    [[nodiscard]] std::string str() const
    {
        return m_body.str() + "</svg>\n";
    }

    [[nodiscard]] const Canvas &canvas() const noexcept
    {
        return m_canvas;
    }

private:
    Canvas m_canvas;
    std::ostringstream m_body;
};

inline const char *palette(std::size_t i)
{
    static const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};
    return colors[i % 7];
}

/// Clip a s + b t + c = 0 to the box; returns the endpoints.
inline std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>>
clip_line(double a, double b, double c, double smax, double tmax)
{
    std::vector<std::pair<double, double>> pts;
    auto add = [&](double s, double t) {
        const double eps = 1e-12 * std::max(smax, tmax);
        if (s < -eps || s > smax + eps || t < -eps || t > tmax + eps) {
            return;
        }
        for (const auto &p : pts) {
            if (std::abs(p.first - s) <= eps && std::abs(p.second - t) <= eps) {
                return;
            }
        }
        pts.emplace_back(s, t);
    };
    if (b != 0) {
        add(0, -c / b);
        add(smax, -(c + a * smax) / b);
    }
    if (a != 0) {
        add(-c / a, 0);
        add(-(c + b * tmax) / a, tmax);
    }
    if (pts.size() < 2) {
        return std::nullopt;
    }
    return std::pair{pts[0], pts[1]};
}

/// Wall lines in the (s, t) quadrant [0, smax] x [0, tmax].
inline std::string quadrant_plot(const std::vector<WallLine> &lines, const Rational &smax, const Rational &tmax,
                                 const std::string &title, const std::vector<std::string> &basis = {})
{
    Canvas c{640, 640, 60, 0, to_double(smax), 0, to_double(tmax)};
    Document doc(c, title);
    doc.axes("s", "t");
    std::size_t k = 0;
    for (const auto &w : lines) {
        if (w.status != WallStatus::Wall) {
            continue;
        }
        const auto seg = clip_line(to_double(w.coef_s), to_double(w.coef_t), to_double(w.coef_const), c.xmax, c.ymax);
        if (!seg) {
            continue;
        }
        const auto &[p, q] = *seg;
        doc.segment(p.first, p.second, q.first, q.second, palette(k), 2, false);
        const auto n = w.normalized_form();
        std::string label = "(" + to_string(w.producer.r) + ", " + format_divisor(w.producer.c1, basis) + ", "
                            + to_string(w.producer.ch2) + "): " + to_string(n.coef_s) + "s + " + to_string(n.coef_t)
                            + "t + " + to_string(n.coef_const) + " = 0";
        if (sgn(w.coef_s) != 0) {
            label += ", s-intercept " + to_string(Rational(-w.coef_const / w.coef_s));
        }
        doc.text((p.first + q.first) / 2, (p.second + q.second) / 2, label);
        ++k;
    }
    return doc.str();
}

/// Wall rays in a two-dimensional ample-cone slice; the cone directions are dashed.
inline std::string ample_slice_plot(const std::vector<EnumeratedWall> &walls, const std::vector<DivisorClass> &directions,
                                    const SurfaceLattice &S, const std::string &title,
                                    const std::vector<std::string> &basis = {})
{
    if (S.rank() != 2) {
        raise(ErrorKind::UnsupportedDimension,
              "ample-slice plots need a rank 2 Neron-Severi lattice, got rank " + std::to_string(S.rank()));
    }
    double extent = 1;
    auto grow = [&](const DivisorClass &d) {
        extent = std::max({extent, std::abs(to_double(d[0])), std::abs(to_double(d[1]))});
    };
    for (const auto &d : directions) {
        grow(d);
    }
    for (const auto &w : walls) {
        if (w.ray) {
            grow(*w.ray);
        }
    }
    const double lo = std::min(0.0, -0.1 * extent);
    const double hi = 1.15 * extent;
    Canvas c{640, 640, 60, lo, hi, lo, hi};
    if (std::any_of(directions.begin(), directions.end(), [](const DivisorClass &d) { return sgn(d[1]) < 0; })) {
        c.ymin = -hi;
    }
    Document doc(c, title);
    doc.axes(basis.size() == 2 ? basis[0] : "x0", basis.size() == 2 ? basis[1] : "x1");
    for (const auto &d : directions) {
        doc.segment(0, 0, to_double(d[0]), to_double(d[1]), "gray", 1, true);
        doc.text(to_double(d[0]), to_double(d[1]), format_divisor(d, basis), 4, 14);
    }
    std::size_t k = 0;
    for (const auto &w : walls) {
        if (!w.ray) {
            continue;
        }
        const auto &r = *w.ray;
        doc.segment(0, 0, to_double(r[0]), to_double(r[1]), palette(k), 2, false);
        doc.text(to_double(r[0]), to_double(r[1]),
                 format_divisor(r, basis) + " (" + std::to_string(w.witnesses.size()) + " witness"
                     + (w.witnesses.size() == 1 ? "" : "es") + ")");
        ++k;
    }
    return doc.str();
}

} // namespace wallcross::svg

#endif
