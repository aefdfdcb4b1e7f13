#pragma once
// Rendering of rank 1-3 semi-invariant pictures: exact wall data from the
// fan (rank 2) or the domain inequalities (rank 3, stereographically
// projected), emitted as SVG 1.1 or a TikZ fragment.  Output bytes are a
// pure function of the model and the RenderSpec.

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "clusterpic/torsion.hpp"

namespace clusterpic {

struct RenderSpec {
    int width = 640;
    int height = 640;
    double scale = 230;          // pixels per unit of the math plane
    int samples_per_arc = 48;    // clamped up to 16
    std::vector<double> pole;    // rank-3 projection pole; empty = default
    bool chamber_labels = false; // label chambers with their torsion classes
    int field_order = 0;         // 0 = default_field_order()
};

struct WallPath {
    int brick = -1;                             // root id
    std::string label;
    std::vector<std::array<double, 2>> points;  // math coords; y up
    bool closed = false;
};

struct ChamberLabel {
    std::string text;
    std::array<double, 2> at;
};

struct Drawing {
    int rank = 0;
    std::vector<WallPath> walls;
    std::vector<ChamberLabel> chambers;
};

namespace detail {

constexpr double kPi = 3.14159265358979323846;

inline std::array<double, 3> unit3(std::array<double, 3> v) {
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / n, v[1] / n, v[2] / n};
}
inline double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline std::array<double, 3> cross3(const std::array<double, 3>& a,
                                    const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace detail

// The angular extent of the wall D(M_root) on the unit circle of its plane
// (rank 3): points cos(t) u + sin(t) v for t in [mid-half, mid+half].
struct WallArc {
    std::array<double, 3> u{}, v{};  // orthonormal basis of the wall plane
    double mid = 0, half = 0;
    bool full = false;  // no submodule constraint: the whole great circle
};

inline WallArc wall_arc3(const Model& m, int root_id, int p = default_field_order()) {
    detail::require_simply_laced(m, "wall_arc3");
    if (m.n() != 3) throw invalid_argument_error("wall_arc3 needs a rank-3 quiver");
    SemiInvariantDomain d = domain(m, m.roots.at(root_id), p);
    std::array<double, 3> n =
        detail::unit3({(double)d.m[0], (double)d.m[1], (double)d.m[2]});
    // deterministic basis of the plane: Gram-Schmidt of the first usable axis
    std::array<double, 3> u{};
    for (int i = 0; i < 3; ++i) {
        std::array<double, 3> e{};
        e[i] = 1;
        double c = detail::dot3(e, n);
        if (std::abs(c) > 0.9) continue;
        u = detail::unit3({e[0] - c * n[0], e[1] - c * n[1], e[2] - c * n[2]});
        break;
    }
    std::array<double, 3> v = detail::cross3(n, u);
    WallArc arc{u, v, 0, detail::kPi, false};
    bool constrained = false;
    for (const DimVec& s : d.halfspace_normals) {
        std::array<double, 3> w{(double)s[0], (double)s[1], (double)s[2]};
        double wx = detail::dot3(w, u), wy = detail::dot3(w, v);
        if (std::hypot(wx, wy) < 1e-12) continue;  // constraint parallel to the plane normal
        // w . p(t) <= 0 is the half-circle centered opposite to w
        double c2 = std::atan2(-wy, -wx), h2 = detail::kPi / 2;
        if (!constrained) {
            arc.mid = c2;
            arc.half = h2;
            constrained = true;
            continue;
        }
        double delta = std::remainder(c2 - arc.mid, 2 * detail::kPi);
        double lo = std::max(-arc.half, delta - h2), hi = std::min(arc.half, delta + h2);
        if (lo > hi)
            throw invariant_violation("wall " + m.names.at(root_id) + " has empty domain");
        arc.mid = arc.mid + (lo + hi) / 2;
        arc.half = (hi - lo) / 2;
    }
    arc.full = !constrained;
    if (arc.full) {
        arc.mid = 0;
        arc.half = detail::kPi;
    }
    return arc;
}

namespace detail {

inline std::array<double, 3> default_pole() {
    double c = -1.0 / std::sqrt(3.0);
    return {c, c, c};
}

// Stereographic projection from `pole` onto the plane through the origin
// orthogonal to it, written in a deterministic basis of that plane.
struct Projector {
    std::array<double, 3> pole{}, a{}, b{};

    explicit Projector(std::array<double, 3> p) : pole(unit3(p)) {
        for (int i = 0; i < 3; ++i) {
            std::array<double, 3> e{};
            e[i] = 1;
            double c = dot3(e, pole);
            if (std::abs(c) > 0.9) continue;
            a = unit3({e[0] - c * pole[0], e[1] - c * pole[1], e[2] - c * pole[2]});
            break;
        }
        b = cross3(pole, a);
    }
    std::array<double, 2> operator()(const std::array<double, 3>& x) const {
        double d = 1.0 - dot3(x, pole);
        return {dot3(x, a) / d, dot3(x, b) / d};
    }
};

inline std::array<double, 3> unit_from_dimvec(const DimVec& g) {
    std::array<double, 3> x{};
    for (size_t i = 0; i < g.size() && i < 3; ++i) x[i] = g[i];
    return unit3(x);
}

inline std::string wall_label(const Model& m, int root_id) {
    return "D(" + m.names.at(root_id) + ")";
}

inline Drawing rank1_drawing(const Model& m, const RenderSpec& spec) {
    Drawing d;
    d.rank = 1;
    WallPath w;
    w.brick = 0;
    w.label = wall_label(m, 0);
    w.points.push_back({0, 0});
    d.walls.push_back(std::move(w));
    if (spec.chamber_labels) {
        d.chambers.push_back({"mod", {0.6, 0.08}});
        d.chambers.push_back({"0", {-0.6, 0.08}});
    }
    return d;
}

inline Drawing rank2_drawing(const Model& m, const RenderSpec& spec) {
    Drawing d;
    d.rank = 2;
    Fan f = build_fan(m, full_wide(m));
    std::map<int, std::vector<std::array<double, 2>>> rays;  // brick -> unit dirs
    for (const Facet& ft : f.facets) {
        double x = ft.sample[0], y = ft.sample[1];
        double n = std::hypot(x, y);
        rays[ft.brick].push_back({x / n, y / n});
    }
    for (const auto& [brick, dirs] : rays) {
        WallPath w;
        w.brick = brick;
        w.label = wall_label(m, brick);
        if (dirs.size() == 2) {  // a full line through the origin
            w.points.push_back({dirs[0][0], dirs[0][1]});
            w.points.push_back({dirs[1][0], dirs[1][1]});
        } else if (dirs.size() == 1) {  // a single ray
            w.points.push_back({0, 0});
            w.points.push_back({dirs[0][0], dirs[0][1]});
        } else {
            throw invariant_violation("rank-2 wall with " + std::to_string(dirs.size()) +
                                      " rays");
        }
        d.walls.push_back(std::move(w));
    }
    if (spec.chamber_labels) {
        int p = spec.field_order ? spec.field_order : default_field_order();
        for (int ci = 0; ci < (int)f.clusters.size(); ++ci) {
            DimVec g = chamber_point(f, ci);
            double x = g[0], y = g[1];
            double n = std::hypot(x, y);
            d.chambers.push_back({torsion_class_name(m, torsion_class_of_point(m, g, p)),
                                  {0.62 * x / n, 0.62 * y / n}});
        }
    }
    return d;
}

inline Drawing rank3_drawing(const Model& m, const RenderSpec& spec) {
    detail::require_simply_laced(m, "draw (rank-3 wall inequalities)");
    Drawing d;
    d.rank = 3;
    int p = spec.field_order ? spec.field_order : default_field_order();
    std::array<double, 3> pole =
        spec.pole.empty()
            ? default_pole()
            : unit3({spec.pole.at(0), spec.pole.at(1), spec.pole.at(2)});
    for (const DimVec& r : m.roots) {
        double s = 0;
        for (int i = 0; i < 3; ++i) s += pole[i] * r[i];
        if (std::abs(s) < 1e-9)
            throw invalid_argument_error("projection pole lies on the wall of " + show(r));
    }
    Projector proj(pole);
    int samples = std::max(spec.samples_per_arc, 16);
    for (int id = 0; id < (int)m.roots.size(); ++id) {
        WallArc arc = wall_arc3(m, id, p);
        WallPath w;
        w.brick = id;
        w.label = wall_label(m, id);
        w.closed = arc.full;
        int steps = arc.full ? samples : samples - 1;  // closed: endpoint omitted
        for (int k = 0; k < samples; ++k) {
            double t = arc.mid - arc.half + (2 * arc.half) * k / steps;
            std::array<double, 3> x{arc.u[0] * std::cos(t) + arc.v[0] * std::sin(t),
                                    arc.u[1] * std::cos(t) + arc.v[1] * std::sin(t),
                                    arc.u[2] * std::cos(t) + arc.v[2] * std::sin(t)};
            w.points.push_back(proj(x));
        }
        d.walls.push_back(std::move(w));
    }
    if (spec.chamber_labels) {
        Fan f = build_fan(m, full_wide(m));
        for (int ci = 0; ci < (int)f.clusters.size(); ++ci) {
            DimVec g = chamber_point(f, ci);
            std::array<double, 2> at = proj(unit_from_dimvec(g));
            if (std::abs(at[0]) > 2.4 || std::abs(at[1]) > 2.4) continue;  // behind the pole
            d.chambers.push_back(
                {torsion_class_name(m, torsion_class_of_point(m, g, p)), at});
        }
    }
    return d;
}

inline std::string fmt(double v) {
    if (std::abs(v) < 5e-5) v = 0;  // avoid "-0.0000"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace detail

inline Drawing make_drawing(const Model& m, const RenderSpec& spec) {
    switch (m.n()) {
        case 1: return detail::rank1_drawing(m, spec);
        case 2: return detail::rank2_drawing(m, spec);
        case 3: return detail::rank3_drawing(m, spec);
        default:
            throw unsupported_operation("draw supports rank <= 3, got rank " +
                                        std::to_string(m.n()));
    }
}

inline std::string render_svg(const Model& m, const RenderSpec& spec) {
    Drawing d = make_drawing(m, spec);
    double cx = spec.width / 2.0, cy = spec.height / 2.0, sc = spec.scale;
    auto X = [&](double x) { return detail::fmt(cx + sc * x); };
    auto Y = [&](double y) { return detail::fmt(cy - sc * y); };
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
           "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    if (d.rank == 1) {  // the axis the single wall point sits on
        out += "<line x1=\"" + X(-1.1) + "\" y1=\"" + Y(0) + "\" x2=\"" + X(1.1) +
               "\" y2=\"" + Y(0) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    for (const WallPath& w : d.walls) {
        if (w.points.size() == 1) {
            out += "<circle cx=\"" + X(w.points[0][0]) + "\" cy=\"" + Y(w.points[0][1]) +
                   "\" r=\"3.5\" fill=\"#1a1a1a\"/>\n";
        } else {
            out += w.closed ? "<polygon points=\"" : "<polyline points=\"";
            for (size_t i = 0; i < w.points.size(); ++i) {
                if (i) out += " ";
                out += X(w.points[i][0]) + "," + Y(w.points[i][1]);
            }
            out += "\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"1.5\"/>\n";
        }
        const auto& anchor = w.points[w.points.size() / 2];
        double ax = anchor[0], ay = anchor[1];
        double n = std::hypot(ax, ay);
        double ox = n < 1e-9 ? 0.05 : 0.07 * ax / n, oy = n < 1e-9 ? 0.05 : 0.07 * ay / n;
        out += "<text x=\"" + X(ax + ox) + "\" y=\"" + Y(ay + oy) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#1a1a1a\">" + w.label +
               "</text>\n";
    }
    for (const ChamberLabel& c : d.chambers)
        out += "<text x=\"" + X(c.at[0]) + "\" y=\"" + Y(c.at[1]) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#29527a\" "
               "text-anchor=\"middle\">" +
               c.text + "</text>\n";
    out += "</svg>\n";
    return out;
}

inline std::string render_tikz(const Model& m, const RenderSpec& spec) {
    Drawing d = make_drawing(m, spec);
    std::string out = "% semi-invariant picture (clusterpic)\n\\begin{tikzpicture}[scale=2.4]\n";
    if (d.rank == 1)
        out += "\\draw[gray] (-1.1,0) -- (1.1,0);\n";
    for (const WallPath& w : d.walls) {
        if (w.points.size() == 1) {
            out += "\\filldraw (" + detail::fmt(w.points[0][0]) + "," +
                   detail::fmt(w.points[0][1]) + ") circle (1.5pt);\n";
        } else {
            out += "\\draw[thick]";
            for (size_t i = 0; i < w.points.size(); ++i) {
                if (i) out += " --";
                out += " (" + detail::fmt(w.points[i][0]) + "," + detail::fmt(w.points[i][1]) +
                       ")";
            }
            if (w.closed) out += " -- cycle";
            out += ";\n";
        }
        const auto& anchor = w.points[w.points.size() / 2];
        out += "\\node[font=\\tiny] at (" + detail::fmt(anchor[0] * 1.12) + "," +
               detail::fmt(anchor[1] * 1.12) + ") {" + w.label + "};\n";
    }
    for (const ChamberLabel& c : d.chambers)
        out += "\\node[font=\\tiny,blue] at (" + detail::fmt(c.at[0]) + "," +
               detail::fmt(c.at[1]) + ") {" + c.text + "};\n";
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace clusterpic
