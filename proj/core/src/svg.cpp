#include "updraw/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace updraw {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

std::string render_svg(const Drawing& d, const SvgOptions& opt) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    auto grow = [&](Pt p) {
        if (first) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            first = false;
        } else {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    };
    for (const auto& v : d.vertices) grow(v.pos);
    for (const auto& e : d.edges)
        for (const Pt& b : e.bends) grow(b);

    double w = std::max(1e-9, xmax - xmin);
    double h = std::max(1e-9, ymax - ymin);
    double scale = opt.target_width / w;
    double margin = 24;
    double pw = w * scale + 2 * margin;
    double ph = h * scale + 2 * margin;

    /* page coordinates: y flipped so larger drawing y is higher on the page */
    auto px = [&](Pt p) { return margin + (p.x - xmin) * scale; };
    auto py = [&](Pt p) { return margin + (ymax - p.y) * scale; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(pw) +
           "\" height=\"" + num(ph) + "\" viewBox=\"0 0 " + num(pw) + " " + num(ph) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (size_t e = 0; e < d.edges.size(); ++e) {
        auto pts = d.polyline((int)e);
        out += "<polyline fill=\"none\" stroke=\"#334\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) out += " ";
            out += num(px(pts[i])) + "," + num(py(pts[i]));
        }
        out += "\"/>\n";
        for (size_t i = 1; i + 1 < pts.size(); ++i) {
            out += "<rect x=\"" + num(px(pts[i]) - 2.5) + "\" y=\"" + num(py(pts[i]) - 2.5) +
                   "\" width=\"5\" height=\"5\" fill=\"#c40\"/>\n";
        }
    }

    for (const auto& v : d.vertices) {
        out += "<circle cx=\"" + num(px(v.pos)) + "\" cy=\"" + num(py(v.pos)) +
               "\" r=\"4\" fill=\"#06c\"/>\n";
        if (opt.labels) {
            out += "<text x=\"" + num(px(v.pos) + 6) + "\" y=\"" + num(py(v.pos) - 6) +
                   "\" font-family=\"monospace\" font-size=\"12\">" + v.name + "</text>\n";
        }
    }

    out += "</svg>\n";
    return out;
}

} // namespace updraw
