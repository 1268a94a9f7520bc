#include "vknot/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace vknot {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRadius = 100.0;
constexpr double kSpacing = 260.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // normalize -0.00
    return buf;
}

struct Point {
    double x, y;
};

// Slot k of an L-slot circle sits at angle -90 + 360*k/L degrees,
// counterclockwise from the basepoint mark at the top.
Point slot_point(int circle, int slot, int len, double pull = 1.0) {
    const double cx = kMargin + kRadius + circle * kSpacing;
    const double cy = kMargin + kRadius;
    const double angle = -kPi / 2 + 2 * kPi * slot / std::max(len, 1);
    return {cx + pull * kRadius * std::cos(angle), cy + pull * kRadius * std::sin(angle)};
}

}  // namespace

std::string render_svg(const GaussDiagram& d) {
    const int circles = std::max(d.circle_count(), 1);
    const double width = 2 * kMargin + 2 * kRadius + (circles - 1) * kSpacing;
    const double height = 2 * kMargin + 2 * kRadius + 20.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
        << num(height) << "\">\n";
    out << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
           "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#000\"/>"
           "</marker></defs>\n";

    for (int c = 0; c < d.circle_count(); ++c) {
        const double cx = kMargin + kRadius + c * kSpacing;
        const double cy = kMargin + kRadius;
        out << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\""
            << num(kRadius) << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
        // Basepoint tick at the top of the circle.
        out << "<line x1=\"" << num(cx) << "\" y1=\"" << num(cy - kRadius - 8) << "\" x2=\""
            << num(cx) << "\" y2=\"" << num(cy - kRadius + 8)
            << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    }

    const ArrowEnds ends = arrow_ends(d);
    for (int a = 0; a < d.arrow_count(); ++a) {
        const Position t = ends.tail[a];
        const Position h = ends.head[a];
        const Point p1 = slot_point(t.circle, t.slot, d.circle_length(t.circle), 0.96);
        const Point p2 = slot_point(h.circle, h.slot, d.circle_length(h.circle), 0.96);
        out << "<line x1=\"" << num(p1.x) << "\" y1=\"" << num(p1.y) << "\" x2=\""
            << num(p2.x) << "\" y2=\"" << num(p2.y)
            << "\" stroke=\"#444\" stroke-width=\"1\" marker-end=\"url(#head)\"/>\n";
        out << "<text x=\"" << num((p1.x + p2.x) / 2) << "\" y=\"" << num((p1.y + p2.y) / 2)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << (a + 1)
            << (d.sign_of(a) == Sign::Plus ? '+' : '-') << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace vknot
