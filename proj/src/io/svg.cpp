#include "mink4r/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mink4r/io/format.hpp"

namespace mink4r::io {

namespace {

constexpr double kPixels = 800.0;

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string coord(const Point2& p) { return format_number(p.u1) + "," + format_number(-p.u2); }

}  // namespace

Bounds Bounds::of(std::span<const Point2> pts) {
    if (pts.empty()) return {-1.0, 1.0, -1.0, 1.0};
    Bounds b{pts[0].u1, pts[0].u1, pts[0].u2, pts[0].u2};
    for (const Point2& p : pts) {
        b.xmin = std::min(b.xmin, p.u1);
        b.xmax = std::max(b.xmax, p.u1);
        b.ymin = std::min(b.ymin, p.u2);
        b.ymax = std::max(b.ymax, p.u2);
    }
    return b;
}

Bounds Bounds::with_margin(double fraction) const {
    const double dx = xmax > xmin ? (xmax - xmin) * fraction : 1.0;
    const double dy = ymax > ymin ? (ymax - ymin) * fraction : 1.0;
    return {xmin - dx, xmax + dx, ymin - dy, ymax + dy};
}

SvgDocument::SvgDocument(const Bounds& view)
    : view_(view), unit_(std::max(view.xmax - view.xmin, view.ymax - view.ymin) / kPixels) {}

void SvgDocument::polyline(std::span<const Point2> pts, const std::string& stroke, double width) {
    if (pts.empty()) return;
    std::string d = "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + format_number(width) +
                    "\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) d += ' ';
        d += coord(pts[i]);
    }
    body_.push_back(d + "\"/>");
}

void SvgDocument::line(const Point2& p, const Point2& q, const std::string& stroke, double width, bool dashed) {
    std::string s = "<line x1=\"" + format_number(p.u1) + "\" y1=\"" + format_number(-p.u2) + "\" x2=\"" +
                    format_number(q.u1) + "\" y2=\"" + format_number(-q.u2) + "\" stroke=\"" + stroke +
                    "\" stroke-width=\"" + format_number(width) + "\" vector-effect=\"non-scaling-stroke\"";
    if (dashed) s += " stroke-dasharray=\"6 4\"";
    body_.push_back(s + "/>");
}

void SvgDocument::dot(const Point2& p, const std::string& fill) {
    body_.push_back("<circle cx=\"" + format_number(p.u1) + "\" cy=\"" + format_number(-p.u2) + "\" r=\"" +
                    format_number(4.0 * unit_) + "\" fill=\"" + fill + "\"/>");
}

void SvgDocument::label(const Point2& p, const std::string& text) {
    body_.push_back("<text x=\"" + format_number(p.u1 + 6.0 * unit_) + "\" y=\"" +
                    format_number(-p.u2 - 6.0 * unit_) + "\" font-family=\"sans-serif\" font-size=\"" +
                    format_number(14.0 * unit_) + "\">" + xml_escape(text) + "</text>");
}

void SvgDocument::light_cone() {
    const double l = std::max({std::abs(view_.xmin), std::abs(view_.xmax), std::abs(view_.ymin),
                               std::abs(view_.ymax)});
    line({-l, -l}, {l, l}, "#bbbbbb", 1.0, true);
    line({-l, l}, {l, -l}, "#bbbbbb", 1.0, true);
}

std::string SvgDocument::str() const {
    const double w = view_.xmax - view_.xmin;
    const double h = view_.ymax - view_.ymin;
    const double aspect = std::clamp(h / w, 0.125, 4.0);
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(kPixels) << "\" height=\""
       << format_number(std::round(kPixels * aspect)) << "\" viewBox=\"" << format_number(view_.xmin) << " "
       << format_number(-view_.ymax) << " " << format_number(w) << " " << format_number(h) << "\">\n";
    os << "<rect x=\"" << format_number(view_.xmin) << "\" y=\"" << format_number(-view_.ymax) << "\" width=\""
       << format_number(w) << "\" height=\"" << format_number(h) << "\" fill=\"white\"/>\n";
    for (const auto& e : body_) os << e << "\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace mink4r::io
