#pragma once

#include <span>
#include <string>
#include <vector>

#include "mink4r/lorentz2.hpp"

namespace mink4r::io {

/// Axis-aligned bounds of world points.
struct Bounds {
    double xmin, xmax, ymin, ymax;

    static Bounds of(std::span<const Point2> pts);
    /// Grows each side by `fraction` of the extent (1 when the extent is 0).
    Bounds with_margin(double fraction) const;
};

/// Minimal SVG writer in world coordinates. The y-axis is flipped through
/// the viewBox so the picture reads with y pointing up; strokes do not scale.
class SvgDocument {
public:
    explicit SvgDocument(const Bounds& view);

    void polyline(std::span<const Point2> pts, const std::string& stroke, double width = 1.5);
    void line(const Point2& p, const Point2& q, const std::string& stroke, double width = 1.0,
              bool dashed = false);
    void dot(const Point2& p, const std::string& fill);
    void label(const Point2& p, const std::string& text);

    /// Asymptote guides y = x and y = -x across the view.
    void light_cone();

    std::string str() const;

private:
    Bounds view_;
    double unit_;  // one "pixel" in world units, for radii and font sizes
    std::vector<std::string> body_;
};

}  // namespace mink4r::io
