#include "mink4r/double_plane.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mink4r {

DoubleNumber::DoubleNumber(double real, double unipotent) : x_(real), y_(unipotent) {
    if (!std::isfinite(real) || !std::isfinite(unipotent))
        throw std::domain_error("DoubleNumber: non-finite component");
}

DoubleNumber operator+(const DoubleNumber& z, const DoubleNumber& w) {
    return {z.x() + w.x(), z.y() + w.y()};
}

DoubleNumber operator-(const DoubleNumber& z, const DoubleNumber& w) {
    return {z.x() - w.x(), z.y() - w.y()};
}

DoubleNumber operator*(double s, const DoubleNumber& z) { return {s * z.x(), s * z.y()}; }

DoubleNumber mul(const DoubleNumber& z, const DoubleNumber& w) {
    return {z.x() * w.x() + z.y() * w.y(), z.x() * w.y() + z.y() * w.x()};
}

DoubleNumber conj(const DoubleNumber& z) { return {z.x(), -z.y()}; }

double hyperbolic_scalar_product(const DoubleNumber& z, const DoubleNumber& w) {
    return z.x() * w.x() - z.y() * w.y();
}

double hyperbolic_modulus(const DoubleNumber& z) {
    // (x - y)(x + y) keeps relative accuracy near the isotropic lines.
    return std::sqrt(std::abs((z.x() - z.y()) * (z.x() + z.y())));
}

bool is_isotropic(const DoubleNumber& z, double tol) {
    const double q = (z.x() - z.y()) * (z.x() + z.y());
    const double scale = std::max(1.0, z.x() * z.x() + z.y() * z.y());
    return std::abs(q) <= tol * scale;
}

DoubleNumber from_polar(double r, double phi) {
    if (!(r > 0.0)) throw std::domain_error("from_polar: radius must be positive");
    return {r * std::cosh(phi), r * std::sinh(phi)};
}

DoubleNumber minkowski_circle_point(double r, double t) { return from_polar(r, t); }

}  // namespace mink4r
