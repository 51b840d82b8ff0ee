#pragma once

// Double (split-complex) numbers x + jy with j*j = 1. They are the
// coordinates of the Minkowskian plane; the hyperbolic modulus
// sqrt|x^2 - y^2| plays the role of the Euclidean distance to the origin.
//
// There is deliberately no division: the isotropic lines y = +-x are zero
// divisors.

namespace mink4r {

class DoubleNumber {
public:
    constexpr DoubleNumber() = default;

    /// Throws std::domain_error unless both parts are finite.
    DoubleNumber(double real, double unipotent);

    constexpr double x() const noexcept { return x_; }
    constexpr double y() const noexcept { return y_; }

    friend bool operator==(const DoubleNumber&, const DoubleNumber&) = default;

private:
    double x_ = 0.0;
    double y_ = 0.0;
};

DoubleNumber operator+(const DoubleNumber& z, const DoubleNumber& w);
DoubleNumber operator-(const DoubleNumber& z, const DoubleNumber& w);
DoubleNumber operator*(double s, const DoubleNumber& z);

/// (x + yj)(r + sj) = (xr + ys) + j(xs + yr)
DoubleNumber mul(const DoubleNumber& z, const DoubleNumber& w);
inline DoubleNumber operator*(const DoubleNumber& z, const DoubleNumber& w) { return mul(z, w); }

/// Hyperbolic conjugate x - yj.
DoubleNumber conj(const DoubleNumber& z);

/// <z, w> = Re(z conj(w)) = xu - yv.
double hyperbolic_scalar_product(const DoubleNumber& z, const DoubleNumber& w);

/// sqrt|x^2 - y^2|
double hyperbolic_modulus(const DoubleNumber& z);

/// True iff |x^2 - y^2| <= tol * max(1, x^2 + y^2).
bool is_isotropic(const DoubleNumber& z, double tol = 1e-12);

/// r e^{j phi} = r (ch phi + j sh phi), right branch of the Minkowskian circle.
/// Throws std::domain_error for r <= 0.
DoubleNumber from_polar(double r, double phi);

/// Point (r ch t, r sh t) on x^2 - y^2 = r^2.
DoubleNumber minkowski_circle_point(double r, double t);

}  // namespace mink4r
