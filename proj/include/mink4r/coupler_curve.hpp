#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "mink4r/fourbar.hpp"

// Coupler curves: the path of a point rigidly attached to the coupler AB,
// traced parametrically through solved poses, and its implicit equation.
//
// Eliminating the coupler direction (ch l, sh l) from the two crank-length
// constraints
//
//     a1 ch l + b1 sh l = c1      (|CB| = b)
//     a2 ch l + b2 sh l = c2      (|OA| = a)
//
// under ch^2 l - sh^2 l = 1 gives the degree-6 curve
//
//     (c1 b2 - c2 b1)^2 - (a2 c1 - a1 c2)^2 - (a1 b2 - a2 b1)^2 = 0.

namespace mink4r {

/// Coupler point in the moving frame: origin at A, x-axis along AB.
struct CouplerPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Direction pair (ch g, sh g) of the relative angle g between the legs AX
/// and BX. Kept as a pair: ch g = -1 happens for points between A and B.
struct GammaPair {
    double chg;
    double shg;
};

/// chg = (x(x - h) - y^2) / (r s), shg = h y / (r s) with
/// r = sqrt(x^2 - y^2), s = sqrt((x - h)^2 - y^2). Throws DegenerateLeg
/// when either leg is not strictly spacelike.
GammaPair gamma_of_point(double h, double x, double y, double tol = 1e-12);

/// Image of the coupler point in the fixed frame for a solved pose.
/// Propagates TimelikeCoupler / DegenerateDenominator.
Point2 trace_point(const LinkageParams& p, double theta, const OutputSolution& sol, const CouplerPoint& pt);

struct TraceSample {
    double theta;
    double X;
    double Y;
};

struct Polyline {
    Root root;
    Branch branch;
    std::vector<TraceSample> points;
};

struct CouplerTrace {
    /// Ordered by the sample index where each run starts, then by solution
    /// order (Plus before Minus).
    std::vector<Polyline> polylines;
    std::size_t samples = 0;
    std::size_t skipped = 0;  ///< solved poses that trace_point rejected
};

/// Uniform theta sampling over [theta_lo, theta_hi] with n >= 2 samples.
/// Infeasible samples break the polyline of the affected (root, branch).
CouplerTrace trace_curve(const LinkageParams& p, const CouplerPoint& pt, double theta_lo, double theta_hi,
                         std::size_t n, const SolverOptions& opts = {});

/// Dense coefficient table c(i, j) of X^i Y^j, i + j <= 6.
class SexticCurve {
public:
    static constexpr int kDegree = 6;

    double coefficient(int i, int j) const { return c_.at(i).at(j); }
    void set_coefficient(int i, int j, double v);

    /// Largest |coefficient| divided out during normalization (1 if never normalized).
    double scale() const noexcept { return scale_; }

    /// Divides by the largest-magnitude coefficient. No-op for the zero curve.
    void normalize();

    /// Maximum i + j over nonzero coefficients, or -1 for the zero curve.
    int max_total_degree() const;

    double max_abs_coefficient() const;

private:
    std::array<std::array<double, kDegree + 1>, kDegree + 1> c_{};
    double scale_ = 1.0;
};

/// Normalized implicit coupler curve. Throws DegenerateLeg unless both legs
/// of the coupler point are spacelike.
SexticCurve sextic_coefficients(const LinkageParams& p, const CouplerPoint& pt);

/// Horner evaluation in X over rows that are Horner polynomials in Y.
double sextic_eval(const SexticCurve& curve, double X, double Y);

/// |F(X, Y)| / max(1, |X|, |Y|)^6 for a normalized curve.
double sextic_residual(const SexticCurve& curve, double X, double Y);

}  // namespace mink4r
