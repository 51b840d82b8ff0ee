#include "mink4r/coupler_curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "mink4r/errors.hpp"

namespace mink4r {

GammaPair gamma_of_point(double h, double x, double y, double tol) {
    const double r2 = (x - y) * (x + y);
    const double s2 = (x - h - y) * (x - h + y);
    if (!(r2 > tol * std::max(1.0, x * x + y * y)))
        throw DegenerateLeg("coupler point: leg AX is not spacelike");
    if (!(s2 > tol * std::max(1.0, (x - h) * (x - h) + y * y)))
        throw DegenerateLeg("coupler point: leg BX is not spacelike");
    const double rs = std::sqrt(r2) * std::sqrt(s2);
    return {(x * (x - h) - y * y) / rs, h * y / rs};
}

Point2 trace_point(const LinkageParams& p, double theta, const OutputSolution& sol, const CouplerPoint& pt) {
    const CouplerAngle frame = coupler_frame(p, theta, sol);
    const Point2 a{p.a() * std::cosh(theta), p.a() * std::sinh(theta)};
    const LVec2 offset = boost_apply(Boost{frame.frame_angle}, LVec2{pt.x, pt.y});
    return a + static_cast<double>(frame.orientation) * offset;
}

CouplerTrace trace_curve(const LinkageParams& p, const CouplerPoint& pt, double theta_lo, double theta_hi,
                         std::size_t n, const SolverOptions& opts) {
    if (n < 2) throw std::invalid_argument("trace_curve: need at least two samples");
    if (!(theta_lo < theta_hi)) throw std::invalid_argument("trace_curve: empty theta range");

    CouplerTrace out;
    out.samples = n;
    // (root, branch) -> index of the polyline still being extended
    std::map<std::pair<Root, Branch>, std::size_t> open;
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = theta_lo + (theta_hi - theta_lo) * static_cast<double>(k) / static_cast<double>(n - 1);
        const OutputSolve solved = solve_output_angle(p, theta, opts);

        std::map<std::pair<Root, Branch>, std::size_t> next;
        for (const OutputSolution& sol : solved.solutions) {
            Point2 X;
            try {
                X = trace_point(p, theta, sol, pt);
            } catch (const Error&) {
                ++out.skipped;
                continue;
            }
            const auto key = std::pair{sol.root, sol.branch};
            std::size_t idx;
            if (auto it = open.find(key); it != open.end()) {
                idx = it->second;
            } else {
                idx = out.polylines.size();
                out.polylines.push_back({sol.root, sol.branch, {}});
            }
            out.polylines[idx].points.push_back({theta, X.u1, X.u2});
            next[key] = idx;
        }
        open = std::move(next);
    }
    return out;
}

void SexticCurve::set_coefficient(int i, int j, double v) {
    if (i < 0 || j < 0 || i + j > kDegree) throw std::out_of_range("SexticCurve: monomial degree exceeds 6");
    c_[i][j] = v;
}

void SexticCurve::normalize() {
    const double m = max_abs_coefficient();
    if (m == 0.0) return;
    for (auto& row : c_)
        for (double& v : row) v /= m;
    scale_ *= m;
}

int SexticCurve::max_total_degree() const {
    int deg = -1;
    for (int i = 0; i <= kDegree; ++i)
        for (int j = 0; i + j <= kDegree; ++j)
            if (c_[i][j] != 0.0) deg = std::max(deg, i + j);
    return deg;
}

double SexticCurve::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& row : c_)
        for (double v : row) m = std::max(m, std::abs(v));
    return m;
}

namespace {

// Bivariate polynomial of total degree <= 6 in X, Y.
struct Poly {
    std::array<std::array<double, 7>, 7> c{};

    static Poly constant(double v) {
        Poly p;
        p.c[0][0] = v;
        return p;
    }
    static Poly monomial(double v, int i, int j) {
        Poly p;
        p.c[i][j] = v;
        return p;
    }
};

Poly operator+(Poly p, const Poly& q) {
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) p.c[i][j] += q.c[i][j];
    return p;
}

Poly operator-(Poly p, const Poly& q) {
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) p.c[i][j] -= q.c[i][j];
    return p;
}

Poly operator*(double s, Poly p) {
    for (auto& row : p.c)
        for (double& v : row) v *= s;
    return p;
}

Poly operator*(const Poly& p, const Poly& q) {
    Poly r;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; i + j < 7; ++j) {
            if (p.c[i][j] == 0.0) continue;
            for (int k = 0; k < 7; ++k)
                for (int l = 0; k + l < 7; ++l) {
                    if (q.c[k][l] == 0.0) continue;
                    if (i + j + k + l > 6) throw std::logic_error("coupler curve expansion exceeds degree 6");
                    r.c[i + k][j + l] += p.c[i][j] * q.c[k][l];
                }
        }
    return r;
}

}  // namespace

SexticCurve sextic_coefficients(const LinkageParams& p, const CouplerPoint& pt) {
    const double a = p.a(), b = p.b(), g = p.g(), h = p.h();
    const double x = pt.x, y = pt.y;
    const GammaPair gam = gamma_of_point(h, x, y);
    const double r2 = (x - y) * (x + y);
    const double s2 = (x - h - y) * (x - h + y);
    const double r = std::sqrt(r2);
    const double s = std::sqrt(s2);
    const double sc = s * gam.chg;
    const double ss = s * gam.shg;

    const Poly X = Poly::monomial(1.0, 1, 0);
    const Poly Y = Poly::monomial(1.0, 0, 1);
    const Poly one = Poly::constant(1.0);

    // |CB| = b, with BX = s (ch(l + g), sh(l + g)) expanded in (ch l, sh l).
    const Poly a1 = 2.0 * sc * X - 2.0 * ss * Y - 2.0 * g * sc * one;
    const Poly b1 = 2.0 * ss * X - 2.0 * sc * Y - 2.0 * g * ss * one;
    const Poly c1 = X * X - 2.0 * g * X - Y * Y + (g * g - b * b + s2) * one;
    // |OA| = a, with AX = r (ch l, sh l).
    const Poly a2 = 2.0 * r * X;
    const Poly b2 = -2.0 * r * Y;
    const Poly c2 = X * X - Y * Y + (r2 - a * a) * one;

    const Poly u = c1 * b2 - c2 * b1;
    const Poly v = a2 * c1 - a1 * c2;
    const Poly w = a1 * b2 - a2 * b1;
    const Poly f = u * u - v * v - w * w;

    SexticCurve curve;
    for (int i = 0; i <= SexticCurve::kDegree; ++i)
        for (int j = 0; i + j <= SexticCurve::kDegree; ++j) curve.set_coefficient(i, j, f.c[i][j]);
    curve.normalize();
    return curve;
}

double sextic_eval(const SexticCurve& curve, double X, double Y) {
    double acc = 0.0;
    for (int i = SexticCurve::kDegree; i >= 0; --i) {
        double row = 0.0;
        for (int j = SexticCurve::kDegree - i; j >= 0; --j) row = row * Y + curve.coefficient(i, j);
        acc = acc * X + row;
    }
    return acc;
}

double sextic_residual(const SexticCurve& curve, double X, double Y) {
    const double m = std::max({1.0, std::abs(X), std::abs(Y)});
    return std::abs(sextic_eval(curve, X, Y)) / std::pow(m, 6);
}

}  // namespace mink4r
