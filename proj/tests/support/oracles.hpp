#pragma once

// Independent reference computations for the property and acceptance
// suites. Nothing here calls the solver paths it is used to check.

#include <algorithm>
#include <cmath>
#include <vector>

#include "mink4r/coupler_curve.hpp"
#include "mink4r/fourbar.hpp"

namespace mink4r::testing {

/// |B - A|^2 - h^2 straight from joint coordinates, for the output pivot
/// on the standard (sign = +1) or reversed (sign = -1) branch.
inline double coordinate_closure(const LinkageParams& p, double theta, double psi, double sign) {
    const double dx = p.g() + sign * p.b() * std::cosh(psi) - p.a() * std::cosh(theta);
    const double dy = sign * p.b() * std::sinh(psi) - p.a() * std::sinh(theta);
    return (dx - dy) * (dx + dy) - p.h() * p.h();
}

struct SampledRoot {
    double psi;
    Branch branch;
};

namespace detail {

template <typename F>
double bisect(F&& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section search for the extremum of f on [lo, hi]; minimizes s*f.
template <typename F>
double extremum(F&& f, double lo, double hi, double s) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double f1 = s * f(x1), f2 = s * f(x2);
    for (int i = 0; i < 120; ++i) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = s * f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = s * f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Dense scan of psi in [-range, range] with the given step on one branch,
/// refined by bisection on sign changes. Cells where the residual touches
/// or dips through zero without a sign change at the grid points are
/// resolved with a golden-section search for the extremum.
inline std::vector<double> sample_roots_on_branch(const LinkageParams& p, double theta, double sign,
                                                  double range = 6.0, double step = 1e-3) {
    const auto f = [&](double psi) { return coordinate_closure(p, theta, psi, sign); };
    const int n = static_cast<int>(std::llround(2.0 * range / step));
    std::vector<double> grid(n + 1), val(n + 1);
    for (int k = 0; k <= n; ++k) {
        grid[k] = -range + step * k;
        val[k] = f(grid[k]);
    }
    const double scale = std::pow(p.perimeter() * std::cosh(range), 2);

    std::vector<double> roots;
    for (int k = 0; k <= n; ++k) {
        if (val[k] == 0.0) roots.push_back(grid[k]);
        if (k < n && val[k] != 0.0 && val[k + 1] != 0.0 && (val[k] < 0.0) != (val[k + 1] < 0.0))
            roots.push_back(detail::bisect(f, grid[k], grid[k + 1]));
        if (k > 0 && k < n) {
            const bool same = (val[k - 1] < 0.0) == (val[k] < 0.0) && (val[k] < 0.0) == (val[k + 1] < 0.0);
            const bool dip = std::abs(val[k]) <= std::abs(val[k - 1]) && std::abs(val[k]) <= std::abs(val[k + 1]);
            if (same && dip && val[k] != 0.0) {
                const double s = val[k] > 0.0 ? 1.0 : -1.0;
                const double x = detail::extremum(f, grid[k - 1], grid[k + 1], s);
                const double fx = f(x);
                if ((fx < 0.0) != (val[k] < 0.0) && fx != 0.0) {
                    roots.push_back(detail::bisect(f, grid[k - 1], x));
                    roots.push_back(detail::bisect(f, x, grid[k + 1]));
                } else if (std::abs(fx) <= 1e-14 * scale) {
                    roots.push_back(x);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(), [](double l, double r) { return std::abs(l - r) < 1e-9; }),
                roots.end());
    return roots;
}

inline std::vector<SampledRoot> sample_roots(const LinkageParams& p, double theta, bool with_reversed,
                                             double range = 6.0, double step = 1e-3) {
    std::vector<SampledRoot> out;
    for (double psi : sample_roots_on_branch(p, theta, 1.0, range, step)) out.push_back({psi, Branch::Standard});
    if (with_reversed)
        for (double psi : sample_roots_on_branch(p, theta, -1.0, range, step)) out.push_back({psi, Branch::Reversed});
    return out;
}

/// Solver and oracle agree: same number of roots per branch inside
/// |psi| < window, each solver root within tol of a distinct oracle root.
inline bool same_root_sets(const std::vector<OutputSolution>& solved, const std::vector<SampledRoot>& sampled,
                           double window, double tol) {
    for (Branch br : {Branch::Standard, Branch::Reversed}) {
        std::vector<double> s, o;
        for (const auto& x : solved)
            if (x.branch == br && std::abs(x.psi) < window) s.push_back(x.psi);
        for (const auto& x : sampled)
            if (x.branch == br && std::abs(x.psi) < window) o.push_back(x.psi);
        std::sort(s.begin(), s.end());
        std::sort(o.begin(), o.end());
        if (s.size() != o.size()) return false;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (std::abs(s[i] - o[i]) > tol) return false;
    }
    return true;
}

/// Plain sum of c(i, j) X^i Y^j with std::pow.
inline double monomial_sum(const SexticCurve& c, double X, double Y) {
    double acc = 0.0;
    for (int i = 0; i <= SexticCurve::kDegree; ++i)
        for (int j = 0; i + j <= SexticCurve::kDegree; ++j) acc += c.coefficient(i, j) * std::pow(X, i) * std::pow(Y, j);
    return acc;
}

}  // namespace mink4r::testing
