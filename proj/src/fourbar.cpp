#include "mink4r/fourbar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mink4r/errors.hpp"

namespace mink4r {

LinkageParams::LinkageParams(double a, double b, double g, double h) : a_(a), b_(b), g_(g), h_(h) {
    for (double v : {a, b, g, h})
        if (!std::isfinite(v) || !(v > 0.0))
            throw InvalidParams("link lengths must be positive and finite");
}

ConstraintCoeffs constraint_coeffs(const LinkageParams& p, double theta) {
    const double a = p.a(), b = p.b(), g = p.g(), h = p.h();
    const double ch = std::cosh(theta);
    return {
        2.0 * g * b - 2.0 * a * b * ch,
        2.0 * a * b * std::sinh(theta),
        h * h - g * g - b * b - a * a + 2.0 * a * g * ch,
    };
}

double discriminant(const LinkageParams& p, double ch_theta) {
    const double a = p.a(), b = p.b(), g = p.g(), h = p.h();
    const double A = 2.0 * g * b - 2.0 * a * b * ch_theta;
    const double C = h * h - g * g - b * b - a * a + 2.0 * a * g * ch_theta;
    const double B2 = 4.0 * a * a * b * b * (ch_theta * ch_theta - 1.0);
    return B2 + (C - A) * (C + A);
}

namespace {

double sign_of(Branch br) { return br == Branch::Standard ? 1.0 : -1.0; }

// Guarded Newton refinement of s (A ch psi + B sh psi) = C. Only small
// corrections that reduce the residual are accepted, so a root can never
// hop to its partner.
double polish(const ConstraintCoeffs& k, double s, double psi) {
    const auto f = [&](double x) { return s * (k.A * std::cosh(x) + k.B * std::sinh(x)) - k.C; };
    double fx = f(psi);
    for (int it = 0; it < 3 && fx != 0.0; ++it) {
        const double d = s * (k.A * std::sinh(psi) + k.B * std::cosh(psi));
        if (d == 0.0) break;
        const double step = fx / d;
        if (!std::isfinite(step) || std::abs(step) > 1e-6 * std::max(1.0, std::abs(psi))) break;
        const double next = psi - step;
        const double fn = f(next);
        if (!(std::abs(fn) < std::abs(fx))) break;
        psi = next;
        fx = fn;
    }
    return psi;
}

}  // namespace

OutputSolve solve_output_angle(const LinkageParams& p, double theta, const SolverOptions& opts) {
    OutputSolve out;
    const ConstraintCoeffs k = constraint_coeffs(p, theta);
    out.coeffs = k;
    out.discriminant = k.B * k.B + (k.C - k.A) * (k.C + k.A);

    if (out.discriminant < 0.0) {
        out.status = SolveStatus::NoSolution;
        return out;
    }
    const double denom = k.A + k.C;
    if (std::abs(denom) <= opts.branching_tol * std::max(1.0, std::abs(k.A) + std::abs(k.C))) {
        out.status = SolveStatus::BranchingPoint;
        return out;
    }

    // Roots of (A + C) y^2 + 2B y + (A - C) = 0 without cancellation; the
    // labels follow the sign in front of the square root.
    const double sq = std::sqrt(out.discriminant);
    double y_plus = 0.0, y_minus = 0.0;
    if (k.B >= 0.0) {
        const double q = -(k.B + sq);
        if (q == 0.0) {
            y_plus = y_minus = 0.0;
        } else {
            y_minus = q / denom;
            y_plus = (k.A - k.C) / q;
        }
    } else {
        const double q = -k.B + sq;
        y_plus = q / denom;
        y_minus = (k.A - k.C) / q;
    }

    bool lightlike = false;
    for (const auto& [root, y] : {std::pair{Root::Plus, y_plus}, std::pair{Root::Minus, y_minus}}) {
        const double ay = std::abs(y);
        if (!std::isfinite(y) || std::abs(ay - 1.0) <= opts.lightlike_tol) {
            lightlike = true;
            continue;
        }
        if (ay < 1.0) {
            const double psi = polish(k, 1.0, 2.0 * std::atanh(y));
            out.solutions.push_back({psi, root, Branch::Standard});
        } else if (opts.mode == SolveMode::Extended) {
            // y = coth(t): ch psi_formula = -ch 2t, sh psi_formula = -sh 2t.
            const double psi = polish(k, -1.0, 2.0 * std::atanh(1.0 / y));
            out.solutions.push_back({psi, root, Branch::Reversed});
        }
    }

    if (lightlike)
        out.status = SolveStatus::LightlikeOutput;
    else if (out.solutions.empty())
        out.status = SolveStatus::NoSolution;
    return out;
}

std::vector<double> solve_output_angle_alt(const LinkageParams& p, double theta) {
    const ConstraintCoeffs k = constraint_coeffs(p, theta);
    if (!(k.A > std::abs(k.B)))
        throw DomainError("alternative formula needs A > |B|", k.A);
    const double norm = std::sqrt((k.A - k.B) * (k.A + k.B));
    const double ratio = k.C / norm;
    if (!(ratio >= 1.0))
        throw DomainError("alternative formula needs C / sqrt(A^2 - B^2) >= 1, got " + std::to_string(ratio), ratio);
    const double delta = std::atanh(k.B / k.A);
    const double spread = std::acosh(ratio);
    return {-delta + spread, -delta - spread};
}

double closure_residual(const LinkageParams& p, double theta, double psi, Branch branch) {
    const double a = p.a(), b = p.b(), g = p.g(), h = p.h();
    const double s = sign_of(branch);
    return (g * g + a * a + b * b - h * h) + 2.0 * s * g * b * std::cosh(psi) - 2.0 * a * g * std::cosh(theta) -
           2.0 * s * a * b * std::cosh(psi - theta);
}

Pose pose(const LinkageParams& p, double theta, const OutputSolution& sol) {
    const double s = sign_of(sol.branch);
    return {
        {0.0, 0.0},
        {p.a() * std::cosh(theta), p.a() * std::sinh(theta)},
        {p.g() + s * p.b() * std::cosh(sol.psi), s * p.b() * std::sinh(sol.psi)},
        {p.g(), 0.0},
    };
}

BranchingPoints branching_points(const LinkageParams& p, double tol) {
    const double a = p.a(), b = p.b(), g = p.g(), h = p.h();
    const double band = tol * p.perimeter();
    if (std::abs(g - b) <= band) {
        if (std::abs(h - a) <= band) return {BranchingKind::AllPointsBranching};
        return {BranchingKind::NoBranching};
    }
    const double ch = (a * a - h * h) / (2.0 * a * (g - b)) + (g - b) / (2.0 * a);
    return {BranchingKind::Discrete, ch, ch >= 1.0};
}

CouplerAngle coupler_frame(const LinkageParams& p, double theta, const OutputSolution& sol) {
    const Pose ps = pose(p, theta, sol);
    const LVec2 d = ps.B - ps.A;
    if (std::abs(d.u1) <= 1e-12 * std::max(1.0, p.perimeter()))
        throw DegenerateDenominator("coupler angle: g + b ch psi - a ch theta vanishes");
    const double ratio = d.u2 / d.u1;
    if (!(std::abs(ratio) < 1.0)) throw TimelikeCoupler("coupler angle: AB is not spacelike");
    const double frame = std::atanh(ratio);
    return {frame - theta + std::numbers::pi, frame, d.u1 > 0.0 ? 1 : -1};
}

double coupler_angle(const LinkageParams& p, double theta, double psi) {
    return coupler_frame(p, theta, {psi, Root::Plus, Branch::Standard}).phi;
}

double transmission_argument(const LinkageParams& p, double ch_theta) {
    const double a = p.a(), b = p.b(), g = p.g(), h = p.h();
    return (-g * g - a * a + h * h + b * b + 2.0 * a * g * ch_theta) / (2.0 * b * h);
}

TransmissionAngle transmission_angle(const LinkageParams& p, double theta) {
    const double ch = std::cosh(theta);
    const double q = transmission_argument(p, ch);
    // Aligned positions sit exactly on q = 1; allow for the rounding of ch.
    if (!(q >= 1.0 - 1e-12))
        throw DomainError("transmission angle undefined: arch argument " + std::to_string(q) + " < 1", q);
    const double a = p.a(), g = p.g();
    return {std::acosh(std::max(q, 1.0)), q, g * g + a * a - 2.0 * a * g * ch};
}

ChLimits input_limits(const LinkageParams& p) {
    const double a = p.a(), b = p.b(), g = p.g(), h = p.h();
    const double base = a * a + g * g;
    return {(base - (b + h) * (b + h)) / (2.0 * a * g), (base - (b - h) * (b - h)) / (2.0 * a * g)};
}

ChLimits output_limits(const LinkageParams& p) {
    const double a = p.a(), b = p.b(), g = p.g(), h = p.h();
    const double base = g * g + b * b;
    return {((a - h) * (a - h) - base) / (2.0 * b * g), ((a + h) * (a + h) - base) / (2.0 * b * g)};
}

LimitReport limit_report(const LinkageParams& p) {
    const ChLimits in = input_limits(p);
    const ChLimits outl = output_limits(p);
    return {in.ch_min,        in.ch_max,        outl.ch_min,        outl.ch_max,
            in.ch_min >= 1.0, in.ch_max >= 1.0, outl.ch_min >= 1.0, outl.ch_max >= 1.0};
}

const char* to_string(Root r) { return r == Root::Plus ? "plus" : "minus"; }

const char* to_string(Branch b) { return b == Branch::Standard ? "standard" : "reversed"; }

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Ok: return "ok";
        case SolveStatus::NoSolution: return "no-solution";
        case SolveStatus::BranchingPoint: return "branching-point";
        case SolveStatus::LightlikeOutput: return "lightlike-output";
    }
    return "?";
}

const char* to_string(BranchingKind k) {
    switch (k) {
        case BranchingKind::Discrete: return "discrete";
        case BranchingKind::NoBranching: return "none";
        case BranchingKind::AllPointsBranching: return "all";
    }
    return "?";
}

}  // namespace mink4r
