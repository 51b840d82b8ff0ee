#pragma once

#include <optional>
#include <vector>

#include "mink4r/lorentz2.hpp"

// Position analysis of the planar 4R chain on the Minkowskian plane.
//
// Frame: O at the origin, the fixed pivot C at (g, 0). The input crank OA
// sits at A = (a ch theta, a sh theta); the output pivot B = (g + b ch psi,
// b sh psi) on the standard branch of its Minkowskian circle around C.
// Closing the loop |AB|^2 = h^2 gives
//
//     A(theta) ch psi + B(theta) sh psi = C(theta)
//
// which the tanh-half substitution y = th(psi/2) turns into
// (A + C) y^2 + 2B y + (A - C) = 0.

namespace mink4r {

/// Link lengths: a = |OA| (input crank), b = |CB| (output crank),
/// g = |OC| (ground), h = |AB| (coupler).
class LinkageParams {
public:
    /// Throws InvalidParams unless all four lengths are positive and finite.
    LinkageParams(double a, double b, double g, double h);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double g() const noexcept { return g_; }
    double h() const noexcept { return h_; }

    /// a + b + g + h, the reference length for relative tolerances.
    double perimeter() const noexcept { return a_ + b_ + g_ + h_; }

    LinkageParams scaled(double c) const { return {c * a_, c * b_, c * g_, c * h_}; }

    friend bool operator==(const LinkageParams&, const LinkageParams&) = default;

private:
    double a_, b_, g_, h_;
};

struct ConstraintCoeffs {
    double A;
    double B;
    double C;
};

ConstraintCoeffs constraint_coeffs(const LinkageParams& p, double theta);

/// B^2 + C^2 - A^2 as a function of ch(theta); B^2 is taken as
/// 4a^2b^2(ch^2 - 1), so it is defined for any real ch value.
double discriminant(const LinkageParams& p, double ch_theta);

enum class Root { Plus, Minus };

/// Standard: B = (g + b ch psi, b sh psi). Reversed: B = (g - b ch psi,
/// -b sh psi), the past-pointing branch reached by tanh-half roots |y| > 1.
enum class Branch { Standard, Reversed };

enum class SolveMode { Strict, Extended };

enum class SolveStatus { Ok, NoSolution, BranchingPoint, LightlikeOutput };

struct OutputSolution {
    double psi;
    Root root;
    Branch branch;
};

struct SolverOptions {
    SolveMode mode = SolveMode::Strict;
    /// |A + C| <= branching_tol * max(1, |A| + |C|) is a branching point.
    double branching_tol = 1e-10;
    /// | |y| - 1 | <= lightlike_tol marks an isotropic output direction.
    double lightlike_tol = 1e-12;
};

struct OutputSolve {
    SolveStatus status = SolveStatus::Ok;
    /// Plus root first. With LightlikeOutput the isotropic root is dropped
    /// and any regular root is still listed.
    std::vector<OutputSolution> solutions;
    ConstraintCoeffs coeffs{};
    double discriminant = 0.0;
};

OutputSolve solve_output_angle(const LinkageParams& p, double theta, const SolverOptions& opts = {});

/// psi = -artanh(B/A) +- arch(C / sqrt(A^2 - B^2)). Needs A > |B| and
/// C / sqrt(A^2 - B^2) >= 1; throws DomainError (carrying that ratio, or A
/// when A <= |B|) otherwise. Only standard-branch solutions are produced.
std::vector<double> solve_output_angle_alt(const LinkageParams& p, double theta);

/// |B - A|^2 - h^2 in the Lorentzian sense, for the pose (theta, psi) on the
/// given branch. Evaluated as
/// g^2 + a^2 + b^2 - h^2 + 2s gb ch psi - 2ag ch theta - 2s ab ch(psi - theta),
/// s = +1 (Standard) or -1 (Reversed).
double closure_residual(const LinkageParams& p, double theta, double psi, Branch branch = Branch::Standard);

struct Pose {
    Point2 O, A, B, C;
};

Pose pose(const LinkageParams& p, double theta, const OutputSolution& sol);

enum class BranchingKind { Discrete, NoBranching, AllPointsBranching };

struct BranchingPoints {
    BranchingKind kind;
    double ch_theta = 0.0;     ///< Discrete only
    bool realizable = false;   ///< Discrete only: ch_theta >= 1

    friend bool operator==(const BranchingPoints&, const BranchingPoints&) = default;
};

/// Branching points (A + C = 0). g = b and h = a are compared with the
/// relative tolerance tol * perimeter.
BranchingPoints branching_points(const LinkageParams& p, double tol = 1e-12);

struct CouplerAngle {
    double phi;          ///< artanh(dy / dx) - theta + pi
    double frame_angle;  ///< theta + phi - pi, the boost carrying the x-axis onto AB
    /// Sign of dx of AB: +1 when AB is future-pointing, -1 when past-pointing.
    /// The coupler frame map is orientation * A(frame_angle).
    int orientation;
};

/// Coupler angle for a standard-branch psi.
double coupler_angle(const LinkageParams& p, double theta, double psi);

/// Coupler angle and frame for a solved pose on either branch. Throws
/// TimelikeCoupler when |dy/dx| >= 1 and DegenerateDenominator when dx
/// vanishes (relative to the perimeter).
CouplerAngle coupler_frame(const LinkageParams& p, double theta, const OutputSolution& sol);

struct TransmissionAngle {
    double zeta;
    double q;           ///< arch argument
    double d_squared;   ///< g^2 + a^2 - 2ag ch theta (signed square of the diagonal AC)
};

/// q = (-g^2 - a^2 + h^2 + b^2 + 2ag ch theta) / (2bh) as a function of ch theta.
double transmission_argument(const LinkageParams& p, double ch_theta);

/// zeta = arch q. Throws DomainError carrying q when q < 1.
TransmissionAngle transmission_angle(const LinkageParams& p, double theta);

struct ChLimits {
    double ch_min;
    double ch_max;
};

/// ch theta_min = (a^2 + g^2 - (b + h)^2) / 2ag, ch theta_max = (a^2 + g^2 - (b - h)^2) / 2ag.
ChLimits input_limits(const LinkageParams& p);

/// ch psi_min = ((a - h)^2 - g^2 - b^2) / 2bg, ch psi_max = ((a + h)^2 - g^2 - b^2) / 2bg.
ChLimits output_limits(const LinkageParams& p);

struct LimitReport {
    double ch_theta_min, ch_theta_max, ch_psi_min, ch_psi_max;
    bool theta_min_exists, theta_max_exists, psi_min_exists, psi_max_exists;

    friend bool operator==(const LimitReport&, const LimitReport&) = default;
};

LimitReport limit_report(const LinkageParams& p);

const char* to_string(Root r);
const char* to_string(Branch b);
const char* to_string(SolveStatus s);
const char* to_string(BranchingKind k);

}  // namespace mink4r
