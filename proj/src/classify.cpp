#include "mink4r/classify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mink4r/errors.hpp"

namespace mink4r {

TParams t_params(const LinkageParams& p) {
    const double a = p.a(), b = p.b(), g = p.g(), h = p.h();
    return {g + b - h - a, a - g + b - h, g - a - b - h, g - a + b + h, a - h + g + b};
}

Subclass subclass(const LinkageParams& p, double tol) {
    const double band = tol * p.perimeter();
    const std::array<double, 4> len{p.a(), p.b(), p.g(), p.h()};
    const double total = p.perimeter();
    // excess > 0 means that link is longer than the other three together
    double excess = -total;
    for (double l : len) excess = std::max(excess, l - (total - l));
    if (excess > band) return Subclass::Strange;
    if (std::abs(excess) <= band) return Subclass::Rigid;

    const TParams t = t_params(p);
    if (std::abs(t.T1) > band && std::abs(t.T2) > band) return Subclass::Irreducible;
    return Subclass::Reducible;
}

namespace {

// Sign in {-1, 0, 1} with a dead band around zero.
int sgn(double v, double band) {
    if (v > band) return 1;
    if (v < -band) return -1;
    return 0;
}

}  // namespace

CrankType input_type(const TParams& t, double zero_band) {
    const int s12 = sgn(t.T1, zero_band) * sgn(t.T2, zero_band);
    const int s34 = sgn(t.T3, zero_band) * sgn(t.T4, zero_band);
    if (s12 >= 0 && s34 <= 0) return CrankType::Crank;
    if (s12 < 0 && s34 <= 0) return CrankType::Rocker;
    if (s12 < 0 && s34 > 0) return CrankType::Superrocker;
    throw UnclassifiedSignPattern("input crank: T1*T2 >= 0 with T3*T4 > 0 is not covered by the classification");
}

CrankType output_type(const TParams& t, double zero_band) {
    const int s1 = sgn(t.T1, zero_band);
    const int s45 = sgn(t.T4, zero_band) * sgn(t.T5, zero_band);
    if (s1 >= 0 && s45 >= 0) return CrankType::Crank;
    if (s1 < 0 && s45 >= 0) return CrankType::Rocker;
    if (s1 < 0 && s45 < 0) return CrankType::Superrocker;
    throw UnclassifiedSignPattern("output crank: T1 >= 0 with T4*T5 < 0 is not covered by the classification");
}

bool grashof_analog(const LinkageParams& p) {
    std::array<double, 4> len{p.a(), p.b(), p.g(), p.h()};
    std::sort(len.begin(), len.end());
    return len[3] + len[0] >= len[1] + len[2];
}

ClassificationReport classify(const LinkageParams& p, double tol) {
    const TParams t = t_params(p);
    const double band = tol * p.perimeter();
    return {
        t,
        subclass(p, tol),
        input_type(t, band),
        output_type(t, band),
        limit_report(p),
        branching_points(p, tol),
        grashof_analog(p),
    };
}

const char* to_string(Subclass s) {
    switch (s) {
        case Subclass::Strange: return "strange";
        case Subclass::Rigid: return "rigid";
        case Subclass::Reducible: return "reducible";
        case Subclass::Irreducible: return "irreducible";
    }
    return "?";
}

const char* to_string(CrankType t) {
    switch (t) {
        case CrankType::Crank: return "crank";
        case CrankType::Rocker: return "rocker";
        case CrankType::Superrocker: return "superrocker";
    }
    return "?";
}

std::string linkage_type_name(CrankType input, CrankType output) {
    return std::string(to_string(input)) + "-" + to_string(output);
}

}  // namespace mink4r
