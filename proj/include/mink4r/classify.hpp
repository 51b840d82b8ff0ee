#pragma once

#include <string>

#include "mink4r/fourbar.hpp"

// Type classification of the Minkowskian planar 4R by the movement of its
// input and output cranks, driven by the signs of five linear forms in the
// link lengths.

namespace mink4r {

struct TParams {
    double T1;  ///< g + b - h - a
    double T2;  ///< a - g + b - h
    double T3;  ///< g - a - b - h
    double T4;  ///< g - a + b + h
    double T5;  ///< a - h + g + b

    friend bool operator==(const TParams&, const TParams&) = default;
};

TParams t_params(const LinkageParams& p);

/// Strange: one link longer than the other three together. Rigid: one link
/// equal to that sum. Otherwise Irreducible when T1 and T2 are both nonzero,
/// Reducible when either vanishes.
enum class Subclass { Strange, Rigid, Reducible, Irreducible };

enum class CrankType { Crank, Rocker, Superrocker };

inline constexpr double kDefaultClassifyTol = 1e-9;

/// Lengths and T values within tol * perimeter of each other (resp. zero) are
/// treated as equal (resp. zero).
Subclass subclass(const LinkageParams& p, double tol = kDefaultClassifyTol);

/// Crank: T1T2 >= 0, T3T4 <= 0. Rocker: T1T2 < 0, T3T4 <= 0.
/// Superrocker: T1T2 < 0, T3T4 > 0. Values with |T| <= zero_band count as 0.
/// Throws UnclassifiedSignPattern for T1T2 >= 0 with T3T4 > 0.
CrankType input_type(const TParams& t, double zero_band = 0.0);

/// Crank: T1 >= 0, T4T5 >= 0. Rocker: T1 < 0, T4T5 >= 0.
/// Superrocker: T1 < 0, T4T5 < 0. Throws UnclassifiedSignPattern for
/// T1 >= 0 with T4T5 < 0.
CrankType output_type(const TParams& t, double zero_band = 0.0);

/// Longest + shortest >= sum of the other two.
bool grashof_analog(const LinkageParams& p);

struct ClassificationReport {
    TParams t;
    Subclass subclass;
    CrankType input_type;
    CrankType output_type;
    LimitReport limits;
    BranchingPoints branching;
    bool grashof;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify(const LinkageParams& p, double tol = kDefaultClassifyTol);

const char* to_string(Subclass s);
const char* to_string(CrankType t);

/// "superrocker-crank" style name, input type first.
std::string linkage_type_name(CrankType input, CrankType output);

}  // namespace mink4r
