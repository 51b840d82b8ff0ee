#pragma once

#include <span>

// Lorentzian 2-space: R^2 with <u, v>_L = u1 v1 - u2 v2.
//
// Causal classes, the proper Lorentz group SO+(1,1) (boosts A(phi)), the
// motion group of the Minkowskian plane, oriented angles between
// future-pointing vectors and the Minkowskian cosine rule. Angles are
// rapidities: plain unbounded reals, never reduced modulo anything.

namespace mink4r {

struct LVec2 {
    double u1 = 0.0;
    double u2 = 0.0;

    friend bool operator==(const LVec2&, const LVec2&) = default;
};

/// Points of the plane share the vector representation.
using Point2 = LVec2;

inline LVec2 operator+(const LVec2& p, const LVec2& q) { return {p.u1 + q.u1, p.u2 + q.u2}; }
inline LVec2 operator-(const LVec2& p, const LVec2& q) { return {p.u1 - q.u1, p.u2 - q.u2}; }
inline LVec2 operator*(double s, const LVec2& v) { return {s * v.u1, s * v.u2}; }

double lorentz_product(const LVec2& x, const LVec2& y);

/// u1^2 - u2^2, evaluated as (u1 - u2)(u1 + u2).
double lorentz_square(const LVec2& v);

/// sqrt|<v, v>_L|
double lorentz_norm(const LVec2& v);

/// Hyperbolic distance sqrt|dx^2 - dy^2| between two points.
double hyperbolic_distance(const Point2& p, const Point2& q);

enum class CausalKind { Spacelike, Lightlike, Timelike };
enum class Pointing { Future, Past, Undefined };

struct CausalClass {
    CausalKind kind;
    Pointing pointing;

    friend bool operator==(const CausalClass&, const CausalClass&) = default;
};

inline constexpr double kDefaultCausalTol = 1e-12;

/// Kind by the sign of u1^2 - u2^2 against tol * (u1^2 + u2^2). Spacelike
/// vectors point by the sign of u1, timelike ones by u2. Lightlike vectors
/// (and the zero vector) have Undefined pointing.
CausalClass causal_classify(const LVec2& v, double tol = kDefaultCausalTol);

/// Element A(phi) of SO+(1,1).
struct Boost {
    double phi = 0.0;

    double ch() const;
    double sh() const;
};

/// (u1 ch + u2 sh, u1 sh + u2 ch)
LVec2 boost_apply(const Boost& b, const LVec2& v);

/// Motion of the Minkowskian plane: p -> A(phi) p + (tx, ty).
struct Motion {
    double phi = 0.0;
    double tx = 0.0;
    double ty = 0.0;
};

Point2 motion_apply(const Motion& m, const Point2& p);

/// compose(outer, inner) acts as outer(inner(p)).
Motion compose(const Motion& outer, const Motion& inner);
Motion inverse(const Motion& m);

/// Oriented angle phi with A(phi) x/|x| = y/|y|. Both vectors must be
/// future-pointing and of the same kind (both spacelike or both timelike).
/// Throws MixedCausalType or NotFuturePointing otherwise.
double oriented_angle(const LVec2& x, const LVec2& y, double tol = kDefaultCausalTol);

/// Inner-product form of the same angle: ch phi = <x,y>/(|x||y|) for
/// spacelike pairs and -<x,y>/(|x||y|) for timelike pairs.
double angle_cosh(const LVec2& x, const LVec2& y);

struct CosineRuleSide {
    double length;          ///< sqrt|signed_square|
    double signed_square;   ///< a^2 + b^2 - 2ab ch C
};

/// Minkowskian cosine rule for a pure triangle: c^2 = a^2 + b^2 - 2ab ch(C).
CosineRuleSide cosine_rule_side(double a, double b, double angle_c);

/// Reversed polygon inequality |sum v_i| >= sum |v_i| for future-pointing
/// vectors of a single causal kind. The comparison allows 1e-9 * max(1, sum |v_i|)
/// of slack. Throws MixedCausalType / NotFuturePointing on invalid input.
bool reversed_polygon_check(std::span<const LVec2> vs, double tol = kDefaultCausalTol);

}  // namespace mink4r
