#include "mink4r/lorentz2.hpp"

#include <algorithm>
#include <cmath>

#include "mink4r/errors.hpp"

namespace mink4r {

double lorentz_product(const LVec2& x, const LVec2& y) { return x.u1 * y.u1 - x.u2 * y.u2; }

double lorentz_square(const LVec2& v) { return (v.u1 - v.u2) * (v.u1 + v.u2); }

double lorentz_norm(const LVec2& v) { return std::sqrt(std::abs(lorentz_square(v))); }

double hyperbolic_distance(const Point2& p, const Point2& q) { return lorentz_norm(q - p); }

CausalClass causal_classify(const LVec2& v, double tol) {
    const double scale = v.u1 * v.u1 + v.u2 * v.u2;
    if (scale == 0.0) return {CausalKind::Lightlike, Pointing::Undefined};

    const double q = lorentz_square(v);
    if (std::abs(q) <= tol * scale) return {CausalKind::Lightlike, Pointing::Undefined};

    const auto sign_of = [](double c) {
        if (c > 0.0) return Pointing::Future;
        if (c < 0.0) return Pointing::Past;
        return Pointing::Undefined;
    };
    if (q > 0.0) return {CausalKind::Spacelike, sign_of(v.u1)};
    return {CausalKind::Timelike, sign_of(v.u2)};
}

double Boost::ch() const { return std::cosh(phi); }
double Boost::sh() const { return std::sinh(phi); }

LVec2 boost_apply(const Boost& b, const LVec2& v) {
    // In light-cone coordinates u1 +- u2 the boost is diagonal, which keeps
    // composed boosts and the quadratic form accurate for large rapidities.
    if (b.phi == 0.0) return v;
    const double plus = (v.u1 + v.u2) * std::exp(b.phi);
    const double minus = (v.u1 - v.u2) * std::exp(-b.phi);
    return {0.5 * (plus + minus), 0.5 * (plus - minus)};
}

Point2 motion_apply(const Motion& m, const Point2& p) {
    return boost_apply(Boost{m.phi}, p) + Point2{m.tx, m.ty};
}

Motion compose(const Motion& outer, const Motion& inner) {
    const Point2 t = motion_apply(outer, Point2{inner.tx, inner.ty});
    return {outer.phi + inner.phi, t.u1, t.u2};
}

Motion inverse(const Motion& m) {
    const LVec2 t = boost_apply(Boost{-m.phi}, LVec2{m.tx, m.ty});
    return {-m.phi, -t.u1, -t.u2};
}

namespace {

// Rapidity of a future-pointing vector relative to the reference direction
// of its kind: (1, 0) for spacelike, (0, 1) for timelike.
double rapidity(const LVec2& v, CausalKind kind) {
    return kind == CausalKind::Spacelike ? std::atanh(v.u2 / v.u1) : std::atanh(v.u1 / v.u2);
}

CausalKind require_same_future(std::span<const LVec2> vs, double tol) {
    CausalKind kind = CausalKind::Lightlike;
    bool first = true;
    for (const LVec2& v : vs) {
        const CausalClass c = causal_classify(v, tol);
        if (c.kind == CausalKind::Lightlike)
            throw MixedCausalType("angle and polygon checks need spacelike or timelike vectors");
        if (first) {
            kind = c.kind;
            first = false;
        } else if (c.kind != kind) {
            throw MixedCausalType("vectors are of different causal kind");
        }
        if (c.pointing != Pointing::Future) throw NotFuturePointing("vector is not future-pointing");
    }
    return kind;
}

}  // namespace

double oriented_angle(const LVec2& x, const LVec2& y, double tol) {
    const LVec2 pair[] = {x, y};
    const CausalKind kind = require_same_future(pair, tol);
    return rapidity(y, kind) - rapidity(x, kind);
}

double angle_cosh(const LVec2& x, const LVec2& y) {
    const double c = lorentz_product(x, y) / (lorentz_norm(x) * lorentz_norm(y));
    return lorentz_square(x) < 0.0 ? -c : c;
}

CosineRuleSide cosine_rule_side(double a, double b, double angle_c) {
    const double sq = a * a + b * b - 2.0 * a * b * std::cosh(angle_c);
    return {std::sqrt(std::abs(sq)), sq};
}

bool reversed_polygon_check(std::span<const LVec2> vs, double tol) {
    require_same_future(vs, tol);
    LVec2 sum{};
    double norms = 0.0;
    for (const LVec2& v : vs) {
        sum = sum + v;
        norms += lorentz_norm(v);
    }
    return lorentz_norm(sum) >= norms - 1e-9 * std::max(1.0, norms);
}

}  // namespace mink4r
