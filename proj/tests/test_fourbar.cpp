#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "mink4r/errors.hpp"
#include "mink4r/fourbar.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace mink4r;
using doctest::Approx;

namespace {

const LinkageParams ex1{1, 1, 4, 1};
const LinkageParams ex2{1.2, 0.4, 0.4, 0.4};
const LinkageParams ex3{0.5, 1, 2, 2.5};
const LinkageParams ex4{0.6, 1, 0.7, 0.5};

LinkageParams random_params(testing::Rng& rng, double lo = 0.2, double hi = 3.0) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(LinkageParams(0, 1, 1, 1), InvalidParams);
    CHECK_THROWS_AS(LinkageParams(1, -1, 1, 1), InvalidParams);
    CHECK_THROWS_AS(LinkageParams(1, 1, std::nan(""), 1), InvalidParams);
    CHECK_THROWS_AS(LinkageParams(1, 1, 1, INFINITY), InvalidParams);
    CHECK(ex1.perimeter() == 7.0);
    CHECK(ex1.scaled(2) == LinkageParams(2, 2, 8, 2));
}

TEST_CASE("constraint coefficients") {
    const ConstraintCoeffs k = constraint_coeffs(ex1, 0);
    CHECK(k.A == 6.0);
    CHECK(k.B == 0.0);
    CHECK(k.C == -9.0);
    CHECK(discriminant(ex1, 1.0) == Approx(45.0));
}

TEST_CASE("strict and extended solve at theta = 0 for the strange example") {
    const OutputSolve strict = solve_output_angle(ex1, 0);
    CHECK(strict.status == SolveStatus::NoSolution);
    CHECK(strict.solutions.empty());

    const OutputSolve ext = solve_output_angle(ex1, 0, {SolveMode::Extended});
    CHECK(ext.status == SolveStatus::Ok);
    REQUIRE(ext.solutions.size() == 2);
    for (const auto& s : ext.solutions) {
        CHECK(s.branch == Branch::Reversed);
        CHECK(std::abs(closure_residual(ex1, 0, s.psi, s.branch)) <= 1e-12);
        CHECK(std::abs(testing::coordinate_closure(ex1, 0, s.psi, -1.0)) <= 1e-12);
        // -b ch psi = C / A = -1.5
        CHECK(std::cosh(s.psi) == Approx(1.5).epsilon(1e-12));
    }
    CHECK(ext.solutions[0].root == Root::Plus);
    CHECK(ext.solutions[1].root == Root::Minus);
    CHECK(ext.solutions[0].psi == Approx(-ext.solutions[1].psi).epsilon(1e-12));
}

TEST_CASE("branching points") {
    CHECK(branching_points(ex1) == BranchingPoints{BranchingKind::Discrete, 1.5, true});
    CHECK(branching_points(ex2).kind == BranchingKind::NoBranching);
    const BranchingPoints b3 = branching_points(ex3);
    CHECK(b3.kind == BranchingKind::Discrete);
    CHECK(b3.ch_theta == Approx(-5.0).epsilon(1e-12));
    CHECK_FALSE(b3.realizable);
    CHECK(branching_points({1, 2, 2, 1}).kind == BranchingKind::AllPointsBranching);

    // the solver reports the same spot
    const double theta = std::acosh(1.5);
    CHECK(solve_output_angle(ex1, theta).status == SolveStatus::BranchingPoint);
    const ConstraintCoeffs k = constraint_coeffs(ex1, theta);
    CHECK(std::abs(k.A + k.C) <= 1e-12);
}

TEST_CASE("parallelogram: psi = theta and phi = pi - theta") {
    const LinkageParams par{1, 1, 2, 2};
    for (double theta : {-1.3, -0.4, 0.25, 0.9}) {
        const OutputSolve s = solve_output_angle(par, theta);
        REQUIRE(s.status == SolveStatus::Ok);
        bool found = false;
        for (const auto& sol : s.solutions) {
            if (sol.branch == Branch::Standard && std::abs(sol.psi - theta) < 1e-10) {
                found = true;
                CHECK(coupler_angle(par, theta, sol.psi) == Approx(std::numbers::pi - theta).epsilon(1e-12));
            }
        }
        CHECK(found);
    }
}

TEST_CASE("alternative formula") {
    const LinkageParams par{1, 1, 2, 2};
    const std::vector<double> alt = solve_output_angle_alt(par, 0.5);
    REQUIRE(alt.size() == 2);
    bool hit = false;
    for (double psi : alt) {
        CHECK(std::abs(closure_residual(par, 0.5, psi)) <= 1e-12);
        if (std::abs(psi - 0.5) < 1e-10) hit = true;
    }
    CHECK(hit);
    CHECK_THROWS_AS(solve_output_angle_alt(ex1, 0), DomainError);
}

TEST_CASE("transmission angle") {
    const TransmissionAngle at_max = transmission_angle(ex1, std::acosh(2.125));
    CHECK(at_max.q == Approx(1.0).epsilon(1e-12));
    CHECK(at_max.zeta == Approx(0.0).epsilon(1e-5).scale(1));

    try {
        transmission_angle(ex1, std::acosh(2.0));
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.value() == Approx(0.5).epsilon(1e-12));
    }
    CHECK(transmission_argument(ex1, 2.0) == Approx(0.5));
}

TEST_CASE("limits of the worked examples") {
    const LimitReport r1 = limit_report(ex1);
    CHECK(r1.ch_theta_min == Approx(1.625).epsilon(1e-12));
    CHECK(r1.ch_theta_max == Approx(2.125).epsilon(1e-12));
    CHECK(r1.ch_psi_min == Approx(-2.125).epsilon(1e-12));
    CHECK(r1.ch_psi_max == Approx(-1.625).epsilon(1e-12));
    CHECK(r1.theta_min_exists);
    CHECK_FALSE(r1.psi_max_exists);

    const LimitReport r2 = limit_report(ex2);
    CHECK(r2.ch_theta_min == Approx(1.0).epsilon(1e-12));
    CHECK(r2.ch_theta_max == Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(r2.ch_psi_min == Approx(1.0).epsilon(1e-12));
    CHECK(r2.ch_psi_max == Approx(7.0).epsilon(1e-12));

    const LimitReport r3 = limit_report(ex3);
    CHECK(r3.ch_theta_min == Approx(-4.0).epsilon(1e-12));
    CHECK(r3.ch_theta_max == Approx(1.0).epsilon(1e-12));
    CHECK(r3.ch_psi_min == Approx(-0.25).epsilon(1e-12));
    CHECK(r3.ch_psi_max == Approx(1.0).epsilon(1e-12));

    const LimitReport r4 = limit_report(ex4);
    CHECK(r4.ch_theta_min == Approx(-5.0 / 3.0).epsilon(1e-12));
    CHECK(r4.ch_theta_max == Approx(5.0 / 7.0).epsilon(1e-12));
    CHECK(r4.ch_psi_min == Approx(-1.48 / 1.4).epsilon(1e-12));
    CHECK(r4.ch_psi_max == Approx(-0.2).epsilon(1e-12));
}

TEST_CASE("coupler frame errors") {
    // Closed poses always have a spacelike coupler; probe with unclosed ones.
    const LinkageParams p{1, 1, 2, 2};
    CHECK_THROWS_AS(coupler_frame(p, 0, {1.5, Root::Plus, Branch::Reversed}), TimelikeCoupler);
    CHECK_THROWS_AS(coupler_frame(p, 0, {0.0, Root::Plus, Branch::Reversed}), DegenerateDenominator);
    const CouplerAngle ok = coupler_frame(p, 0, {0.0, Root::Plus, Branch::Standard});
    CHECK(ok.orientation == 1);
    CHECK(ok.frame_angle == 0.0);
}

TEST_CASE("property: solutions close the loop and coupler frames map A onto B") {
    testing::Rng rng(101);
    int solved = 0;
    for (int i = 0; i < 2000; ++i) {
        const LinkageParams p = random_params(rng);
        const double theta = rng.uniform(-3, 3);
        const SolveMode mode = i % 2 ? SolveMode::Extended : SolveMode::Strict;
        const OutputSolve s = solve_output_angle(p, theta, {mode});
        for (const auto& sol : s.solutions) {
            ++solved;
            if (mode == SolveMode::Strict) CHECK(sol.branch == Branch::Standard);
            const double sign = sol.branch == Branch::Standard ? 1.0 : -1.0;
            const double bound = 1e-9 * std::max(1.0, p.h() * p.h());
            CHECK(std::abs(closure_residual(p, theta, sol.psi, sol.branch)) <= bound);
            CHECK(std::abs(testing::coordinate_closure(p, theta, sol.psi, sign)) <=
                  1e-9 * std::max(1.0, p.h() * p.h()) * std::cosh(sol.psi));

            const Pose ps = pose(p, theta, sol);
            const LVec2 d = ps.B - ps.A;
            if (std::abs(d.u2) < 0.99 * std::abs(d.u1)) {
                const CouplerAngle ca = coupler_frame(p, theta, sol);
                const LVec2 e = boost_apply(Boost{ca.frame_angle}, {p.h(), 0.0});
                CHECK(ca.orientation * e.u1 == Approx(d.u1).epsilon(1e-9).scale(1));
                CHECK(ca.orientation * e.u2 == Approx(d.u2).epsilon(1e-9).scale(1));
                CHECK(ca.phi == Approx(ca.frame_angle - theta + std::numbers::pi));
            }
        }
    }
    CHECK(solved > 500);
}

TEST_CASE("property: T-limit identities") {
    testing::Rng rng(103);
    for (int i = 0; i < 1000; ++i) {
        const LinkageParams p = random_params(rng);
        const ChLimits in = input_limits(p);
        CHECK(in.ch_min <= in.ch_max);
        CHECK(in.ch_max - in.ch_min == Approx(2 * p.b() * p.h() / (p.a() * p.g())).epsilon(1e-12));
        const ChLimits outl = output_limits(p);
        CHECK(outl.ch_max - outl.ch_min == Approx(2 * p.a() * p.h() / (p.b() * p.g())).epsilon(1e-12));
        // q is exactly +-1 at the input limits
        CHECK(transmission_argument(p, in.ch_min) == Approx(-1.0).epsilon(1e-12).scale(1));
        CHECK(transmission_argument(p, in.ch_max) == Approx(1.0).epsilon(1e-12).scale(1));
        // scaling all lengths leaves every ch limit unchanged
        const double c = rng.uniform(0.1, 10);
        const LimitReport r = limit_report(p), rs = limit_report(p.scaled(c));
        CHECK(rs.ch_theta_min == Approx(r.ch_theta_min).epsilon(1e-12).scale(1));
        CHECK(rs.ch_psi_max == Approx(r.ch_psi_max).epsilon(1e-12).scale(1));
    }
}

TEST_CASE("property: solver agrees with the sampling oracle") {
    testing::Rng rng(107);
    for (int i = 0; i < 300; ++i) {
        const LinkageParams p = random_params(rng);
        const double theta = rng.uniform(-3, 3);
        const bool ext = i % 2 == 1;
        const OutputSolve s = solve_output_angle(p, theta, {ext ? SolveMode::Extended : SolveMode::Strict});
        if (s.status == SolveStatus::BranchingPoint || s.status == SolveStatus::LightlikeOutput) continue;
        const auto sampled = testing::sample_roots(p, theta, ext);
        CHECK(testing::same_root_sets(s.solutions, sampled, 5.999, 1e-6));
    }
}

TEST_CASE("property: branching and transmission identities") {
    testing::Rng rng(109);
    int realizable = 0, defined = 0;
    for (int i = 0; i < 1000; ++i) {
        const LinkageParams p = random_params(rng);
        const double scale = std::pow(p.perimeter(), 2);
        const BranchingPoints bp = branching_points(p);
        if (bp.kind == BranchingKind::Discrete && bp.realizable) {
            ++realizable;
            const ConstraintCoeffs k = constraint_coeffs(p, std::acosh(bp.ch_theta));
            CHECK(std::abs(k.A + k.C) <= 1e-9 * scale);
        }
        const double theta = rng.uniform(-3, 3);
        try {
            const TransmissionAngle t = transmission_angle(p, theta);
            ++defined;
            CHECK(t.zeta >= 0.0);
            const double other = p.h() * p.h() + p.b() * p.b() - 2 * p.b() * p.h() * std::cosh(t.zeta);
            CHECK(std::abs(t.d_squared - other) <= 1e-9 * std::max(1.0, std::abs(t.d_squared)) * std::cosh(t.zeta));
        } catch (const DomainError& e) {
            CHECK(e.value() < 1.0);
        }
    }
    CHECK(realizable > 10);
    CHECK(defined > 10);
}
