// Closed-form minimizers for the three canonical data: shapes, seminorm
// identities, region bounds, coefficient maps and their round trips, the
// second-order regime structure of the indicator, and the decomposition of
// the combined minimizer into first- and second-order pieces.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "tgv1d/oracles.hpp"
#include "tgv1d/piecewise.hpp"
#include "tgv1d/signal.hpp"

using namespace tgv1d;

namespace {

double max_pointwise_diff(const PiecewiseAffineSignal& a,
                          const PiecewiseAffineSignal& b) {
    double worst = 0.0;
    // probe off-breakpoint points of both partitions plus dyadic fill
    std::vector<double> xs;
    for (double x : a.breakpoints) xs.push_back(x);
    for (double x : b.breakpoints) xs.push_back(x);
    for (int k = 0; k <= 512; ++k)
        xs.push_back(-1.0 + 2.0 * static_cast<double>(k) / 512.0);
    for (double x : xs) {
        for (double dx : {-1e-7, 1e-7}) {
            const double t = x + dx;
            if (t <= -1.0 || t >= 1.0) continue;
            worst = std::max(worst, std::abs(a.value(t) - b.value(t)));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("first-order abs minimizer: plateau shape and seminorm identity") {
    for (double lam1 : {0.01, 0.02, 0.05}) {
        const PiecewiseAffineSignal p = oracle_tv1_abs(lam1);
        const double s = std::sqrt(2.0 * lam1);
        // plateau height -1/2 + ... : value at 0 equals s - 1/2
        REQUIRE(p.value(0.0) == Catch::Approx(s - 0.5).margin(1e-12));
        // between the central and wall plateaus the data is kept
        REQUIRE(p.value(0.5) == Catch::Approx(0.0).margin(1e-12));
        // wall plateau height mirrors the central one
        REQUIRE(p.value(0.99) == Catch::Approx(0.5 - s).margin(1e-12));
        REQUIRE(tv1_piecewise(p) ==
                Catch::Approx(2.0 - 4.0 * s).margin(1e-9));
        // slope sequence (0, -1, 0, +1, 0): four unit slope changes
        REQUIRE(tv2_piecewise(p) == Catch::Approx(4.0).margin(1e-9));
    }
    REQUIRE(tv1_piecewise(oracle_tv1_abs(0.2)) ==
            Catch::Approx(0.0).margin(1e-12));
    REQUIRE_THROWS_AS(oracle_tv1_abs(-0.1), std::invalid_argument);
}

TEST_CASE("second-order abs minimizer is a shrinkage of the data") {
    const PiecewiseAffineSignal p = oracle_tv2_abs(0.04);
    const double factor = 1.0 - 12.0 * 0.04;
    for (double x : {-0.7, -0.2, 0.3, 0.8})
        REQUIRE(p.value(x) ==
                Catch::Approx(factor * (std::abs(x) - 0.5)).margin(1e-12));
    REQUIRE(tv1_piecewise(oracle_tv2_abs(0.1)) ==
            Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("abs region bounds") {
    const RegionBounds b = abs_region_bounds(0.05);
    REQUIRE(b.lower == Catch::Approx(2.0 / 3.0 * 0.05).epsilon(1e-12));
    REQUIRE(b.upper ==
            Catch::Approx(0.05 * (1.0 - (2.0 / 3.0) * std::sqrt(0.1)))
                .epsilon(1e-12));
    REQUIRE(b.lower < b.upper);
}

TEST_CASE("abs combined-minimizer coefficients at the worked example") {
    const AbsTgvCoefficients co =
        abs_tgv_coefficients(LambdaPair{0.05, 0.036});
    REQUIRE(co.c == Catch::Approx(0.42).margin(1e-12));
    REQUIRE(co.d == Catch::Approx(0.43310657596371915).margin(1e-12));
    // outside the strict region the coefficient map is rejected
    REQUIRE_THROWS_AS(abs_tgv_coefficients(LambdaPair{0.05, 0.045}),
                      std::domain_error);
    REQUIRE_THROWS_AS(abs_tgv_coefficients(LambdaPair{0.05, 0.02}),
                      std::domain_error);
}

TEST_CASE("abs combined minimizer: symmetric wedge profile") {
    const LambdaPair lam{0.05, 0.036};
    const PiecewiseAffineSignal p = oracle_tgv_abs(lam);
    const AbsTgvCoefficients co = abs_tgv_coefficients(lam);
    // data is matched exactly on (c, 1-c) and mirrored on the left
    REQUIRE(p.value(0.5) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(p.value(-0.5) == Catch::Approx(0.0).margin(1e-12));
    // central wedge and outer walls carry slope magnitude d
    const double slope_mid = (p.value(0.02) - p.value(0.01)) / 0.01;
    REQUIRE(slope_mid == Catch::Approx(co.d).margin(1e-9));
    const double slope_wall = (p.value(0.97) - p.value(0.93)) / 0.04;
    REQUIRE(slope_wall == Catch::Approx(co.d).margin(1e-9));
    REQUIRE(p.value(0.95) == Catch::Approx(p.value(-0.95)).margin(1e-12));
    // continuous across its breakpoints
    for (std::size_t k = 0; k < p.left_values.size(); ++k)
        REQUIRE(p.left_values[k] ==
                Catch::Approx(p.right_values[k]).margin(1e-12));
}

TEST_CASE("abs weight map round trip") {
    for (const LambdaPair lam :
         {LambdaPair{0.05, 0.036}, LambdaPair{0.02, 0.016},
          LambdaPair{0.07, 0.05}}) {
        const MuPair mu = mu_from_lambda_abs(lam);
        // map back: lam1 = ..., verified through the decomposition identity
        REQUIRE(mu.mu1 > 0.0);
        REQUIRE(mu.mu2 > 0.0);
        const PiecewiseAffineSignal direct = oracle_tgv_abs(lam);
        const PiecewiseAffineSignal composed =
            add(scale(oracle_tv1_abs(mu.mu1), 12.0 * mu.mu2),
                oracle_tv2_abs(mu.mu2));
        REQUIRE(max_pointwise_diff(direct, composed) <= 1e-9);
    }
}

TEST_CASE("first-order ind minimizer shrinks the step") {
    const PiecewiseAffineSignal p = oracle_tv1_ind(0.12);
    REQUIRE(p.value(0.0) == Catch::Approx((1.0 - 4.0 * 0.12) * 0.5));
    REQUIRE(p.value(0.9) == Catch::Approx(-(1.0 - 4.0 * 0.12) * 0.5));
    REQUIRE(tv1_piecewise(oracle_tv1_ind(0.3)) ==
            Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("ind second-order regime thresholds") {
    const double t1 = ind_threshold_regime12();
    REQUIRE(t1 == Catch::Approx(0.005381).margin(1e-6));
    REQUIRE(t1 ==
            Catch::Approx((std::sqrt(2.0) * std::pow(3.0, 0.25) -
                           std::sqrt(3.0)) /
                          24.0)
                .epsilon(1e-14));
    REQUIRE(ind_threshold_regime23() == Catch::Approx(1.0 / 24.0));
}

TEST_CASE("ind second-order minimizer: regime 3 tent") {
    const PiecewiseAffineSignal p = oracle_tv2_ind(0.05);
    for (double x : {-0.6, -0.2, 0.35, 0.75})
        REQUIRE(p.value(x) ==
                Catch::Approx((1.5 - 12.0 * 0.05) * (0.5 - std::abs(x)))
                    .margin(1e-12));
    // large weight extends continuously to zero
    REQUIRE(tv1_piecewise(oracle_tv2_ind(0.2)) ==
            Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("ind second-order minimizer: regime 2 bend locations") {
    const double lam2 = 0.02;  // inside (t1, 1/24)
    const PiecewiseAffineSignal p = oracle_tv2_ind(lam2);
    const double b = 0.25 - 6.0 * lam2;  // inner bend pair at -b and +b
    bool found_left = false, found_right = false;
    for (std::size_t k = 1; k + 1 < p.breakpoints.size(); ++k) {
        if (std::abs(p.breakpoints[k] + b) < 1e-9) found_left = true;
        if (std::abs(p.breakpoints[k] - b) < 1e-9) found_right = true;
    }
    REQUIRE(found_left);
    REQUIRE(found_right);
    // continuous, no jumps in regime 2
    REQUIRE(std::isfinite(tv2_piecewise(p)));
}

TEST_CASE("ind second-order residual dual norm across regimes") {
    // saturated regime: the data norm itself
    REQUIRE(dual_norm_tv2_residual_ind(0.13) == Catch::Approx(0.25));
    // tent regime: affine formula
    REQUIRE(dual_norm_tv2_residual_ind(0.05) ==
            Catch::Approx(1.0 / 16.0 + 1.5 * 0.05).epsilon(1e-12));
    // two-bend regime: rational formula at the documented point
    const double l = 0.02;
    const double rational = (1.0 / 18.0) *
                            (1.0 + 48.0 * l + 576.0 * l * l) /
                            ((1.0 + 8.0 * l) * (1.0 + 8.0 * l));
    REQUIRE(dual_norm_tv2_residual_ind(l) ==
            Catch::Approx(rational).epsilon(1e-10));
    REQUIRE(rational == Catch::Approx(0.0904347).margin(1e-6));
    // monotone increasing across the regime seam
    REQUIRE(dual_norm_tv2_residual_ind(1.0 / 24.0 - 1e-9) ==
            Catch::Approx(dual_norm_tv2_residual_ind(1.0 / 24.0 + 1e-9))
                .margin(1e-6));
}

TEST_CASE("ind weight map solves the coupling equation") {
    for (const LambdaPair lam :
         {LambdaPair{0.12, 0.05}, LambdaPair{0.17, 0.08},
          LambdaPair{0.1, 0.04}}) {
        const MuPair mu = mu_from_lambda_ind(lam);
        REQUIRE(4.0 * mu.mu1 * mu.mu2 == Catch::Approx(lam.lambda2).epsilon(1e-8));
        REQUIRE(4.0 * mu.mu1 * dual_norm_tv2_residual_ind(mu.mu2) ==
                Catch::Approx(lam.lambda1).epsilon(1e-7));
    }
    // outside the strict region the map must refuse
    REQUIRE_THROWS_AS(mu_from_lambda_ind(LambdaPair{0.12, 0.07}),
                      std::domain_error);
    REQUIRE_THROWS_AS(mu_from_lambda_ind(LambdaPair{0.2, 0.08}),
                      std::domain_error);
}

TEST_CASE("ind combined minimizer jumps at the step edges") {
    const LambdaPair lam{0.12, 0.05};
    const PiecewiseAffineSignal p = oracle_tgv_ind(lam);
    // jump across -1/2: right limit above left limit
    double jl = 0.0, jr = 0.0;
    bool found = false;
    for (std::size_t k = 1; k + 1 < p.breakpoints.size(); ++k) {
        if (std::abs(p.breakpoints[k] + 0.5) < 1e-9) {
            jl = p.left_values[k - 1];
            jr = p.right_values[k - 1];
            found = true;
        }
    }
    REQUIRE(found);
    REQUIRE(jr > jl + 1e-6);
    // symmetric in x: value(x) == value(-x)
    for (double x : {0.1, 0.3, 0.6, 0.9})
        REQUIRE(p.value(x) == Catch::Approx(p.value(-x)).margin(1e-10));
}

TEST_CASE("zero-weight guards") {
    REQUIRE_THROWS_AS(oracle_tv2_abs(0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(oracle_tv2_ind(-0.01), std::invalid_argument);
    REQUIRE_THROWS_AS(oracle_tgv_abs(LambdaPair{0.0, 0.01}),
                      std::invalid_argument);
}
