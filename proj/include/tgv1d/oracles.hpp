// oracles.hpp
//
// Closed-form minimizers of the quadratic-fidelity TV, TV2 and TGV
// objectives for the two canonical data sets
//
//     abs:  u(x) = |x| - 1/2,          ind:  u(x) = 1_{[-1/2,1/2]}(x) - 1/2,
//
// on (-1, 1), together with the dual-norm constants of the quadratic data
// x^2 - 1/3.  All outputs are exact piecewise-affine objects; grids enter
// only at evaluation time.
//
// abs data.  The TV minimizer flattens the corner and the boundary wedges
// at scale s = sqrt(2 lam1); its total variation is 2 - 4 s.  The TV2
// minimizer is the pure shrinkage (1 - 12 lam2)^+ u.  The TGV minimizer is
// governed by the two-parameter family
//
//     w(x,c,d) = d|x| + c(1-d) - 1/2          for |x| <= c,
//              = u(x)                          for c < |x| <= 1-c,
//              = d|x| + c(d-1) - d + 1/2       for |x| > 1-c,
//
// with c = 3(lam1-lam2)/(2 lam1) and d = 1 - (8/9) lam1^3/(lam1-lam2)^2
// strictly between the two regime boundaries lam2 = (2/3) lam1 (below which
// the TV2 minimizer takes over) and lam2 = lam1 (1 - (2/3) sqrt(2 lam1))
// (above which the TV minimizer takes over).  The same minimizer decomposes
// as 12 mu2 * tv1(mu1) + tv2(mu2) with mu1 = c^2/2 and mu2 = (1-d)/12, and
// the weight pair is recovered from (mu1, mu2) through
// lam1 = 12 mu1 mu2 and lam2 = 12 mu2 (mu1 - (2/3) sqrt(2 mu1^3)).
//
// ind data.  The TV minimizer is the shrinkage (1 - 4 lam1)^+ u.  The TV2
// minimizer comes in three regimes separated by
// t1 = (sqrt(2) 3^{1/4} - sqrt(3))/24 and t2 = 1/24: a single bend
// (3/2 - 12 lam2)(1/2 - |x|) above t2, one symmetric bend pair with a flat
// data-matching plateau between t1 and t2, and two bend pairs below t1.
// Bend locations and slopes are pinned by vanishing running integrals of
// the residual and saturation of its second running integral at the bends;
// the scalar unknowns are solved by bracketed root-finding on exactly those
// conditions.  The TGV minimizer is the combination
// tv1(mu1) + 4 mu1 tv2(mu2), where mu2 solves
// lam2 g(mu2) = lam1 mu2 on [lam2, 1/8] (g is the sup of the first running
// integral of the TV2 residual) and mu1 = lam2/(4 mu2).

#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tgv1d/functionals.hpp"
#include "tgv1d/piecewise.hpp"
#include "tgv1d/rootfind.hpp"
#include "tgv1d/signal.hpp"

namespace tgv1d {

// --------------------------------------------------------------- constants

// thresholds between the three ind-data TV2 solution regimes
inline double ind_threshold_regime12() {
    return (std::sqrt(2.0) * std::pow(3.0, 0.25) - std::sqrt(3.0)) / 24.0;
}
inline double ind_threshold_regime23() { return 1.0 / 24.0; }

// dual-norm constants (sup of first/second running integral of the data)
inline double dual_norm1_abs() { return 1.0 / 8.0; }
inline double dual_norm2_abs() { return 1.0 / 12.0; }
inline double dual_norm1_ind() { return 1.0 / 4.0; }
inline double dual_norm2_ind() { return 1.0 / 8.0; }

// (TV1*, TV2*) dual norms of the quadratic data x^2 - 1/3
inline std::pair<double, double> quad_dual_norms() {
    return {2.0 * std::sqrt(3.0) / 27.0, 1.0 / 12.0};
}

// ------------------------------------------------------------ small types

struct AbsTgvCoefficients {
    double c = 0.0;  // half-width of the central bending wedge, in [0, 1/2]
    double d = 0.0;  // central slope magnitude, in [0, 1]
};

struct MuPair {
    double mu1 = 0.0;
    double mu2 = 0.0;
};

struct RegionBounds {
    double lower = 0.0;  // lam2 at and below which TGV collapses to TV2
    double upper = 0.0;  // lam2 at and above which TGV collapses to TV
};

namespace detail {
inline void require_positive_weight(double lam, const char* who) {
    if (!(lam > 0.0) || !std::isfinite(lam))
        throw std::invalid_argument(std::string(who) +
                                    ": weight must be positive and finite");
}
}  // namespace detail

// ------------------------------------------------------------- abs oracles

inline PiecewiseAffineSignal oracle_tv1_abs(double lam1) {
    detail::require_positive_weight(lam1, "oracle_tv1_abs");
    if (lam1 >= 0.125) return piecewise_constant(0.0);
    const double s = std::sqrt(2.0 * lam1);
    // flat at s - 1/2 around the corner, follows the data in between, flat
    // at 1/2 - s against each boundary
    return PiecewiseAffineSignal({-1.0, -1.0 + s, -s, s, 1.0 - s, 1.0},
                                 {0.0, -1.0, 0.0, 1.0, 0.0},
                                 {0.5 - s, -0.5, s - 0.5, -0.5, 0.5 - s});
}

inline PiecewiseAffineSignal oracle_tv2_abs(double lam2) {
    detail::require_positive_weight(lam2, "oracle_tv2_abs");
    const double a = 1.0 - 12.0 * lam2;
    if (a <= 0.0) return piecewise_constant(0.0);
    return scale(piecewise_data(DataId::AbsData), a);
}

inline RegionBounds abs_region_bounds(double lam1) {
    detail::require_positive_weight(lam1, "abs_region_bounds");
    if (lam1 >= 0.125)
        throw std::invalid_argument(
            "abs_region_bounds: weight must lie below 1/8");
    RegionBounds b;
    b.lower = (2.0 / 3.0) * lam1;
    b.upper = lam1 * (1.0 - (2.0 / 3.0) * std::sqrt(2.0 * lam1));
    return b;
}

inline AbsTgvCoefficients abs_tgv_coefficients(const LambdaPair& lam) {
    lam.validate();
    const RegionBounds b = abs_region_bounds(lam.lambda1);
    if (lam.lambda2 < b.lower - 1e-12 || lam.lambda2 > b.upper + 1e-12)
        throw std::domain_error(
            "abs_tgv_coefficients: weights outside the strict-TGV region");
    const double gap = lam.lambda1 - lam.lambda2;
    AbsTgvCoefficients co;
    co.c = 1.5 * gap / lam.lambda1;
    co.d = 1.0 - (8.0 / 9.0) * std::pow(lam.lambda1, 3) / (gap * gap);
    if (co.c < -1e-9 || co.c > 0.5 + 1e-9 || co.d < -1e-9 || co.d > 1.0 + 1e-9)
        throw std::domain_error("abs_tgv_coefficients: coefficients escaped"
                                " their admissible ranges");
    return co;
}

inline PiecewiseAffineSignal oracle_tgv_abs(const LambdaPair& lam) {
    lam.validate();
    if (lam.lambda1 >= 0.125)
        throw std::invalid_argument(
            "oracle_tgv_abs: first weight must lie below 1/8");
    const RegionBounds b = abs_region_bounds(lam.lambda1);
    if (lam.lambda2 >= b.upper) return oracle_tv1_abs(lam.lambda1);
    if (lam.lambda2 <= b.lower) return oracle_tv2_abs(lam.lambda2);
    const AbsTgvCoefficients co = abs_tgv_coefficients(lam);
    const double c = co.c, d = co.d;
    const double inner_ic = c * (1.0 - d) - 0.5;   // around the corner
    const double outer_ic = c * (d - 1.0) - d + 0.5;  // against the walls
    return PiecewiseAffineSignal(
        {-1.0, -(1.0 - c), -c, 0.0, c, 1.0 - c, 1.0},
        {-d, -1.0, -d, d, 1.0, d},
        {outer_ic, -0.5, inner_ic, inner_ic, -0.5, outer_ic});
}

inline MuPair mu_from_lambda_abs(const LambdaPair& lam) {
    const AbsTgvCoefficients co = abs_tgv_coefficients(lam);
    MuPair mu;
    mu.mu1 = 0.5 * co.c * co.c;
    mu.mu2 = (1.0 - co.d) / 12.0;
    // round trip through the weight-recovery relations
    const double l1 = 12.0 * mu.mu1 * mu.mu2;
    const double l2 = 12.0 * mu.mu2 *
                      (mu.mu1 - (2.0 / 3.0) * std::sqrt(2.0 * std::pow(mu.mu1, 3)));
    if (std::abs(l1 - lam.lambda1) > 1e-9 * lam.lambda1 ||
        std::abs(l2 - lam.lambda2) > 1e-9 * lam.lambda2)
        throw std::domain_error(
            "mu_from_lambda_abs: weight recovery failed the round trip");
    return mu;
}

// ------------------------------------------------------------- ind oracles

inline PiecewiseAffineSignal oracle_tv1_ind(double lam1) {
    detail::require_positive_weight(lam1, "oracle_tv1_ind");
    const double a = 1.0 - 4.0 * lam1;
    if (a <= 0.0) return piecewise_constant(0.0);
    return scale(piecewise_data(DataId::IndData), a);
}

namespace detail {

// one bend pair at +-b, flat plateau 1/2 in between, straight lines to the
// boundary; slope fixed by the vanishing mean of the residual
inline PiecewiseAffineSignal ind_tv2_two_bends(double b) {
    const double k1 = -1.0 / ((1.0 - b) * (1.0 - b));
    if (b < 1e-9)
        return PiecewiseAffineSignal({-1.0, 0.0, 1.0}, {-k1, k1}, {0.5, 0.5});
    const double ic = 0.5 - k1 * b;  // line through (b, 1/2)
    return PiecewiseAffineSignal({-1.0, -b, b, 1.0}, {-k1, 0.0, k1},
                                 {ic, 0.5, ic});
}

// two bend pairs: plateau 1/2 on [0, x1), slope k1 across the data jump up
// to x2 = 1/2 + bp, slope k2 to the boundary; k1 pins the first running
// integral of the residual to zero at x2, k2 pins its mean, and the
// parametrization of x1 by bp pins the second running integral to -lam2 at
// x2; the remaining unknown bp is solved against saturation at x1
inline PiecewiseAffineSignal ind_tv2_four_bends_candidate(double lam2,
                                                          double bp) {
    const double x2 = 0.5 + bp;
    const double len = 6.0 * lam2 / bp + 1.5 * bp;
    const double x1 = x2 - len;
    const double k1 = -2.0 * bp / (len * len);
    const double y2 = 0.5 + k1 * len;
    const double k2 = -2.0 * (k1 * len + 1.0) / (1.0 - x2);
    const double ic1 = 0.5 - k1 * x1;
    const double ic2 = y2 - k2 * x2;
    return PiecewiseAffineSignal({-1.0, -x2, -x1, x1, x2, 1.0},
                                 {-k2, -k1, 0.0, k1, k2},
                                 {ic2, ic1, 0.5, ic1, ic2});
}

inline PiecewiseAffineSignal ind_residual(const PiecewiseAffineSignal& v) {
    return add(v, scale(piecewise_data(DataId::IndData), -1.0));
}

}  // namespace detail

inline PiecewiseAffineSignal oracle_tv2_ind(double lam2) {
    detail::require_positive_weight(lam2, "oracle_tv2_ind");
    const double t1 = ind_threshold_regime12();
    const double t2 = ind_threshold_regime23();
    if (lam2 >= t2) {
        // single bend at the origin
        const double a = std::max(0.0, 1.5 - 12.0 * lam2);
        if (a == 0.0) return piecewise_constant(0.0);
        return PiecewiseAffineSignal({-1.0, 0.0, 1.0}, {a, -a},
                                     {0.5 * a, 0.5 * a});
    }
    if (lam2 >= t1) {
        // bend location solved from saturation of the second running
        // integral of the residual at the bend
        const auto resid = [&](double b) {
            const PiecewiseAffineSignal cand = detail::ind_tv2_two_bends(b);
            const PiecewiseAffineSignal r = detail::ind_residual(cand);
            return sigma2_piecewise(r, b) - lam2;
        };
        const double b = find_root(resid, 0.0, 0.25, 1e-14);
        return detail::ind_tv2_two_bends(b);
    }
    // four bends: scan the admissible outer-bend offsets for a sign change,
    // then refine
    const double disc = std::sqrt(1.0 - 48.0 * lam2);
    const double bp_lo = 0.5 * (1.0 - disc) + 1e-10;
    const double bp_hi = 0.5 - 1e-10;
    const auto resid = [&](double bp) {
        const PiecewiseAffineSignal cand =
            detail::ind_tv2_four_bends_candidate(lam2, bp);
        const PiecewiseAffineSignal r = detail::ind_residual(cand);
        const double x1 = cand.breakpoints[3];
        return sigma2_piecewise(r, x1) - lam2;
    };
    const auto bracket = scan_bracket(resid, bp_lo, bp_hi, 128);
    if (!bracket) {
        std::ostringstream os;
        os << "oracle_tv2_ind: no sign change for the outer bend in ["
           << bp_lo << ", " << bp_hi << "] at weight " << lam2;
        throw std::domain_error(os.str());
    }
    const double bp = find_root(resid, bracket->first, bracket->second, 1e-14);
    const PiecewiseAffineSignal v =
        detail::ind_tv2_four_bends_candidate(lam2, bp);
    // verify all four stationarity conditions on the solved candidate
    const PiecewiseAffineSignal r = detail::ind_residual(v);
    const double x1 = v.breakpoints[3], x2 = v.breakpoints[4];
    if (std::abs(sigma1_piecewise(r, x1)) > 1e-9 ||
        std::abs(sigma1_piecewise(r, x2)) > 1e-9 ||
        std::abs(sigma2_piecewise(r, x1) - lam2) > 1e-9 ||
        std::abs(sigma2_piecewise(r, x2) + lam2) > 1e-9)
        throw std::domain_error(
            "oracle_tv2_ind: solved candidate violates the stationarity "
            "conditions");
    return v;
}

inline double dual_norm_tv2_residual_ind(double lam2) {
    detail::require_positive_weight(lam2, "dual_norm_tv2_residual_ind");
    if (lam2 >= 0.125) return 0.25;  // minimizer is zero, residual is -data
    if (lam2 >= ind_threshold_regime23()) return 1.0 / 16.0 + 1.5 * lam2;
    if (lam2 >= ind_threshold_regime12()) {
        const double num = 1.0 + 48.0 * lam2 + 576.0 * lam2 * lam2;
        const double den = (1.0 + 8.0 * lam2) * (1.0 + 8.0 * lam2);
        return num / (18.0 * den);
    }
    const PiecewiseAffineSignal r =
        detail::ind_residual(oracle_tv2_ind(lam2));
    return sup_abs_sigma1(r).value;
}

inline MuPair mu_from_lambda_ind(const LambdaPair& lam) {
    lam.validate();
    // strict region: below the TV collapse line lam2 = lam1/2 and left of
    // the TV2 collapse line lam1 = g(lam2)
    if (lam.lambda2 > 0.5 * lam.lambda1 + 1e-12)
        throw std::domain_error(
            "mu_from_lambda_ind: weights above the TV collapse line");
    if (lam.lambda1 > dual_norm_tv2_residual_ind(lam.lambda2) + 1e-12)
        throw std::domain_error(
            "mu_from_lambda_ind: weights beyond the TV2 collapse line");
    const auto resid = [&](double mu2) {
        return lam.lambda2 * dual_norm_tv2_residual_ind(mu2) -
               lam.lambda1 * mu2;
    };
    MuPair mu;
    mu.mu2 = find_root(resid, lam.lambda2, 0.125, 1e-14);
    mu.mu1 = lam.lambda2 / (4.0 * mu.mu2);
    // consistency of the recovered weights
    const double l1 = 4.0 * mu.mu1 * dual_norm_tv2_residual_ind(mu.mu2);
    if (std::abs(l1 - lam.lambda1) > 1e-8)
        throw std::domain_error(
            "mu_from_lambda_ind: weight recovery failed the round trip");
    return mu;
}

inline PiecewiseAffineSignal oracle_tgv_ind(const LambdaPair& lam) {
    const MuPair mu = mu_from_lambda_ind(lam);
    return add(oracle_tv1_ind(mu.mu1),
               scale(oracle_tv2_ind(mu.mu2), 4.0 * mu.mu1));
}

}  // namespace tgv1d
