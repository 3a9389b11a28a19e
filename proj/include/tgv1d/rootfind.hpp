// rootfind.hpp
//
// Bracketed scalar root finding: bisection with secant acceleration.  Used by
// the closed-form minimizer constructions whose coefficients solve small
// nonlinear saturation conditions.

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tgv1d {

// Root of f on [lo, hi] with f(lo), f(hi) of opposite sign.  Maintains the
// bracket throughout; secant candidates are accepted only when they fall
// safely inside it, otherwise the step bisects.  Stops when |f| <= ftol or
// the bracket collapses.
template <class F>
double find_root(F&& f, double lo, double hi, double ftol = 1e-12,
                 int max_iter = 200) {
    if (!(lo < hi)) throw std::invalid_argument("find_root: empty bracket");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::domain_error("find_root: no sign change on bracket");
    double x = lo, fx = flo;
    for (int it = 0; it < max_iter; ++it) {
        // secant through the bracket ends, guarded toward the interior
        double cand = hi - fhi * (hi - lo) / (fhi - flo);
        const double mid = 0.5 * (lo + hi);
        if (!(cand > lo && cand < hi)) cand = mid;
        // alternate toward bisection to guarantee bracket shrinkage
        if (it % 2 == 1) cand = mid;
        x = cand;
        fx = f(x);
        if (std::abs(fx) <= ftol) return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        if (hi - lo <= 1e-15 * (1.0 + std::abs(lo) + std::abs(hi))) break;
    }
    return std::abs(flo) < std::abs(fhi) ? lo : hi;
}

// Scan [lo, hi] at k+1 equispaced points and return the first subinterval
// with a sign change (endpoints with f = 0 count as roots).
template <class F>
std::optional<std::pair<double, double>> scan_bracket(F&& f, double lo,
                                                      double hi, int k = 64) {
    if (!(lo < hi) || k < 1)
        throw std::invalid_argument("scan_bracket: bad interval");
    double xa = lo, fa = f(lo);
    for (int i = 1; i <= k; ++i) {
        const double xb = lo + (hi - lo) * static_cast<double>(i) /
                                   static_cast<double>(k);
        const double fb = f(xb);
        if (fa == 0.0) return std::make_pair(xa, xa);
        if ((fa > 0.0) != (fb > 0.0)) return std::make_pair(xa, xb);
        xa = xb;
        fa = fb;
    }
    return std::nullopt;
}

}  // namespace tgv1d
