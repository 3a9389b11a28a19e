// piecewise.hpp
//
// Exact piecewise-affine signals on [-1, 1].  A signal is a list of
// breakpoints b_0 = -1 < b_1 < ... < b_m = 1 with an affine piece
// value = slope*x + intercept on each open interval (b_k, b_{k+1}); jumps are
// allowed at interior breakpoints and both one-sided limits are stored.
// Closed-form minimizers live in this representation, so total variation
// seminorms and the antiderivative transforms sigma1/sigma2 evaluate exactly
// (piecewise quadratic / cubic), which the oracle root-finders rely on.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tgv1d/signal.hpp"

namespace tgv1d {

// --------------------------------------------------------- piecewise signal

struct PiecewiseAffineSignal {
    std::vector<double> breakpoints;   // size m+1, first -1, last +1
    std::vector<double> slopes;        // size m
    std::vector<double> intercepts;    // size m
    std::vector<double> left_values;   // limits at interior breakpoints, m-1
    std::vector<double> right_values;  // limits at interior breakpoints, m-1

    PiecewiseAffineSignal() = default;

    PiecewiseAffineSignal(std::vector<double> bp, std::vector<double> sl,
                          std::vector<double> ic)
        : breakpoints(std::move(bp)),
          slopes(std::move(sl)),
          intercepts(std::move(ic)) {
        validate();
        fill_limits();
    }

    std::size_t segments() const { return slopes.size(); }

    // one-sided limits at breakpoint index k (0..m)
    double limit_left(std::size_t k) const {
        const std::size_t seg = (k == 0) ? 0 : k - 1;
        return slopes[seg] * breakpoints[k] + intercepts[seg];
    }
    double limit_right(std::size_t k) const {
        const std::size_t seg = (k == segments()) ? segments() - 1 : k;
        return slopes[seg] * breakpoints[k] + intercepts[seg];
    }

    // value at x; an exact hit on a breakpoint averages the one-sided limits
    double value(double x) const {
        if (x < breakpoints.front() || x > breakpoints.back())
            throw std::domain_error("PiecewiseAffineSignal: x outside [-1,1]");
        const auto it = std::lower_bound(breakpoints.begin(),
                                         breakpoints.end(), x);
        if (it != breakpoints.end() && *it == x) {
            const std::size_t k = static_cast<std::size_t>(
                it - breakpoints.begin());
            return 0.5 * (limit_left(k) + limit_right(k));
        }
        const std::size_t seg = static_cast<std::size_t>(
            it - breakpoints.begin()) - 1;
        return slopes[seg] * x + intercepts[seg];
    }

  private:
    void validate() const {
        if (breakpoints.size() < 2)
            throw std::invalid_argument("piecewise: need at least 2 breakpoints");
        if (slopes.size() != breakpoints.size() - 1 ||
            intercepts.size() != slopes.size())
            throw std::invalid_argument("piecewise: segment count mismatch");
        if (std::abs(breakpoints.front() + 1.0) > 1e-12 ||
            std::abs(breakpoints.back() - 1.0) > 1e-12)
            throw std::invalid_argument("piecewise: domain must be [-1,1]");
        for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k)
            if (!(breakpoints[k] < breakpoints[k + 1]))
                throw std::invalid_argument("piecewise: breakpoints not increasing");
        for (std::size_t k = 0; k < slopes.size(); ++k)
            if (!std::isfinite(slopes[k]) || !std::isfinite(intercepts[k]))
                throw std::invalid_argument("piecewise: non-finite segment");
    }

    void fill_limits() {
        left_values.clear();
        right_values.clear();
        for (std::size_t k = 1; k + 1 < breakpoints.size(); ++k) {
            left_values.push_back(limit_left(k));
            right_values.push_back(limit_right(k));
        }
    }
};

// ------------------------------------------------------------------ builders

inline PiecewiseAffineSignal piecewise_constant(double c) {
    return PiecewiseAffineSignal({-1.0, 1.0}, {0.0}, {c});
}

// exact piecewise-affine form of a data function (QuadData has none)
inline PiecewiseAffineSignal piecewise_data(DataId id) {
    switch (id) {
        case DataId::AbsData:
            return PiecewiseAffineSignal({-1.0, 0.0, 1.0}, {-1.0, 1.0},
                                         {-0.5, -0.5});
        case DataId::IndData:
            return PiecewiseAffineSignal({-1.0, -0.5, 0.5, 1.0},
                                         {0.0, 0.0, 0.0}, {-0.5, 0.5, -0.5});
        case DataId::QuadData:
            throw std::invalid_argument(
                "piecewise_data: quad data is not piecewise affine");
    }
    throw std::invalid_argument("piecewise_data: unknown data id");
}

// --------------------------------------------------------------- evaluation

// midpoint samples of a piecewise signal
inline GridSignal eval_piecewise(const PiecewiseAffineSignal& p,
                                 std::size_t n) {
    if (n < 4) throw std::invalid_argument("eval_piecewise: need n >= 4");
    std::vector<double> v(n);
    const double h = 2.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = p.value(-1.0 + (static_cast<double>(i) + 0.5) * h);
    return GridSignal(std::move(v));
}

// ------------------------------------------------------------------- algebra

inline PiecewiseAffineSignal scale(const PiecewiseAffineSignal& p, double a) {
    std::vector<double> sl = p.slopes, ic = p.intercepts;
    for (double& s : sl) s *= a;
    for (double& c : ic) c *= a;
    return PiecewiseAffineSignal(p.breakpoints, std::move(sl), std::move(ic));
}

// sum of two piecewise signals on the merged breakpoint set
inline PiecewiseAffineSignal add(const PiecewiseAffineSignal& p,
                                 const PiecewiseAffineSignal& q) {
    std::vector<double> bp;
    bp.reserve(p.breakpoints.size() + q.breakpoints.size());
    std::merge(p.breakpoints.begin(), p.breakpoints.end(),
               q.breakpoints.begin(), q.breakpoints.end(),
               std::back_inserter(bp));
    bp.erase(std::unique(bp.begin(), bp.end(),
                         [](double a, double b) {
                             return std::abs(a - b) <= 1e-13;
                         }),
             bp.end());
    bp.front() = -1.0;
    bp.back() = 1.0;

    const auto segment_of = [](const PiecewiseAffineSignal& s, double xm) {
        const auto it = std::upper_bound(s.breakpoints.begin(),
                                         s.breakpoints.end(), xm);
        std::size_t k = static_cast<std::size_t>(it - s.breakpoints.begin());
        if (k == 0) k = 1;
        if (k > s.segments()) k = s.segments();
        return k - 1;
    };

    std::vector<double> sl(bp.size() - 1), ic(bp.size() - 1);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double xm = 0.5 * (bp[k] + bp[k + 1]);
        const std::size_t a = segment_of(p, xm), b = segment_of(q, xm);
        sl[k] = p.slopes[a] + q.slopes[b];
        ic[k] = p.intercepts[a] + q.intercepts[b];
    }
    return PiecewiseAffineSignal(std::move(bp), std::move(sl), std::move(ic));
}

// ------------------------------------------------------------ exact seminorms

// order-1 total variation: integral of |slope| plus jump heights
inline double tv1_piecewise(const PiecewiseAffineSignal& p) {
    double s = 0.0;
    for (std::size_t k = 0; k < p.segments(); ++k)
        s += std::abs(p.slopes[k]) * (p.breakpoints[k + 1] - p.breakpoints[k]);
    for (std::size_t k = 0; k < p.left_values.size(); ++k)
        s += std::abs(p.right_values[k] - p.left_values[k]);
    return s;
}

// order-2 total variation: sum of slope changes; infinite if a jump exists
inline double tv2_piecewise(const PiecewiseAffineSignal& p,
                            double jump_tol = 1e-12) {
    for (std::size_t k = 0; k < p.left_values.size(); ++k)
        if (std::abs(p.right_values[k] - p.left_values[k]) > jump_tol)
            return std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < p.segments(); ++k)
        s += std::abs(p.slopes[k + 1] - p.slopes[k]);
    return s;
}

// --------------------------------------------------- exact sigma transforms

// Antiderivative values at every breakpoint; sigma1 is piecewise quadratic
// and sigma2 piecewise cubic between breakpoints.
struct PiecewiseIntegrals {
    std::vector<double> i1;  // sigma1 at breakpoints
    std::vector<double> i2;  // sigma2 at breakpoints
};

inline PiecewiseIntegrals piecewise_integrals(const PiecewiseAffineSignal& p) {
    PiecewiseIntegrals t;
    const std::size_t m = p.segments();
    t.i1.assign(m + 1, 0.0);
    t.i2.assign(m + 1, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        const double a = p.breakpoints[k], b = p.breakpoints[k + 1];
        const double sl = p.slopes[k], ic = p.intercepts[k];
        const auto F = [&](double t_) { return 0.5 * sl * t_ * t_ + ic * t_; };
        const auto G = [&](double t_) {
            return sl * t_ * t_ * t_ / 6.0 + 0.5 * ic * t_ * t_;
        };
        t.i1[k + 1] = t.i1[k] + F(b) - F(a);
        t.i2[k + 1] = t.i2[k] + (t.i1[k] - F(a)) * (b - a) + G(b) - G(a);
    }
    return t;
}

// sigma1 at an arbitrary x (exact integral from -1)
inline double sigma1_piecewise(const PiecewiseAffineSignal& p,
                               const PiecewiseIntegrals& t, double x) {
    const auto it = std::upper_bound(p.breakpoints.begin(),
                                     p.breakpoints.end(), x);
    std::size_t k = static_cast<std::size_t>(it - p.breakpoints.begin());
    if (k == 0) k = 1;
    if (k > p.segments()) k = p.segments();
    --k;
    const double a = p.breakpoints[k];
    const double sl = p.slopes[k], ic = p.intercepts[k];
    const auto F = [&](double t_) { return 0.5 * sl * t_ * t_ + ic * t_; };
    return t.i1[k] + F(x) - F(a);
}

// sigma2 at an arbitrary x
inline double sigma2_piecewise(const PiecewiseAffineSignal& p,
                               const PiecewiseIntegrals& t, double x) {
    const auto it = std::upper_bound(p.breakpoints.begin(),
                                     p.breakpoints.end(), x);
    std::size_t k = static_cast<std::size_t>(it - p.breakpoints.begin());
    if (k == 0) k = 1;
    if (k > p.segments()) k = p.segments();
    --k;
    const double a = p.breakpoints[k];
    const double sl = p.slopes[k], ic = p.intercepts[k];
    const auto F = [&](double t_) { return 0.5 * sl * t_ * t_ + ic * t_; };
    const auto G = [&](double t_) {
        return sl * t_ * t_ * t_ / 6.0 + 0.5 * ic * t_ * t_;
    };
    return t.i2[k] + (t.i1[k] - F(a)) * (x - a) + G(x) - G(a);
}

// single-point conveniences that recompute the segment integrals
inline double sigma1_piecewise(const PiecewiseAffineSignal& p, double x) {
    return sigma1_piecewise(p, piecewise_integrals(p), x);
}

inline double sigma2_piecewise(const PiecewiseAffineSignal& p, double x) {
    return sigma2_piecewise(p, piecewise_integrals(p), x);
}

struct SupResult {
    double value = 0.0;  // sup of the absolute value
    double x = -1.0;     // a location attaining it
};

// exact sup |sigma1|: per segment the extrema sit at endpoints or where the
// signal crosses zero
inline SupResult sup_abs_sigma1(const PiecewiseAffineSignal& p) {
    const PiecewiseIntegrals t = piecewise_integrals(p);
    SupResult best;
    const auto consider = [&](double x) {
        const double v = std::abs(sigma1_piecewise(p, t, x));
        if (v > best.value) { best.value = v; best.x = x; }
    };
    for (std::size_t k = 0; k <= p.segments(); ++k)
        consider(p.breakpoints[k]);
    for (std::size_t k = 0; k < p.segments(); ++k) {
        if (p.slopes[k] != 0.0) {
            const double xr = -p.intercepts[k] / p.slopes[k];
            if (xr > p.breakpoints[k] && xr < p.breakpoints[k + 1])
                consider(xr);
        }
    }
    return best;
}

// exact sup |sigma2|: extrema at endpoints or at roots of sigma1 (quadratic
// per segment)
inline SupResult sup_abs_sigma2(const PiecewiseAffineSignal& p) {
    const PiecewiseIntegrals t = piecewise_integrals(p);
    SupResult best;
    const auto consider = [&](double x) {
        const double v = std::abs(sigma2_piecewise(p, t, x));
        if (v > best.value) { best.value = v; best.x = x; }
    };
    for (std::size_t k = 0; k <= p.segments(); ++k)
        consider(p.breakpoints[k]);
    for (std::size_t k = 0; k < p.segments(); ++k) {
        // sigma1(x) = i1[k] + F(x) - F(a) is quadratic on the segment
        const double a = p.breakpoints[k], b = p.breakpoints[k + 1];
        const double sl = p.slopes[k], ic = p.intercepts[k];
        const double c0 = t.i1[k] - (0.5 * sl * a * a + ic * a);
        // roots of 0.5*sl*x^2 + ic*x + c0
        if (sl != 0.0) {
            const double disc = ic * ic - 2.0 * sl * c0;
            if (disc >= 0.0) {
                const double sq = std::sqrt(disc);
                for (double xr : {(-ic + sq) / sl, (-ic - sq) / sl})
                    if (xr > a && xr < b) consider(xr);
            }
        } else if (ic != 0.0) {
            const double xr = -c0 / ic;
            if (xr > a && xr < b) consider(xr);
        }
    }
    return best;
}

}  // namespace tgv1d
