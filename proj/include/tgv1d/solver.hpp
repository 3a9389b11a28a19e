// solver.hpp
//
// Splitting solvers for the three denoising problems on the midpoint grid,
//
//     min_u 1/2 h||u-f||^2 + lam1 * TV1(u)
//     min_u 1/2 h||u-f||^2 + lam2 * TV2(u)
//     min_u 1/2 h||u-f||^2 + TGV_{lam1,lam2}(u),
//
// run internally in grid units (objective divided by h, difference operators
// with O(1) entries, weights a1 = lam1/h, a2 = lam2/h^2).
//
// All three iterative solvers are alternating-direction schemes built from
// exact one-dimensional subproblem solves:
//
//   TV1   consensus z = Du; the u-step solves the tridiagonal system
//         (I + rho D^T D) u = f + rho D^T(z - m), the z-step is soft
//         shrinkage.
//   TV2   consensus z = Du; the z-step is itself a first-order total
//         variation problem in z and is solved exactly by the taut-string
//         construction, so the stiff second-order coupling never has to
//         propagate cell by cell.
//   TGV   blocks (u, v, y) for 1/2||u-f||^2 + a1||y||_1 + a2||Dv||_1 with
//         the consensus constraint Du - v = y: tridiagonal u-step,
//         taut-string v-step, shrinkage y-step.  Every check the iterate is
//         polished by exact block minimization (taut string in u for the
//         current slope field, the tvl1 dynamic program in the slope field
//         for the polished u) and the best polished primal is kept.  When
//         the affine-free part of the data already lies in the dual ball,
//         the affine projection of the data is returned outright.
//
// The consensus penalty rho starts at cfg.step_ratio and is rebalanced by
// the standard primal/dual residual comparison; the tridiagonal factor is
// rebuilt on each change.
//
// Convergence is certified independently of the iteration: scaling the
// running sums of a (moment-corrected) primal residual into the dual box
// always yields a feasible dual point, whose value is a true lower bound,
// and the duality gap against it is driven below cfg.tol_gap relative to
// 1/2 h||f||^2 + 1.  Because the fidelity is strongly convex, a physical
// gap g guarantees ||u - u*||_{L2} <= sqrt(2 g).

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tgv1d/functionals.hpp"
#include "tgv1d/signal.hpp"
#include "tgv1d/taut_string.hpp"
#include "tgv1d/tvl1.hpp"

namespace tgv1d {

// ------------------------------------------------------------ configuration

struct SolverConfig {
    int max_iters = 200000;   // iteration cap
    double tol_gap = 1e-8;    // relative duality-gap tolerance
    double step_ratio = 1.0;  // initial consensus penalty (primal/dual split)
    int check_every = 16;     // gap evaluation (and polish) cadence

    void validate() const {
        if (max_iters < 1 || !(tol_gap > 0.0) || tol_gap >= 1.0 ||
            !(step_ratio > 0.0) || check_every < 1)
            throw std::invalid_argument("SolverConfig: bad parameters");
    }
};

struct SolverResult {
    GridSignal u;
    std::optional<std::vector<double>> w;  // slope field, physical units
    int iterations = 0;
    double final_gap = 0.0;  // physical duality gap at the returned iterate
    bool converged = false;
};

// dual functional value at a residual certificate r (physical units):
// D(r) = -1/2 h||r||^2 - h<r, f>; weak duality gives P(u) >= D(r) for every
// r in the scaled dual ball of the problem's regularizer
inline double dual_value(const GridSignal& f, const GridSignal& r) {
    if (f.n() != r.n()) throw std::invalid_argument("dual_value: size mismatch");
    double s2 = 0.0, sf = 0.0;
    for (std::size_t i = 0; i < f.n(); ++i) {
        s2 += r.values[i] * r.values[i];
        sf += r.values[i] * f.values[i];
    }
    return -f.h() * (0.5 * s2 + sf);
}

// ---------------------------------------------------------------- internals

namespace detail {

// forward difference, size n-1
inline void diff(const std::vector<double>& u, std::vector<double>& d) {
    d.resize(u.size() - 1);
    for (std::size_t j = 0; j + 1 < u.size(); ++j) d[j] = u[j + 1] - u[j];
}

// adjoint of diff, size n; (Dt p)_i = p_{i-1} - p_i with zero padding
inline void diff_t(const std::vector<double>& p, std::vector<double>& y,
                   std::size_t n) {
    y.assign(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        y[j] -= p[j];
        y[j + 1] += p[j];
    }
}

inline void clip(std::vector<double>& p, double a) {
    for (double& x : p) x = (x > a) ? a : (x < -a ? -a : x);
}

inline double shrink(double t, double thr) {
    return (t > thr) ? t - thr : (t < -thr ? t + thr : 0.0);
}

inline double max_abs(const std::vector<double>& p) {
    double m = 0.0;
    for (double x : p) m = std::max(m, std::abs(x));
    return m;
}

// subtract the Euclidean projection onto span{1, index}; zeroes both running
// sum conditions sum r = 0 and sum (n-i) r_i = 0
inline std::vector<double> remove_affine(const std::vector<double>& r) {
    const std::size_t n = r.size();
    double m0 = 0.0, m1 = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i);
        m0 += r[i];
        m1 += r[i] * t;
        s1 += t;
        s2 += t * t;
    }
    const double nn = static_cast<double>(n);
    const double det = nn * s2 - s1 * s1;
    const double a = (m0 * s2 - m1 * s1) / det;
    const double b = (nn * m1 - m0 * s1) / det;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = r[i] - a - b * static_cast<double>(i);
    return out;
}

// dual lower bound from a residual certificate scaled into the order-1 box
// |cumsum| <= a1 (grid units); r must be mean-free
inline double dual_from_residual_tv(const std::vector<double>& f,
                                    const std::vector<double>& rt,
                                    double a1) {
    double run = 0.0, mx = 0.0;
    for (std::size_t j = 0; j + 1 < rt.size(); ++j) {
        run += rt[j];
        mx = std::max(mx, std::abs(run));
    }
    const double c = (mx <= a1) ? 1.0 : a1 / mx;
    double s2 = 0.0, sf = 0.0;
    for (std::size_t i = 0; i < rt.size(); ++i) {
        s2 += rt[i] * rt[i];
        sf += rt[i] * f[i];
    }
    return -c * sf - 0.5 * c * c * s2;
}

// dual lower bound from a residual certificate scaled into the order-2 box
// |double cumsum| <= a2; r must be affine-free
inline double dual_from_residual_tv2(const std::vector<double>& f,
                                     const std::vector<double>& rt,
                                     double a2) {
    double run = 0.0, run2 = 0.0, mx = 0.0;
    for (std::size_t j = 0; j + 2 < rt.size(); ++j) {
        run += rt[j];
        run2 += run;
        mx = std::max(mx, std::abs(run2));
    }
    const double c = (mx <= a2) ? 1.0 : a2 / mx;
    double s2 = 0.0, sf = 0.0;
    for (std::size_t i = 0; i < rt.size(); ++i) {
        s2 += rt[i] * rt[i];
        sf += rt[i] * f[i];
    }
    return -c * sf - 0.5 * c * c * s2;
}

// dual lower bound with both boxes active (TGV)
inline double dual_from_residual_tgv(const std::vector<double>& f,
                                     const std::vector<double>& rt, double a1,
                                     double a2) {
    double run = 0.0, run2 = 0.0, mx1 = 0.0, mx2 = 0.0;
    for (std::size_t j = 0; j < rt.size(); ++j) {
        run += rt[j];
        if (j + 1 < rt.size()) mx1 = std::max(mx1, std::abs(run));
        run2 += run;
        if (j + 2 < rt.size()) mx2 = std::max(mx2, std::abs(run2));
    }
    double c = 1.0;
    if (mx1 > a1) c = std::min(c, a1 / mx1);
    if (mx2 > a2) c = std::min(c, a2 / mx2);
    double s2 = 0.0, sf = 0.0;
    for (std::size_t i = 0; i < rt.size(); ++i) {
        s2 += rt[i] * rt[i];
        sf += rt[i] * f[i];
    }
    return -c * sf - 0.5 * c * c * s2;
}

// factorization of the tridiagonal system (I + rho D^T D) x = b
struct Tridiag {
    std::vector<double> sub, diag;
    double rho = 0.0;

    void factor(std::size_t n, double r) {
        rho = r;
        sub.assign(n - 1, 0.0);
        diag.assign(n, 0.0);
        const auto a0 = [&](std::size_t i) {
            return 1.0 + ((i == 0 || i + 1 == n) ? r : 2.0 * r);
        };
        diag[0] = a0(0);
        for (std::size_t i = 1; i < n; ++i) {
            sub[i - 1] = -r / diag[i - 1];
            diag[i] = a0(i) - sub[i - 1] * (-r);
        }
    }

    void solve(std::vector<double>& b) const {
        const std::size_t n = diag.size();
        for (std::size_t i = 1; i < n; ++i) b[i] -= sub[i - 1] * b[i - 1];
        b[n - 1] /= diag[n - 1];
        for (std::size_t i = n - 1; i-- > 0;)
            b[i] = (b[i] + rho * b[i + 1]) / diag[i];
    }
};

// standard residual balancing; returns true when rho changed (multiplier m
// is rescaled in place to keep rho*m continuous)
inline bool rebalance(double primal_res, double dual_res, double& rho,
                      std::vector<double>& m) {
    if (primal_res > 10.0 * dual_res && rho < 1e10) {
        rho *= 2.0;
        for (double& x : m) x *= 0.5;
        return true;
    }
    if (dual_res > 10.0 * primal_res && rho > 1e-10) {
        rho *= 0.5;
        for (double& x : m) x *= 2.0;
        return true;
    }
    return false;
}

}  // namespace detail

// -------------------------------------------------------------- TV (exact)

// Exact order-1 solve through the taut-string construction; independent of
// the iterative path and used as its oracle.
inline SolverResult solve_tv_exact(const GridSignal& f, double lam1) {
    if (!(lam1 > 0.0) || !std::isfinite(lam1))
        throw std::invalid_argument("solve_tv_exact: weight must be positive");
    const double h = f.h();
    SolverResult res;
    res.u = GridSignal(taut_string(f.values, lam1 / h));
    res.iterations = 0;
    res.converged = true;
    // honest gap from the residual certificate
    std::vector<double> r(f.n());
    for (std::size_t i = 0; i < f.n(); ++i)
        r[i] = res.u.values[i] - f.values[i];
    double mean = 0.0;
    for (double x : r) mean += x;
    mean /= static_cast<double>(f.n());
    for (double& x : r) x -= mean;
    const double dual =
        detail::dual_from_residual_tv(f.values, r, lam1 / h);
    double primal = 0.0;
    for (std::size_t i = 0; i < f.n(); ++i) {
        const double d = res.u.values[i] - f.values[i];
        primal += 0.5 * d * d;
    }
    for (std::size_t j = 0; j + 1 < f.n(); ++j)
        primal += (lam1 / h) * std::abs(res.u.values[j + 1] - res.u.values[j]);
    res.final_gap = std::max(0.0, h * (primal - dual));
    return res;
}

// ----------------------------------------------------------- TV (iterative)

inline SolverResult solve_tv(const GridSignal& f, double lam1,
                             const SolverConfig& cfg = {}) {
    if (!(lam1 > 0.0) || !std::isfinite(lam1))
        throw std::invalid_argument("solve_tv: weight must be positive");
    cfg.validate();
    const std::size_t n = f.n();
    const double h = f.h();
    const double a1 = lam1 / h;
    const double scale = objective_scale(f);
    double rho = cfg.step_ratio;

    std::vector<double> u = f.values, z, m(n - 1, 0.0);
    detail::diff(u, z);
    std::vector<double> du(n - 1), rhs, c(n - 1), zprev, dtp;
    detail::Tridiag T;
    T.factor(n, rho);

    SolverResult res;
    res.converged = false;
    for (int it = 1; it <= cfg.max_iters; ++it) {
        // u-step: (I + rho D^T D) u = f + rho D^T (z - m)
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = z[j] - m[j];
        detail::diff_t(c, rhs, n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = f.values[i] + rho * rhs[i];
        u = rhs;
        T.solve(u);
        detail::diff(u, du);
        // z-step: shrink toward Du
        zprev = z;
        for (std::size_t j = 0; j < z.size(); ++j)
            z[j] = detail::shrink(du[j] + m[j], a1 / rho);
        for (std::size_t j = 0; j < m.size(); ++j) m[j] += du[j] - z[j];
        res.iterations = it;

        if (it % cfg.check_every == 0 || it == cfg.max_iters) {
            double primal = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = u[i] - f.values[i];
                primal += 0.5 * d * d;
            }
            for (std::size_t j = 0; j + 1 < n; ++j)
                primal += a1 * std::abs(u[j + 1] - u[j]);
            // dual bound from the clipped multiplier
            std::vector<double> p(m.size());
            for (std::size_t j = 0; j < m.size(); ++j) p[j] = rho * m[j];
            detail::clip(p, a1);
            detail::diff_t(p, dtp, n);
            double dualp = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                dualp += dtp[i] * f.values[i] - 0.5 * dtp[i] * dtp[i];
            // dual bound from the mean-corrected residual certificate
            std::vector<double> r(n);
            double mean = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                r[i] = u[i] - f.values[i];
                mean += r[i];
            }
            mean /= static_cast<double>(n);
            for (double& x : r) x -= mean;
            const double dualr =
                detail::dual_from_residual_tv(f.values, r, a1);
            res.final_gap = std::max(0.0, h * (primal - std::max(dualp, dualr)));
            if (res.final_gap <= cfg.tol_gap * scale) {
                res.converged = true;
                break;
            }
            double pr = 0.0, dr = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                const double e = du[j] - z[j];
                pr += e * e;
                const double g = rho * (z[j] - zprev[j]);
                dr += g * g;
            }
            if (detail::rebalance(std::sqrt(pr), std::sqrt(dr), rho, m))
                T.factor(n, rho);
        }
    }
    res.u = GridSignal(std::move(u));
    return res;
}

// ---------------------------------------------------------------------- TV2

inline SolverResult solve_tv2(const GridSignal& f, double lam2,
                              const SolverConfig& cfg = {}) {
    if (!(lam2 > 0.0) || !std::isfinite(lam2))
        throw std::invalid_argument("solve_tv2: weight must be positive");
    cfg.validate();
    const std::size_t n = f.n();
    const double h = f.h();
    const double a2 = lam2 / (h * h);
    const double scale = objective_scale(f);
    double rho = cfg.step_ratio;

    std::vector<double> u = f.values, z, m(n - 1, 0.0);
    detail::diff(u, z);
    std::vector<double> du(n - 1), rhs, c(n - 1), zprev;
    detail::Tridiag T;
    T.factor(n, rho);

    SolverResult res;
    res.converged = false;
    for (int it = 1; it <= cfg.max_iters; ++it) {
        // u-step: (I + rho D^T D) u = f + rho D^T (z - m)
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = z[j] - m[j];
        detail::diff_t(c, rhs, n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = f.values[i] + rho * rhs[i];
        u = rhs;
        T.solve(u);
        detail::diff(u, du);
        // z-step: first-order total variation prox, solved exactly
        zprev = z;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = du[j] + m[j];
        z = taut_string(c, a2 / rho);
        for (std::size_t j = 0; j < m.size(); ++j) m[j] += du[j] - z[j];
        res.iterations = it;

        if (it % cfg.check_every == 0 || it == cfg.max_iters) {
            double primal = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = u[i] - f.values[i];
                primal += 0.5 * d * d;
            }
            for (std::size_t k = 0; k + 2 < n; ++k)
                primal +=
                    a2 * std::abs(u[k + 2] - 2.0 * u[k + 1] + u[k]);
            std::vector<double> r(n);
            for (std::size_t i = 0; i < n; ++i) r[i] = u[i] - f.values[i];
            const std::vector<double> rt = detail::remove_affine(r);
            const double dualr =
                detail::dual_from_residual_tv2(f.values, rt, a2);
            res.final_gap = std::max(0.0, h * (primal - dualr));
            if (res.final_gap <= cfg.tol_gap * scale) {
                res.converged = true;
                break;
            }
            double pr = 0.0, dr = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                const double e = du[j] - z[j];
                pr += e * e;
                const double g = rho * (z[j] - zprev[j]);
                dr += g * g;
            }
            if (detail::rebalance(std::sqrt(pr), std::sqrt(dr), rho, m))
                T.factor(n, rho);
        }
    }
    res.u = GridSignal(std::move(u));
    return res;
}

// ---------------------------------------------------------------------- TGV

inline SolverResult solve_tgv(const GridSignal& f, const LambdaPair& lam,
                              const SolverConfig& cfg = {}) {
    cfg.validate();
    const std::size_t n = f.n();
    const double h = f.h();
    const double a1 = lam.lambda1 / h;
    const double a2 = lam.lambda2 / (h * h);
    const double scale = objective_scale(f);

    // affine snap: if the affine-free part of f lies in the discrete dual
    // ball, the affine projection of f is the exact minimizer
    {
        const std::vector<double> fdev = detail::remove_affine(f.values);
        double run = 0.0, run2 = 0.0, mx1 = 0.0, mx2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            run += fdev[j];
            if (j + 1 < n) mx1 = std::max(mx1, std::abs(run));
            run2 += run;
            if (j + 2 < n) mx2 = std::max(mx2, std::abs(run2));
        }
        if (mx1 <= a1 && mx2 <= a2) {
            SolverResult res;
            std::vector<double> u(n);
            for (std::size_t i = 0; i < n; ++i)
                u[i] = f.values[i] - fdev[i];
            const double slope = (u[1] - u[0]) / h;
            res.u = GridSignal(std::move(u));
            res.w = std::vector<double>(n - 1, slope);
            res.iterations = 0;
            res.final_gap = 0.0;
            res.converged = true;
            return res;
        }
    }

    double rho = cfg.step_ratio;
    std::vector<double> u = f.values, v, y(n - 1, 0.0), m(n - 1, 0.0);
    detail::diff(u, v);
    std::vector<double> du(n - 1), rhs, c(n - 1), yprev, vprev, scratch;
    detail::Tridiag T;
    T.factor(n, rho);

    // best polished primal so far
    std::vector<double> ubest = u, vbest = v;
    double bestP = std::numeric_limits<double>::infinity();

    SolverResult res;
    res.converged = false;

    const auto primal_of = [&](const std::vector<double>& uu,
                               const std::vector<double>& vv) {
        double val = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = uu[i] - f.values[i];
            val += 0.5 * d * d;
        }
        for (std::size_t j = 0; j + 1 < n; ++j)
            val += a1 * std::abs(uu[j + 1] - uu[j] - vv[j]);
        for (std::size_t j = 0; j + 1 < vv.size(); ++j)
            val += a2 * std::abs(vv[j + 1] - vv[j]);
        return val;
    };

    for (int it = 1; it <= cfg.max_iters; ++it) {
        // u-step: min 1/2||u-f||^2 + rho/2||Du - v - y + m||^2
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = v[j] + y[j] - m[j];
        detail::diff_t(c, rhs, n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = f.values[i] + rho * rhs[i];
        u = rhs;
        T.solve(u);
        detail::diff(u, du);
        // v-step: min a2||Dv||_1 + rho/2||Du - v - y + m||^2, taut string
        vprev = v;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = du[j] - y[j] + m[j];
        v = taut_string(c, a2 / rho);
        // y-step: shrinkage
        yprev = y;
        for (std::size_t j = 0; j < y.size(); ++j)
            y[j] = detail::shrink(du[j] - v[j] + m[j], a1 / rho);
        for (std::size_t j = 0; j < m.size(); ++j) m[j] += du[j] - v[j] - y[j];
        res.iterations = it;

        if (it % cfg.check_every == 0 || it == cfg.max_iters) {
            // exact block polish: taut string in u given v, then the dynamic
            // program in the slope field given the polished u
            std::vector<double> A(n, 0.0);
            for (std::size_t i = 1; i < n; ++i) A[i] = A[i - 1] + v[i - 1];
            std::vector<double> g(n);
            for (std::size_t i = 0; i < n; ++i) g[i] = f.values[i] - A[i];
            std::vector<double> upol = taut_string(g, a1);
            for (std::size_t i = 0; i < n; ++i) upol[i] += A[i];
            detail::diff(upol, scratch);
            Tvl1Result inner = tvl1_exact(scratch, a1, a2);
            const double P = primal_of(upol, inner.v);
            if (P < bestP) {
                bestP = P;
                ubest = upol;
                vbest = inner.v;
            }

            // dual bound: residual certificate of the best polished primal
            std::vector<double> r(n);
            for (std::size_t i = 0; i < n; ++i)
                r[i] = ubest[i] - f.values[i];
            const std::vector<double> rt = detail::remove_affine(r);
            const double dualb =
                detail::dual_from_residual_tgv(f.values, rt, a1, a2);

            res.final_gap = std::max(0.0, h * (bestP - dualb));
            if (res.final_gap <= cfg.tol_gap * scale) {
                res.converged = true;
                break;
            }
            double pr = 0.0, dr = 0.0;
            for (std::size_t j = 0; j < y.size(); ++j) {
                const double e = du[j] - v[j] - y[j];
                pr += e * e;
                const double g2 =
                    rho * ((v[j] - vprev[j]) + (y[j] - yprev[j]));
                dr += g2 * g2;
            }
            if (detail::rebalance(std::sqrt(pr), std::sqrt(dr), rho, m))
                T.factor(n, rho);
        }
    }

    res.u = GridSignal(std::move(ubest));
    std::vector<double> w(vbest.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = vbest[j] / h;
    res.w = std::move(w);
    return res;
}

}  // namespace tgv1d
