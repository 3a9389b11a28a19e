// certify.hpp
//
// Optimality certification and (lam1, lam2)-plane classification.
//
// A candidate u certifies as the minimizer of 1/2||u-f||^2 + R(u) when the
// residual r = u - f lies in the dual ball of R (sup bounds on its running
// integrals sigma^1, sigma^2, plus the vanishing-moment conditions) and the
// pairing identity R(u) = -<r, u> holds.  Both conditions are evaluated on
// the grid with an explicit slack: sup bounds get 5h + 1e-6 * lam of
// discretization allowance, the identity is compared against
// tol * (1/2||f||^2 + 1).
//
// Structural verification decomposes a piecewise-affine candidate into
// events: jumps (up-jumps demand sigma1 = +lam1 at the jump, down-jumps
// -lam1), bends (a slope increase demands sigma2 = -lam2, a decrease +lam2;
// a bend flanking a data-matching stretch may instead be certified by
// |sigma1| = lam1 there), and maximal data-match intervals (either
// |sigma1| = lam1 throughout, or sigma1 = 0 with |sigma2| = lam2
// throughout).
//
// The region classifier compares weights against the collapse thresholds:
// the zero signal wins when the data's own running-integral sups sit below
// (lam1, lam2); the TV minimizer absorbs TGV when lam2 exceeds the sup of
// sigma2 of the TV residual; the TV2 minimizer absorbs TGV when lam1
// exceeds the sup of sigma1 of the TV2 residual; otherwise the TGV
// minimizer is strictly new.  Near-threshold cells within tolerance are
// reported as Boundary.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "tgv1d/functionals.hpp"
#include "tgv1d/piecewise.hpp"
#include "tgv1d/signal.hpp"
#include "tgv1d/solver.hpp"

namespace tgv1d {

// ----------------------------------------------------------------- types

enum class ProblemKind { TV1, TV2, TGV };

inline const char* problem_name(ProblemKind p) {
    switch (p) {
        case ProblemKind::TV1: return "tv";
        case ProblemKind::TV2: return "tv2";
        case ProblemKind::TGV: return "tgv";
    }
    return "?";
}

enum class EventKind { Jump, Bend, DataMatch };

inline const char* event_name(EventKind k) {
    switch (k) {
        case EventKind::Jump: return "jump";
        case EventKind::Bend: return "bend";
        case EventKind::DataMatch: return "match";
    }
    return "?";
}

struct StructuralEvent {
    EventKind kind = EventKind::Jump;
    double location = 0.0;     // event point; interval start for DataMatch
    double interval_hi = 0.0;  // interval end (DataMatch only)
    int sign = 0;              // +1 up-jump / slope increase, -1 otherwise
    double sigma1 = 0.0;       // measured first running integral at the event
    double sigma2 = 0.0;       // measured second running integral
    bool satisfied = false;
    double margin = 0.0;       // smallest deviation from a certifying value
};

struct Certificate {
    ProblemKind problem = ProblemKind::TGV;
    double sigma1_sup = 0.0;
    double sigma2_sup = 0.0;
    bool feasible = false;
    bool subspace_ok = false;
    double identity_residual = 0.0;  // |R(u) + h sum (u-f) u|
    double identity_tol = 0.0;       // threshold the residual was held to
    double slack = 0.0;              // sup-bound allowance used
    std::vector<StructuralEvent> structural_events;
    bool pass = false;
    std::string reasons;
};

enum class RegionKind { Zero, EqualsTV1, EqualsTV2, StrictTGV, Boundary };

inline const char* region_name(RegionKind k) {
    switch (k) {
        case RegionKind::Zero: return "Zero";
        case RegionKind::EqualsTV1: return "EqualsTV1";
        case RegionKind::EqualsTV2: return "EqualsTV2";
        case RegionKind::StrictTGV: return "StrictTGV";
        case RegionKind::Boundary: return "Boundary";
    }
    return "?";
}

struct RegionVerdict {
    RegionKind kind = RegionKind::Boundary;
    // For Zero: distances of (lam1, lam2) above the data's sigma sups.
    // Otherwise: margin1 = lam2 - sup|sigma2[tv residual]| (TV collapse),
    //            margin2 = lam1 - sup|sigma1[tv2 residual]| (TV2 collapse).
    double margin1 = 0.0;
    double margin2 = 0.0;
};

// ------------------------------------------------------- event judgement

namespace detail {

// nearest edge index for a point location
inline std::size_t nearest_edge(double x, std::size_t n, double h) {
    double j = std::round((x + 1.0) / h) - 1.0;
    j = std::max(0.0, std::min(j, static_cast<double>(n) - 2.0));
    return static_cast<std::size_t>(j);
}

inline void judge_jump(StructuralEvent& e, const LambdaPair& lam,
                       double slk) {
    e.margin = std::abs(e.sigma1 - static_cast<double>(e.sign) * lam.lambda1);
    e.satisfied = e.margin <= slk;
}

inline void judge_bend(StructuralEvent& e, const LambdaPair& lam,
                       double slk) {
    // slope increase pairs with a -lam2 extremum of sigma2; a bend attached
    // to a |sigma1| = lam1 stretch is certified through sigma1 instead
    const double dev2 =
        std::abs(e.sigma2 + static_cast<double>(e.sign) * lam.lambda2);
    const double dev1 = std::abs(std::abs(e.sigma1) - lam.lambda1);
    e.margin = std::min(dev2, dev1);
    e.satisfied = e.margin <= slk;
}

}  // namespace detail

// ---------------------------------------------------------- optimality

inline Certificate check_optimality(const GridSignal& u, const GridSignal& f,
                                    ProblemKind problem, const LambdaPair& lam,
                                    double tol) {
    if (u.n() != f.n())
        throw std::invalid_argument("check_optimality: size mismatch");
    if (!(tol > 0.0))
        throw std::invalid_argument("check_optimality: tolerance must be positive");
    lam.validate();

    const std::size_t n = u.n();
    const double h = u.h();
    const GridSignal r = sub(u, f);
    const SigmaTransforms t = sigma_transforms(r);

    Certificate cert;
    cert.problem = problem;
    cert.sigma1_sup = t.sup1;
    cert.sigma2_sup = t.sup2;
    cert.slack = 5.0 * h +
                 1e-6 * std::max(lam.lambda1, lam.lambda2);

    std::ostringstream why;

    // dual-ball feasibility of the residual, per problem
    const int order = (problem == ProblemKind::TV1) ? 1 : 2;
    cert.subspace_ok = in_subspace(r, order);
    bool sup_ok = true;
    if (problem != ProblemKind::TV2 && t.sup1 > lam.lambda1 + cert.slack) {
        sup_ok = false;
        why << "sigma1 sup " << t.sup1 << " exceeds " << lam.lambda1 << "; ";
    }
    if (problem != ProblemKind::TV1 && t.sup2 > lam.lambda2 + cert.slack) {
        sup_ok = false;
        why << "sigma2 sup " << t.sup2 << " exceeds " << lam.lambda2 << "; ";
    }
    if (!cert.subspace_ok) why << "residual moments do not vanish; ";
    cert.feasible = sup_ok && cert.subspace_ok;

    // pairing identity R(u) = -h sum (u - f) u
    double reg = 0.0;
    switch (problem) {
        case ProblemKind::TV1:
            reg = lam.lambda1 * tv_seminorm(u, 1);
            break;
        case ProblemKind::TV2:
            reg = lam.lambda2 * tv_seminorm(u, 2);
            break;
        case ProblemKind::TGV:
            reg = tgv_value(u, lam);
            break;
    }
    double pair = 0.0;
    for (std::size_t i = 0; i < n; ++i) pair += r.values[i] * u.values[i];
    pair *= h;
    cert.identity_residual = std::abs(reg + pair);
    cert.identity_tol = tol * objective_scale(f);
    if (cert.identity_residual > cert.identity_tol)
        why << "pairing identity off by " << cert.identity_residual << "; ";

    cert.pass = cert.feasible && cert.identity_residual <= cert.identity_tol;
    cert.reasons = cert.pass ? "ok" : why.str();
    return cert;
}

// ------------------------------------------- structure of exact candidates

inline std::vector<StructuralEvent> check_structure(
    const PiecewiseAffineSignal& p, const GridSignal& f, const LambdaPair& lam,
    double tol) {
    lam.validate();
    if (!(tol > 0.0))
        throw std::invalid_argument("check_structure: tolerance must be positive");
    const std::size_t n = f.n();
    const double h = f.h();
    const double slk = tol + 5.0 * h;

    std::vector<double> rv(n);
    for (std::size_t i = 0; i < n; ++i)
        rv[i] = p.value(f.x(i)) - f.values[i];
    const SigmaTransforms t = sigma_transforms(GridSignal(rv));

    std::vector<StructuralEvent> events;

    // point events at the interior breakpoints of p
    const std::size_t m = p.breakpoints.size();
    for (std::size_t k = 1; k + 1 < m; ++k) {
        const double b = p.breakpoints[k];
        const double jump = p.right_values[k - 1] - p.left_values[k - 1];
        const double dslope = p.slopes[k] - p.slopes[k - 1];
        const std::size_t j = detail::nearest_edge(b, n, h);
        if (std::abs(jump) > 1e-9) {
            StructuralEvent e;
            e.kind = EventKind::Jump;
            e.location = b;
            e.sign = (jump > 0.0) ? +1 : -1;
            e.sigma1 = t.sigma1[j];
            e.sigma2 = t.sigma2[j];
            detail::judge_jump(e, lam, slk);
            events.push_back(e);
        } else if (std::abs(dslope) > 1e-9) {
            StructuralEvent e;
            e.kind = EventKind::Bend;
            e.location = b;
            e.sign = (dslope > 0.0) ? +1 : -1;
            e.sigma1 = t.sigma1[j];
            e.sigma2 = t.sigma2[j];
            detail::judge_bend(e, lam, slk);
            events.push_back(e);
        }
    }

    // maximal data-match runs (at least 3 cells)
    const double match_tol = 1e-9 * (1.0 + norm_linf(f));
    std::size_t i = 0;
    while (i < n) {
        if (std::abs(rv[i]) > match_tol) {
            ++i;
            continue;
        }
        std::size_t lo = i;
        while (i < n && std::abs(rv[i]) <= match_tol) ++i;
        const std::size_t hi = i;  // one past the run
        if (hi - lo < 3) continue;
        StructuralEvent e;
        e.kind = EventKind::DataMatch;
        e.location = f.x(lo) - 0.5 * h;
        e.interval_hi = f.x(hi - 1) + 0.5 * h;
        // deviations over the edges strictly inside the run
        double devA = 0.0;   // |sigma1| = lam1 throughout
        double devB1 = 0.0;  // sigma1 = 0 throughout
        double devB2 = 0.0;  // |sigma2| = lam2 throughout
        double s1ref = 0.0, s2ref = 0.0;
        bool any = false;
        for (std::size_t j = lo; j + 1 < hi; ++j) {
            if (j + 1 >= n) break;
            devA = std::max(devA, std::abs(std::abs(t.sigma1[j]) - lam.lambda1));
            devB1 = std::max(devB1, std::abs(t.sigma1[j]));
            devB2 = std::max(devB2,
                             std::abs(std::abs(t.sigma2[j]) - lam.lambda2));
            s1ref = t.sigma1[j];
            s2ref = t.sigma2[j];
            any = true;
        }
        if (!any) continue;
        const double devB = std::max(devB1, devB2);
        e.sigma1 = s1ref;
        e.sigma2 = s2ref;
        e.margin = std::min(devA, devB);
        e.satisfied = e.margin <= slk;
        e.sign = (devA <= devB) ? (s1ref >= 0.0 ? +1 : -1)
                                : (s2ref >= 0.0 ? +1 : -1);
        events.push_back(e);
    }
    return events;
}

inline bool all_satisfied(const std::vector<StructuralEvent>& events) {
    return std::all_of(events.begin(), events.end(),
                       [](const StructuralEvent& e) { return e.satisfied; });
}

// --------------------------------------- structure of grid-level solutions

// Extract jump/bend/match events from a converged grid solution by
// thresholding its first and second differences at ten times their medians,
// then judge each event against the sigma transforms of the residual.
inline std::vector<StructuralEvent> extract_grid_events(
    const GridSignal& u, const GridSignal& f, const LambdaPair& lam,
    double tol) {
    if (u.n() != f.n())
        throw std::invalid_argument("extract_grid_events: size mismatch");
    const std::size_t n = u.n();
    const double h = u.h();
    const double slk = tol + 5.0 * h;
    const GridSignal r = sub(u, f);
    const SigmaTransforms t = sigma_transforms(r);

    std::vector<double> du(n - 1), d2(n - 2);
    for (std::size_t j = 0; j + 1 < n; ++j)
        du[j] = u.values[j + 1] - u.values[j];
    for (std::size_t i = 0; i + 2 < n; ++i)
        d2[i] = u.values[i + 2] - 2.0 * u.values[i + 1] + u.values[i];

    const auto median_abs = [](std::vector<double> v) {
        for (double& x : v) x = std::abs(x);
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        return v[v.size() / 2];
    };
    const double thr_jump = std::max(10.0 * median_abs(du), 1e-9);
    const double thr_bend = std::max(10.0 * median_abs(d2), 1e-9);

    std::vector<StructuralEvent> events;

    // jump runs on |du|, merged within 3 cells
    std::vector<bool> is_jump(n - 1, false);
    for (std::size_t j = 0; j + 1 < n; ++j)
        is_jump[j] = std::abs(du[j]) > thr_jump;
    std::size_t j = 0;
    while (j + 1 < n) {
        if (!is_jump[j]) {
            ++j;
            continue;
        }
        std::size_t lo = j, hi = j, gap = 0;
        std::size_t k = j + 1;
        while (k + 1 < n && gap <= 3) {
            if (is_jump[k]) {
                hi = k;
                gap = 0;
            } else {
                ++gap;
            }
            ++k;
        }
        std::size_t best = lo;
        for (std::size_t q = lo; q <= hi; ++q)
            if (std::abs(du[q]) > std::abs(du[best])) best = q;
        StructuralEvent e;
        e.kind = EventKind::Jump;
        e.location = u.edge(best);
        e.sign = (du[best] > 0.0) ? +1 : -1;
        e.sigma1 = t.sigma1[best];
        e.sigma2 = t.sigma2[best];
        detail::judge_jump(e, lam, slk);
        events.push_back(e);
        j = hi + 1 + 3;
    }

    // bend runs on |d2|, skipping cells that belong to a jump
    std::vector<bool> is_bend(n - 2, false);
    for (std::size_t i = 0; i + 2 < n; ++i)
        is_bend[i] = std::abs(d2[i]) > thr_bend && !is_jump[i] &&
                     !is_jump[i + 1];
    std::size_t i = 0;
    while (i + 2 < n) {
        if (!is_bend[i]) {
            ++i;
            continue;
        }
        std::size_t lo = i, hi = i, gap = 0;
        std::size_t k = i + 1;
        while (k + 2 < n && gap <= 3) {
            if (is_bend[k]) {
                hi = k;
                gap = 0;
            } else {
                ++gap;
            }
            ++k;
        }
        std::size_t best = lo;
        for (std::size_t q = lo; q <= hi; ++q)
            if (std::abs(d2[q]) > std::abs(d2[best])) best = q;
        StructuralEvent e;
        e.kind = EventKind::Bend;
        e.location = u.x(best + 1);
        e.sign = (d2[best] > 0.0) ? +1 : -1;
        e.sigma1 = t.sigma1[best];
        e.sigma2 = t.sigma2[best + 1];
        detail::judge_bend(e, lam, slk);
        events.push_back(e);
        i = hi + 1 + 3;
    }
    return events;
}

// -------------------------------------------------------- classification

inline RegionVerdict classify_region(DataId data, const LambdaPair& lam,
                                     std::size_t n = 1024, double tol = -1.0,
                                     const SolverConfig& cfg = {}) {
    lam.validate();
    const GridSignal f = sample(data, n);
    const double h = f.h();
    if (tol <= 0.0) tol = 0.5 * h + 1e-6;

    RegionVerdict v;
    const SigmaTransforms tf = sigma_transforms(f);
    const double mz1 = lam.lambda1 - tf.sup1;
    const double mz2 = lam.lambda2 - tf.sup2;
    if (mz1 > -tol && mz2 > -tol) {
        if (mz1 > tol && mz2 > tol) {
            v.kind = RegionKind::Zero;
            v.margin1 = mz1;
            v.margin2 = mz2;
            return v;
        }
        // a weight sits on the zero-region rim
        v.kind = RegionKind::Boundary;
        v.margin1 = mz1;
        v.margin2 = mz2;
        return v;
    }

    const GridSignal v1 = solve_tv_exact(f, lam.lambda1).u;
    const SigmaTransforms t1 = sigma_transforms(sub(v1, f));
    const double m1 = lam.lambda2 - t1.sup2;

    const GridSignal v2 = solve_tv2(f, lam.lambda2, cfg).u;
    const SigmaTransforms t2 = sigma_transforms(sub(v2, f));
    const double m2 = lam.lambda1 - t2.sup1;

    v.margin1 = m1;
    v.margin2 = m2;
    if (m1 > tol && m2 > tol)
        v.kind = (m1 >= m2) ? RegionKind::EqualsTV1 : RegionKind::EqualsTV2;
    else if (m1 > tol)
        v.kind = RegionKind::EqualsTV1;
    else if (m2 > tol)
        v.kind = RegionKind::EqualsTV2;
    else if (m1 < -tol && m2 < -tol)
        v.kind = RegionKind::StrictTGV;
    else
        v.kind = RegionKind::Boundary;
    return v;
}

// brute-force classification by direct solves and L2 comparison
inline RegionKind brute_classify(DataId data, const LambdaPair& lam,
                                 std::size_t n, const SolverConfig& cfg = {}) {
    const GridSignal f = sample(data, n);
    const double h = f.h();
    const SolverResult g = solve_tgv(f, lam, cfg);
    if (norm_l2(g.u) <= 1e-6 * (1.0 + norm_linf(f))) return RegionKind::Zero;
    const double thr = 10.0 * h;
    const double d1 = dist_l2(g.u, solve_tv_exact(f, lam.lambda1).u);
    const double d2 = dist_l2(g.u, solve_tv2(f, lam.lambda2, cfg).u);
    if (d1 <= thr && d2 <= thr)
        return (d1 <= d2) ? RegionKind::EqualsTV1 : RegionKind::EqualsTV2;
    if (d1 <= thr) return RegionKind::EqualsTV1;
    if (d2 <= thr) return RegionKind::EqualsTV2;
    return RegionKind::StrictTGV;
}

// ----------------------------------------------------------- region maps

struct RegionMapConfig {
    std::size_t n = 1024;        // grid for the threshold classifier
    std::size_t n_brute = 1024;  // grid for the brute-force cross-check
    double tol = -1.0;           // boundary tolerance; <=0 means h/2 + 1e-6
    SolverConfig solver{};
    int threads = 0;             // 0: TGV1D_THREADS env var, else 1
    bool with_brute = true;
};

struct RegionCell {
    RegionVerdict verdict{};
    RegionKind brute = RegionKind::Boundary;
    bool brute_done = false;
    bool failed = false;
    std::string error;
};

struct RegionMapResult {
    std::vector<double> lam1;
    std::vector<double> lam2;
    std::vector<RegionCell> cells;  // index i1 * lam2.size() + i2

    const RegionCell& at(std::size_t i1, std::size_t i2) const {
        return cells.at(i1 * lam2.size() + i2);
    }
};

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TGV1D_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

inline RegionMapResult region_map(DataId data,
                                  const std::vector<double>& lam1_grid,
                                  const std::vector<double>& lam2_grid,
                                  const RegionMapConfig& cfg = {}) {
    if (lam1_grid.empty() || lam2_grid.empty())
        throw std::invalid_argument("region_map: empty weight grid");
    for (double l : lam1_grid)
        if (!(l > 0.0)) throw std::invalid_argument("region_map: weights must be positive");
    for (double l : lam2_grid)
        if (!(l > 0.0)) throw std::invalid_argument("region_map: weights must be positive");

    RegionMapResult res;
    res.lam1 = lam1_grid;
    res.lam2 = lam2_grid;
    res.cells.resize(lam1_grid.size() * lam2_grid.size());

    const int nthreads = resolve_threads(cfg.threads);
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= res.cells.size()) break;
            const std::size_t i1 = idx / lam2_grid.size();
            const std::size_t i2 = idx % lam2_grid.size();
            const LambdaPair lam(lam1_grid[i1], lam2_grid[i2]);
            RegionCell& cell = res.cells[idx];
            try {
                cell.verdict =
                    classify_region(data, lam, cfg.n, cfg.tol, cfg.solver);
                if (cfg.with_brute) {
                    cell.brute =
                        brute_classify(data, lam, cfg.n_brute, cfg.solver);
                    cell.brute_done = true;
                }
            } catch (const std::exception& ex) {
                cell.failed = true;
                cell.error = ex.what();
            }
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return res;
}

}  // namespace tgv1d
