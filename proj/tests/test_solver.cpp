// Splitting solvers: agreement with the exact taut-string backend, with the
// closed-form minimizers on the built-in data, fixed-point behavior, the
// duality-gap convergence contract, and determinism.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "tgv1d/oracles.hpp"
#include "tgv1d/signal.hpp"
#include "tgv1d/solver.hpp"

using namespace tgv1d;

namespace {

GridSignal random_signal(std::mt19937& rng, std::size_t n, double amp = 1.0) {
    std::uniform_real_distribution<double> U(-amp, amp);
    std::vector<double> v(n);
    for (double& x : v) x = U(rng);
    return GridSignal{v};
}

}  // namespace

TEST_CASE("config validation") {
    SolverConfig bad;
    bad.max_iters = 0;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = SolverConfig{};
    bad.tol_gap = 1.5;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = SolverConfig{};
    bad.step_ratio = 0.0;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    REQUIRE_NOTHROW(SolverConfig{}.validate());
}

TEST_CASE("iterative tv agrees with taut string on random signals") {
    std::mt19937 rng(123u);
    SolverConfig cfg;
    cfg.tol_gap = 1e-13;  // pointwise 1e-8 needs a deep gap
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const GridSignal f = random_signal(rng, 32);
        const double lam1 = 0.002 + 0.004 * static_cast<double>(rep);
        const SolverResult it = solve_tv(f, lam1, cfg);
        const SolverResult ex = solve_tv_exact(f, lam1);
        REQUIRE(it.converged);
        double linf = 0.0;
        for (std::size_t i = 0; i < f.n(); ++i)
            linf = std::max(linf,
                            std::abs(it.u.values[i] - ex.u.values[i]));
        worst = std::max(worst, linf);
    }
    INFO("worst Linf deviation " << worst);
    REQUIRE(worst <= 1e-8);
}

TEST_CASE("tv solve matches the abs closed form") {
    const std::size_t n = 4096;
    const GridSignal f = sample(DataId::AbsData, n);
    const double h = f.h();
    for (double lam1 : {0.01, 0.02, 0.05}) {
        const SolverResult r = solve_tv_exact(f, lam1);
        const GridSignal want = eval_piecewise(oracle_tv1_abs(lam1), n);
        REQUIRE(dist_l2(r.u, want) <= 5.0 * h);
        REQUIRE(r.final_gap >= 0.0);
    }
    // above the dual norm the minimizer is zero
    const SolverResult z = solve_tv_exact(f, 0.13);
    REQUIRE(norm_l2(z.u) <= 1e-8);
}

TEST_CASE("tv2 solve matches the abs shrinkage formula") {
    const std::size_t n = 4096;
    const GridSignal f = sample(DataId::AbsData, n);
    const double h = f.h();
    const SolverResult r = solve_tv2(f, 0.04);
    REQUIRE(r.converged);
    std::vector<double> want(f.values);
    for (double& x : want) x *= 1.0 - 12.0 * 0.04;
    REQUIRE(dist_l2(r.u, GridSignal{want}) <= 5.0 * h);
    // above the order-2 dual norm the minimizer vanishes
    const SolverResult z = solve_tv2(f, 1.0 / 12.0 + 0.01);
    REQUIRE(z.converged);
    REQUIRE(norm_l2(z.u) <= 1e-4);
}

TEST_CASE("tv2 solve matches the ind regime-3 closed form") {
    const std::size_t n = 4096;
    const GridSignal f = sample(DataId::IndData, n);
    const double h = f.h();
    const SolverResult r = solve_tv2(f, 0.05);
    REQUIRE(r.converged);
    std::vector<double> want(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = f.x(i);
        want[i] = (1.5 - 12.0 * 0.05) * (0.5 - std::abs(x));
    }
    REQUIRE(dist_l2(r.u, GridSignal{want}) <= 5.0 * h);
}

TEST_CASE("tgv solve reproduces the three abs regimes") {
    const std::size_t n = 4096;
    const GridSignal f = sample(DataId::AbsData, n);
    const double h = f.h();

    // collapse to first order above the upper region boundary
    const SolverResult a = solve_tgv(f, LambdaPair{0.05, 0.045});
    REQUIRE(a.converged);
    REQUIRE(dist_l2(a.u, solve_tv_exact(f, 0.05).u) <= 5.0 * h);

    // collapse to second order when lam1 >= (3/2) lam2
    const SolverResult b = solve_tgv(f, LambdaPair{0.09, 0.04});
    REQUIRE(b.converged);
    REQUIRE(dist_l2(b.u, solve_tv2(f, 0.04).u) <= 5.0 * h);

    // strictly inside: matches the closed-form piecewise minimizer
    const SolverResult c = solve_tgv(f, LambdaPair{0.05, 0.036});
    REQUIRE(c.converged);
    const GridSignal want =
        eval_piecewise(oracle_tgv_abs(LambdaPair{0.05, 0.036}), n);
    REQUIRE(dist_l2(c.u, want) <= 5.0 * h);
}

TEST_CASE("tgv residual lies in the scaled dual ball") {
    const std::size_t n = 2048;
    const GridSignal f = sample(DataId::AbsData, n);
    const LambdaPair lam{0.05, 0.036};
    const SolverResult r = solve_tgv(f, lam);
    REQUIRE(r.converged);
    const BallCheck ball = in_tgv_ball(sub(r.u, f), lam);
    REQUIRE(ball.margin1 >= -5.0 * f.h());
    REQUIRE(ball.margin2 >= -5.0 * f.h());
}

TEST_CASE("solvers return fixed points unchanged") {
    std::vector<double> zeros(64, 0.0);
    const GridSignal z{zeros};
    REQUIRE(norm_l2(solve_tv(z, 0.05).u) <= 1e-10);
    REQUIRE(norm_l2(solve_tv2(z, 0.05).u) <= 1e-10);
    REQUIRE(norm_l2(solve_tgv(z, LambdaPair{0.05, 0.036}).u) <= 1e-10);

    // an affine signal is its own tgv minimizer (snap path, zero iterations)
    const std::size_t n = 64;
    const double h = 2.0 / static_cast<double>(n);
    std::vector<double> lin(n);
    for (std::size_t i = 0; i < n; ++i)
        lin[i] = 0.3 - 0.8 * (-1.0 + (static_cast<double>(i) + 0.5) * h);
    const GridSignal g{lin};
    const SolverResult r = solve_tgv(g, LambdaPair{0.05, 0.036});
    REQUIRE(r.converged);
    REQUIRE(r.iterations == 0);
    REQUIRE(dist_l2(r.u, g) <= 1e-12);
    REQUIRE(r.w.has_value());
    for (double wj : *r.w) REQUIRE(wj == Catch::Approx(-0.8).margin(1e-9));
}

TEST_CASE("returned slope field reproduces the reported objective") {
    const std::size_t n = 1024;
    const GridSignal f = sample(DataId::AbsData, n);
    const LambdaPair lam{0.05, 0.036};
    const SolverResult r = solve_tgv(f, lam);
    REQUIRE(r.w.has_value());
    const double h = f.h();
    double primal = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = r.u.values[i] - f.values[i];
        primal += 0.5 * h * d * d;
    }
    const std::vector<double>& w = *r.w;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double dj = (r.u.values[j + 1] - r.u.values[j]) / h;
        primal += lam.lambda1 * h * std::abs(dj - w[j]);
    }
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        primal += lam.lambda2 * std::abs(w[j + 1] - w[j]);
    // the joint objective of (u, w) matches objective_tgv(u) to gap accuracy
    const double viaInner = objective_tgv(r.u, f, lam);
    REQUIRE(primal == Catch::Approx(viaInner).margin(1e-7));
}

TEST_CASE("convergence flag honors the gap contract") {
    const GridSignal f = sample(DataId::IndData, 512);
    SolverConfig cfg;
    cfg.tol_gap = 1e-10;
    for (const SolverResult& r :
         {solve_tv(f, 0.03, cfg), solve_tv2(f, 0.02, cfg),
          solve_tgv(f, LambdaPair{0.12, 0.05}, cfg)}) {
        REQUIRE(r.converged);
        REQUIRE(r.final_gap <= cfg.tol_gap * objective_scale(f));
        REQUIRE(r.final_gap >= 0.0);
    }
}

TEST_CASE("iteration cap reports honest non-convergence") {
    const GridSignal f = sample(DataId::AbsData, 512);
    SolverConfig cfg;
    cfg.max_iters = 3;
    cfg.check_every = 1;
    const SolverResult r = solve_tgv(f, LambdaPair{0.05, 0.036}, cfg);
    REQUIRE_FALSE(r.converged);
    REQUIRE(r.iterations == 3);
    REQUIRE(r.final_gap > cfg.tol_gap * objective_scale(f));
}

TEST_CASE("weak duality: dual value never exceeds the primal") {
    std::mt19937 rng(77u);
    const GridSignal f = sample(DataId::AbsData, 256);
    const double lam1 = 0.05;
    const double pstar = objective_tv(solve_tv_exact(f, lam1).u, f, lam1, 1);
    for (int rep = 0; rep < 50; ++rep) {
        // any residual scaled into the order-1 dual ball is dual feasible
        GridSignal r = random_signal(rng, 256);
        double mean = 0.0;
        for (double x : r.values) mean += x;
        mean /= static_cast<double>(r.n());
        for (double& x : r.values) x -= mean;
        const double sup = dual_norm_tv(r, 1).value;
        if (sup > lam1)
            for (double& x : r.values) x *= lam1 / sup;
        REQUIRE(dual_value(f, r) <= pstar + 1e-12);
    }
}

TEST_CASE("solves are deterministic") {
    const GridSignal f = sample(DataId::IndData, 1024);
    const SolverResult r1 = solve_tgv(f, LambdaPair{0.12, 0.05});
    const SolverResult r2 = solve_tgv(f, LambdaPair{0.12, 0.05});
    REQUIRE(r1.iterations == r2.iterations);
    REQUIRE(r1.final_gap == r2.final_gap);
    for (std::size_t i = 0; i < f.n(); ++i)
        REQUIRE(r1.u.values[i] == r2.u.values[i]);
}

TEST_CASE("weight validation") {
    const GridSignal f = sample(DataId::AbsData, 64);
    REQUIRE_THROWS_AS(solve_tv(f, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(solve_tv2(f, -1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(solve_tv_exact(f, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(solve_tgv(f, LambdaPair{0.05, 0.0}),
                      std::invalid_argument);
}
