// Objective values, the exact inner slope-field program behind the TGV
// value, the taut-string and TV-L1 backends against brute force, and the
// bracketing root finder.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "tgv1d/functionals.hpp"
#include "tgv1d/rootfind.hpp"
#include "tgv1d/signal.hpp"
#include "tgv1d/taut_string.hpp"
#include "tgv1d/tvl1.hpp"

using namespace tgv1d;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n,
                               double amp = 1.0) {
    std::uniform_real_distribution<double> U(-amp, amp);
    std::vector<double> v(n);
    for (double& x : v) x = U(rng);
    return v;
}

// 1/2 sum (v-d)^2-style brute force over a value grid for small TV problems
double brute_tv_objective(const std::vector<double>& v,
                          const std::vector<double>& g, double mu) {
    double val = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = v[i] - g[i];
        val += 0.5 * d * d;
    }
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        val += mu * std::abs(v[i + 1] - v[i]);
    return val;
}

double brute_tvl1_objective(const std::vector<double>& v,
                            const std::vector<double>& d, double a1,
                            double a2) {
    double val = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        val += a1 * std::abs(v[i] - d[i]);
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        val += a2 * std::abs(v[i + 1] - v[i]);
    return val;
}

}  // namespace

TEST_CASE("fidelity term of the objective") {
    const GridSignal f = sample(DataId::AbsData, 256);
    // u = f + 1: fidelity = 1/2 * integral of 1 = 1, tv unchanged vs f
    std::vector<double> shifted(f.values);
    for (double& x : shifted) x += 1.0;
    const GridSignal u{shifted};
    const double obj = objective_tv(u, f, 0.05, 1);
    REQUIRE(obj == Catch::Approx(1.0 + 0.05 * tv_seminorm(u, 1)).epsilon(1e-12));
}

TEST_CASE("half data-norm objective at u = 0") {
    const GridSignal f = sample(DataId::AbsData, 4096);
    std::vector<double> z(f.n(), 0.0);
    // 1/2 int (|x|-1/2)^2 = 1/2 * 1/6 = 1/12
    REQUIRE(objective_tv(GridSignal{z}, f, 0.05, 1) ==
            Catch::Approx(1.0 / 12.0 + 0.0).margin(1e-6));
}

TEST_CASE("objective scale is half squared norm plus one") {
    const GridSignal f = sample(DataId::IndData, 1024);
    REQUIRE(objective_scale(f) ==
            Catch::Approx(0.5 * norm_l2_sq(f) + 1.0).epsilon(1e-14));
}

TEST_CASE("tgv value vanishes on constants and affines") {
    std::vector<double> c(64, 0.7);
    REQUIRE(tgv_value(GridSignal{c}, LambdaPair{0.05, 0.036}) ==
            Catch::Approx(0.0).margin(1e-12));
    const std::size_t n = 64;
    const double h = 2.0 / static_cast<double>(n);
    std::vector<double> lin(n);
    for (std::size_t i = 0; i < n; ++i)
        lin[i] = 3.0 * (-1.0 + (static_cast<double>(i) + 0.5) * h) - 1.0;
    REQUIRE(tgv_value(GridSignal{lin}, LambdaPair{0.05, 0.036}) ==
            Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("tgv value obeys both collapse bounds") {
    const GridSignal u = sample(DataId::AbsData, 4096);
    const LambdaPair lam{0.05, 0.036};
    const double v = tgv_value(u, lam);
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 0.05 * tv_seminorm(u, 1) + 1e-9);
    REQUIRE(v <= 0.036 * tv_seminorm(u, 2) + 1e-9);
}

TEST_CASE("tgv inner program beats any candidate slope field") {
    std::mt19937 rng(17u);
    const std::size_t n = 48;
    const GridSignal u{random_vec(rng, n)};
    const LambdaPair lam{0.07, 0.03};
    const double best = tgv_value(u, lam);
    const double h = u.h();
    const double a1 = lam.lambda1 / h;
    const double a2 = lam.lambda2 / (h * h);
    std::vector<double> d(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j)
        d[j] = u.values[j + 1] - u.values[j];
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> w = random_vec(rng, n - 1, 0.2);
        // candidates near the difference field as well
        if (rep % 2 == 0)
            for (std::size_t j = 0; j < w.size(); ++j) w[j] += d[j];
        REQUIRE(h * brute_tvl1_objective(w, d, a1, a2) >= best - 1e-9);
    }
}

TEST_CASE("taut string solves small problems to brute-force accuracy") {
    std::mt19937 rng(5u);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 6;
        const std::vector<double> g = random_vec(rng, n);
        const double mu = 0.2;
        const std::vector<double> v = taut_string(g, mu);
        const double val = brute_tv_objective(v, g, mu);
        // coordinate-descent polish cannot improve an exact solution
        std::vector<double> w = v;
        for (int sweep = 0; sweep < 200; ++sweep) {
            for (std::size_t i = 0; i < n; ++i) {
                double lo = w[i] - 0.05, hi = w[i] + 0.05;
                for (int t = 0; t < 40; ++t) {
                    const double m1 = (2.0 * lo + hi) / 3.0;
                    const double m2 = (lo + 2.0 * hi) / 3.0;
                    std::vector<double> wa = w, wb = w;
                    wa[i] = m1;
                    wb[i] = m2;
                    if (brute_tv_objective(wa, g, mu) <
                        brute_tv_objective(wb, g, mu))
                        hi = m2;
                    else
                        lo = m1;
                }
                w[i] = 0.5 * (lo + hi);
            }
        }
        REQUIRE(val <= brute_tv_objective(w, g, mu) + 1e-8);
    }
}

TEST_CASE("taut string is the identity below the breaking weight") {
    // monotone data stay monotone; tiny weight reproduces data shape
    std::vector<double> g{0.0, 1.0, 2.0, 3.0, 4.0};
    const std::vector<double> v = taut_string(g, 1e-12);
    for (std::size_t i = 0; i < g.size(); ++i)
        REQUIRE(v[i] == Catch::Approx(g[i]).margin(1e-9));
    // huge weight flattens to the mean
    const std::vector<double> flat = taut_string(g, 1e6);
    for (std::size_t i = 0; i < g.size(); ++i)
        REQUIRE(flat[i] == Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("tv-l1 program matches brute force on small instances") {
    std::mt19937 rng(9u);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 7;
        const std::vector<double> d = random_vec(rng, n);
        const double a1 = 1.0, a2 = 0.8;
        const Tvl1Result r = tvl1_exact(d, a1, a2);
        REQUIRE(r.value ==
                Catch::Approx(brute_tvl1_objective(r.v, d, a1, a2))
                    .margin(1e-10));
        // optimal value never exceeds candidates built from medians/data
        std::vector<double> cand(n, 0.0);
        REQUIRE(r.value <= brute_tvl1_objective(cand, d, a1, a2) + 1e-12);
        REQUIRE(r.value <= brute_tvl1_objective(d, d, a1, a2) + 1e-12);
        for (int k = 0; k < 100; ++k) {
            const std::vector<double> w = random_vec(rng, n, 1.5);
            REQUIRE(r.value <= brute_tvl1_objective(w, d, a1, a2) + 1e-12);
        }
    }
}

TEST_CASE("root finder brackets and refines") {
    const auto fcube = [](double x) { return x * x * x - 2.0; };
    const double r = find_root(fcube, 0.0, 2.0, 1e-14);
    REQUIRE(r == Catch::Approx(std::cbrt(2.0)).epsilon(1e-12));
    REQUIRE_THROWS_AS(find_root(fcube, 3.0, 4.0, 1e-14), std::domain_error);
}
