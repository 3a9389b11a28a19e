// tvl1.hpp
//
// Exact solver for the 1D "robust fit with flat slope" problem
//
//     min_v  a1 * sum_j |d_j - v_j|  +  a0 * sum_j |v_{j+1} - v_j|,
//
// the inner minimization defining the second-order total generalized
// variation of a discrete signal (d = forward differences, v = auxiliary
// slope field).  Solved by dynamic programming over convex piecewise-linear
// value functions: the cost-to-go V_j is convex PL in v_j; moving one index
// right clips its slopes to [-a0, a0] (infimal convolution with a0|.|) and
// adds the kink a1|d_j - .|.  Kinks are kept in an ordered map with the two
// extreme slopes tracked separately; backtracking clamps against the
// recorded clip intervals.  Exact up to floating point.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace tgv1d {

struct Tvl1Result {
    std::vector<double> v;  // optimal slope field
    double value = 0.0;     // optimal objective value
};

inline Tvl1Result tvl1_exact(const std::vector<double>& d, double a1,
                             double a0) {
    if (!(a1 > 0.0) || !(a0 > 0.0))
        throw std::invalid_argument("tvl1_exact: weights must be positive");
    const std::size_t m = d.size();
    Tvl1Result out;
    if (m == 0) return out;

    const double big = std::numeric_limits<double>::infinity();
    std::multimap<double, double> kinks;  // position -> slope increment (> 0)
    double s_left = 0.0, s_right = 0.0;   // slopes at -inf / +inf
    std::vector<double> lo(m, -big), hi(m, big);  // clip intervals per step

    // V_1(v) = a1 |d_0 - v|
    kinks.emplace(d[0], 2.0 * a1);
    s_left = -a1;
    s_right = a1;

    for (std::size_t j = 1; j < m; ++j) {
        // clip slopes of V_j to [-a0, a0]; record where the clamp bites
        if (s_left < -a0) {
            double cur = s_left;
            while (!kinks.empty()) {
                auto it = kinks.begin();
                if (cur + it->second <= -a0) {
                    cur += it->second;
                    kinks.erase(it);
                } else {
                    lo[j - 1] = it->first;
                    const double rest = cur + it->second + a0;
                    kinks.erase(it);
                    kinks.emplace(lo[j - 1], rest);
                    break;
                }
            }
            s_left = -a0;
        }
        if (s_right > a0) {
            double cur = s_right;
            while (!kinks.empty()) {
                auto it = std::prev(kinks.end());
                if (cur - it->second >= a0) {
                    cur -= it->second;
                    kinks.erase(it);
                } else {
                    hi[j - 1] = it->first;
                    const double rest = a0 - (cur - it->second);
                    kinks.erase(it);
                    kinks.emplace(hi[j - 1], rest);
                    break;
                }
            }
            s_right = a0;
        }
        // add the fidelity kink a1 |d_j - v|
        kinks.emplace(d[j], 2.0 * a1);
        s_left -= a1;
        s_right += a1;
    }

    // argmin of the final value function: walk until the slope turns >= 0
    double vstar = d[m - 1];
    {
        double cur = s_left;
        for (const auto& [pos, inc] : kinks) {
            if (cur + inc >= 0.0) { vstar = pos; break; }
            cur += inc;
        }
    }

    // backtrack through the clip intervals
    out.v.assign(m, 0.0);
    out.v[m - 1] = vstar;
    for (std::size_t j = m - 1; j-- > 0;) {
        double v = out.v[j + 1];
        if (v < lo[j]) v = lo[j];
        if (v > hi[j]) v = hi[j];
        out.v[j] = v;
    }

    // evaluate the objective at the recovered path
    double val = 0.0;
    for (std::size_t j = 0; j < m; ++j) val += a1 * std::abs(d[j] - out.v[j]);
    for (std::size_t j = 0; j + 1 < m; ++j)
        val += a0 * std::abs(out.v[j + 1] - out.v[j]);
    out.value = val;
    return out;
}

}  // namespace tgv1d
