// taut_string.hpp
//
// Exact solver for the discrete 1D total variation problem
//
//     min_u  1/2 sum_i (u_i - g_i)^2  +  mu * sum_j |u_{j+1} - u_j|.
//
// The minimizer equals the increment sequence of the taut string through the
// tube of radius mu around the running sums G_k = sum_{i<k} g_i, pinned at
// (0, 0) and (n, G_n).  The string is built left to right: from the last
// pinned knot, track the smallest slope meeting the tube ceiling and the
// largest slope meeting the floor; when they cross, the string must bend at
// the recorded extremal contact and the walk restarts there.  Exact up to
// floating point, no iteration tolerance involved.

#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tgv1d {

inline std::vector<double> taut_string(const std::vector<double>& g,
                                       double mu) {
    if (!(mu >= 0.0)) throw std::invalid_argument("taut_string: mu < 0");
    const std::size_t n = g.size();
    if (n == 0) return {};
    if (mu == 0.0 || n == 1) return g;

    std::vector<double> Y(n + 1, 0.0);  // running sums, Y[k] = sum_{i<k} g_i
    for (std::size_t k = 0; k < n; ++k) Y[k + 1] = Y[k] + g[k];

    std::vector<double> x(n, 0.0);
    std::size_t a = 0;    // index of the last pinned knot
    double va = 0.0;      // string value there

    while (a < n) {
        double cmin = std::numeric_limits<double>::infinity();   // least ceiling slope
        double fmax = -std::numeric_limits<double>::infinity();  // greatest floor slope
        std::size_t i_ceil = a, i_floor = a;
        double v_ceil = 0.0, v_floor = 0.0;
        bool bent = false;

        for (std::size_t k = a + 1; k <= n; ++k) {
            const double dk = static_cast<double>(k - a);
            const double hi = (k == n) ? Y[n] : Y[k] + mu;
            const double lo = (k == n) ? Y[n] : Y[k] - mu;
            const double ceil_s = (hi - va) / dk;
            const double floor_s = (lo - va) / dk;

            if (floor_s > cmin) {
                // floor rose above the lowest ceiling: bend at the ceiling contact
                for (std::size_t j = a; j < i_ceil; ++j) x[j] = cmin;
                a = i_ceil;
                va = v_ceil;
                bent = true;
                break;
            }
            if (ceil_s < fmax) {
                // ceiling dipped below the highest floor: bend at the floor contact
                for (std::size_t j = a; j < i_floor; ++j) x[j] = fmax;
                a = i_floor;
                va = v_floor;
                bent = true;
                break;
            }
            if (ceil_s < cmin) { cmin = ceil_s; i_ceil = k; v_ceil = hi; }
            if (floor_s > fmax) { fmax = floor_s; i_floor = k; v_floor = lo; }
        }

        if (!bent) {
            // straight run to the right endpoint is feasible
            const double s = (Y[n] - va) / static_cast<double>(n - a);
            for (std::size_t j = a; j < n; ++j) x[j] = s;
            a = n;
        }
    }
    return x;
}

}  // namespace tgv1d
