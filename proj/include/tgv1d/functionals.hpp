// functionals.hpp
//
// Regularization functionals on grid signals and the dual-side quantities
// used by the optimality certificates:
//
//   objective_tv   1/2 h||u-f||^2 + lam * TV^i(u),  i = 1, 2
//   tgv_value      min over slope fields w of
//                    lam1 * sum h |(Du)_j - w_j| + lam2 * sum |w_{j+1}-w_j|
//   dual_norm_tv   sup-norm of sigma^i of a residual on the subspace where
//                  the order-i dual norm is finite (infinite off it)
//   in_tgv_ball    membership of a residual in the TGV dual ball
//                  {|sigma1| <= lam1, |sigma2| <= lam2} with margins
//
// The inner TGV minimization is solved exactly by the tvl1 dynamic program.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tgv1d/signal.hpp"
#include "tgv1d/tvl1.hpp"

namespace tgv1d {

// -------------------------------------------------------------- lambda pair

struct LambdaPair {
    double lambda1 = 1.0;
    double lambda2 = 1.0;

    LambdaPair() = default;
    LambdaPair(double l1, double l2) : lambda1(l1), lambda2(l2) {
        validate();
    }

    void validate() const {
        if (!(lambda1 > 0.0) || !std::isfinite(lambda1) ||
            !(lambda2 > 0.0) || !std::isfinite(lambda2))
            throw std::invalid_argument(
                "LambdaPair: weights must be positive and finite");
    }
};

// --------------------------------------------------------------- objectives

// solver convergence scale, 1/2 h ||f||^2 + 1
inline double objective_scale(const GridSignal& f) {
    return 0.5 * norm_l2_sq(f) + 1.0;
}

// 1/2 h ||u-f||^2 + lam * TV^order(u)
inline double objective_tv(const GridSignal& u, const GridSignal& f,
                           double lam, int order) {
    if (!(lam > 0.0) || !std::isfinite(lam))
        throw std::invalid_argument("objective_tv: weight must be positive");
    return 0.5 * norm_l2_sq(sub(u, f)) + lam * tv_seminorm(u, order);
}

// --------------------------------------------------------------- TGV value

// Exact value of the inner minimum over slope fields.  With v_j = h w_j the
// problem becomes  min_v lam1 sum |Du_j - v_j| + (lam2/h) sum |v_{j+1}-v_j|
// on plain forward differences Du_j = u[j+1]-u[j].
inline Tvl1Result tgv_inner(const GridSignal& u, const LambdaPair& lam) {
    std::vector<double> d(u.n() - 1);
    for (std::size_t j = 0; j + 1 < u.n(); ++j)
        d[j] = u.values[j + 1] - u.values[j];
    return tvl1_exact(d, lam.lambda1, lam.lambda2 / u.h());
}

inline double tgv_value(const GridSignal& u, const LambdaPair& lam) {
    return tgv_inner(u, lam).value;
}

// 1/2 h ||u-f||^2 + TGV(u)
inline double objective_tgv(const GridSignal& u, const GridSignal& f,
                            const LambdaPair& lam) {
    return 0.5 * norm_l2_sq(sub(u, f)) + tgv_value(u, lam);
}

// ---------------------------------------------------------------- dual norm

struct DualNormResult {
    double value = 0.0;         // sup |sigma^order|; finite part even when
                                // the flag below is set
    bool is_infinite = false;   // true when the residual leaves the subspace
    double argmax_location = 0; // edge coordinate attaining the sup
};

// Dual norm of the order-i total variation at weight 1: the sup of
// |sigma^i[r]| when r has the required vanishing moments, infinite
// otherwise (flagged explicitly, never by a sentinel value).
inline DualNormResult dual_norm_tv(const GridSignal& r, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("dual_norm_tv: order must be 1 or 2");
    const SigmaTransforms t = sigma_transforms(r);
    DualNormResult out;
    out.is_infinite = !in_subspace(r, order);
    if (order == 1) {
        out.value = t.sup1;
        out.argmax_location = r.edge(t.argmax1);
    } else {
        out.value = t.sup2;
        out.argmax_location = r.edge(t.argmax2);
    }
    return out;
}

// ----------------------------------------------------------- TGV dual ball

struct BallCheck {
    bool inside = false;
    bool subspace_ok = false;  // vanishing mean and first moment
    double margin1 = 0.0;      // lam1 - sup |sigma1|
    double margin2 = 0.0;      // lam2 - sup |sigma2|
};

inline BallCheck in_tgv_ball(const GridSignal& r, const LambdaPair& lam) {
    const SigmaTransforms t = sigma_transforms(r);
    BallCheck c;
    c.subspace_ok = in_subspace(r, 2);
    c.margin1 = lam.lambda1 - t.sup1;
    c.margin2 = lam.lambda2 - t.sup2;
    c.inside = c.subspace_ok && c.margin1 >= 0.0 && c.margin2 >= 0.0;
    return c;
}

}  // namespace tgv1d
