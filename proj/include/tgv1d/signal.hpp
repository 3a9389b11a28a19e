// signal.hpp
//
// Midpoint-grid signals on the interval (-1, 1) and their basic integral
// transforms.  A signal with n cells stores samples at x_i = -1 + (i+1/2)h,
// h = 2/n.  The running integrals
//
//     sigma1[j] = h * sum_{k<=j} r[k]          (value at right cell edge j)
//     sigma2[j] = h * sum_{k<=j} sigma1[k]
//
// realize the first and second antiderivatives of r vanishing at x = -1.
// Their sup-norms are the dual norms of the order-1 / order-2 total
// variation seminorms on the mean-free / affine-free subspaces.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgv1d {

// ---------------------------------------------------------------- grid signal

struct GridSignal {
    std::vector<double> values;  // samples at cell midpoints, size n >= 4

    GridSignal() = default;

    explicit GridSignal(std::vector<double> v) : values(std::move(v)) {
        if (values.size() < 4)
            throw std::invalid_argument("GridSignal: need at least 4 cells");
        for (double a : values)
            if (!std::isfinite(a))
                throw std::invalid_argument("GridSignal: non-finite sample");
    }

    std::size_t n() const { return values.size(); }
    double h() const { return 2.0 / static_cast<double>(values.size()); }

    // midpoint of cell i
    double x(std::size_t i) const {
        return -1.0 + (static_cast<double>(i) + 0.5) * h();
    }

    // right edge of cell j (edge n-1 is x = +1)
    double edge(std::size_t j) const {
        return -1.0 + (static_cast<double>(j) + 1.0) * h();
    }
};

// ----------------------------------------------------------------- test data

// The three canonical data functions on (-1, 1), each mean-free.
enum class DataId { AbsData, IndData, QuadData };

// pointwise value of the data function
inline double data_value(DataId id, double x) {
    switch (id) {
        case DataId::AbsData: return std::abs(x) - 0.5;
        case DataId::IndData: return (std::abs(x) < 0.5) ? 0.5 : -0.5;
        case DataId::QuadData: return x * x - 1.0 / 3.0;
    }
    throw std::invalid_argument("data_value: unknown data id");
}

inline const char* data_name(DataId id) {
    switch (id) {
        case DataId::AbsData: return "abs";
        case DataId::IndData: return "ind";
        case DataId::QuadData: return "quad";
    }
    return "?";
}

// Midpoint samples of a data function.  For IndData the jump sits at a cell
// edge whenever n is divisible by 4, so no sample lands on the discontinuity.
inline GridSignal sample(DataId id, std::size_t n) {
    if (n < 4) throw std::invalid_argument("sample: need n >= 4");
    std::vector<double> v(n);
    const double h = 2.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = data_value(id, -1.0 + (static_cast<double>(i) + 0.5) * h);
    return GridSignal(std::move(v));
}

// ------------------------------------------------------------------- moments

// h * sum u_i x_i^j, the midpoint quadrature of the j-th moment; j in {0, 1}.
inline double moment(const GridSignal& u, int j) {
    if (j != 0 && j != 1)
        throw std::invalid_argument("moment: only orders 0 and 1 are defined");
    double s = 0.0;
    for (std::size_t i = 0; i < u.n(); ++i)
        s += u.values[i] * (j == 0 ? 1.0 : u.x(i));
    return u.h() * s;
}

// default moment tolerance: 1e-8 * sqrt(n) * max|u|
inline double default_moment_tol(const GridSignal& u) {
    double m = 0.0;
    for (double a : u.values) m = std::max(m, std::abs(a));
    return 1e-8 * std::sqrt(static_cast<double>(u.n())) * std::max(m, 1.0);
}

// Membership in the subspace where the order-i dual norm is finite:
// order 1 needs a vanishing mean, order 2 additionally a vanishing first
// moment.
inline bool in_subspace(const GridSignal& u, int order, double tol) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("in_subspace: order must be 1 or 2");
    if (!(tol > 0.0))
        throw std::domain_error("in_subspace: tolerance must be positive");
    if (std::abs(moment(u, 0)) > tol) return false;
    if (order == 2 && std::abs(moment(u, 1)) > tol) return false;
    return true;
}

inline bool in_subspace(const GridSignal& u, int order) {
    return in_subspace(u, order, default_moment_tol(u));
}

// ------------------------------------------------------------ tv seminorms

// Discrete total variation seminorms:
//   order 1: sum |u[j+1] - u[j]|
//   order 2: sum |u[j+1] - 2u[j] + u[j-1]| / h
inline double tv_seminorm(const GridSignal& u, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("tv_seminorm: order must be 1 or 2");
    const std::vector<double>& v = u.values;
    double s = 0.0;
    if (order == 1) {
        for (std::size_t j = 0; j + 1 < v.size(); ++j)
            s += std::abs(v[j + 1] - v[j]);
    } else {
        for (std::size_t j = 1; j + 1 < v.size(); ++j)
            s += std::abs(v[j + 1] - 2.0 * v[j] + v[j - 1]);
        s /= u.h();
    }
    return s;
}

// ------------------------------------------------------------ sigma transform

struct SigmaTransforms {
    std::vector<double> sigma1;  // running integral, value at right edge j
    std::vector<double> sigma2;  // running integral of sigma1
    double sup1 = 0.0;           // max |sigma1|
    double sup2 = 0.0;           // max |sigma2|
    std::size_t argmax1 = 0;     // edge index attaining sup1
    std::size_t argmax2 = 0;     // edge index attaining sup2
};

inline SigmaTransforms sigma_transforms(const GridSignal& r) {
    SigmaTransforms t;
    const std::size_t n = r.n();
    const double h = r.h();
    t.sigma1.resize(n);
    t.sigma2.resize(n);
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        s1 += h * r.values[j];
        t.sigma1[j] = s1;
        s2 += h * s1;
        t.sigma2[j] = s2;
        if (std::abs(s1) > t.sup1) { t.sup1 = std::abs(s1); t.argmax1 = j; }
        if (std::abs(s2) > t.sup2) { t.sup2 = std::abs(s2); t.argmax2 = j; }
    }
    return t;
}

// -------------------------------------------------------------- small helpers

// componentwise difference a - b on a common grid
inline GridSignal sub(const GridSignal& a, const GridSignal& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("sub: size mismatch");
    std::vector<double> v(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) v[i] = a.values[i] - b.values[i];
    return GridSignal(std::move(v));
}

// h-weighted squared L2 norm, h * sum u_i^2
inline double norm_l2_sq(const GridSignal& u) {
    double s = 0.0;
    for (double a : u.values) s += a * a;
    return u.h() * s;
}

inline double norm_l2(const GridSignal& u) { return std::sqrt(norm_l2_sq(u)); }

inline double norm_linf(const GridSignal& u) {
    double m = 0.0;
    for (double a : u.values) m = std::max(m, std::abs(a));
    return m;
}

// h-weighted L2 distance between signals on a common grid
inline double dist_l2(const GridSignal& a, const GridSignal& b) {
    return norm_l2(sub(a, b));
}

}  // namespace tgv1d
