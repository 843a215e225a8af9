#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "braidcover/errors.hpp"

namespace braidcover {

template <typename Real = double>
using Complex = std::complex<Real>;

template <typename Real = double>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real = double>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real = double>
struct Tolerances {
    Real sep = Real(1e-8);        // distinctness threshold
    Real residual = Real(1e-10);  // Newton / root residual target
    Real zero = Real(1e-7);       // zero-count threshold in forward dynamics
};

/// Distance between unordered tuples: minimum over entry matchings of the
/// summed absolute differences. Tuple sizes here are at most a few entries.
template <typename Real>
Real tuple_distance(const std::vector<std::complex<Real>>& a,
                    const std::vector<std::complex<Real>>& b) {
    if (a.size() != b.size()) return std::numeric_limits<Real>::infinity();
    std::vector<int> idx(a.size());
    std::iota(idx.begin(), idx.end(), 0);
    Real best = std::numeric_limits<Real>::infinity();
    do {
        Real s = Real(0);
        for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[idx[i]]);
        best = std::min(best, s);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

/// Monic coefficient list, constant term first. poly[k] is the coefficient
/// of u^k; poly.back() == 1 for a monic polynomial of degree poly.size()-1.
template <typename Real>
std::complex<Real> poly_eval(const std::vector<std::complex<Real>>& coeffs,
                             std::complex<Real> u) {
    std::complex<Real> acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
    return acc;
}

template <typename Real>
std::vector<std::complex<Real>> poly_derivative(const std::vector<std::complex<Real>>& coeffs) {
    std::vector<std::complex<Real>> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        d.push_back(coeffs[k] * Real(k));
    return d;
}

/// Monic coefficients of prod (u - roots[i]), constant term first.
template <typename Real>
std::vector<std::complex<Real>> poly_from_roots(const std::vector<std::complex<Real>>& roots) {
    std::vector<std::complex<Real>> c{std::complex<Real>(1)};
    for (const auto& r : roots) {
        c.insert(c.begin(), std::complex<Real>(0));
        for (std::size_t k = 0; k + 1 < c.size(); ++k) c[k] -= r * c[k + 1];
    }
    return c;
}

/// All roots of a monic polynomial by Aberth-Ehrlich simultaneous iteration.
/// Deterministic: fixed starting angles on a coefficient-scaled circle, fixed
/// restart perturbations.
template <typename Real>
std::vector<std::complex<Real>> aberth_roots(std::vector<std::complex<Real>> coeffs,
                                             Real residual_tol = Real(1e-12),
                                             int max_iter = 200, int restarts = 8) {
    using C = std::complex<Real>;
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg <= 0) return {};
    for (auto& c : coeffs) c /= coeffs.back();
    if (deg == 1) return {-coeffs[0]};

    auto deriv = poly_derivative(coeffs);
    Real scale = Real(0);
    for (int k = 0; k < deg; ++k)
        scale = std::max(scale, std::pow(std::abs(coeffs[k]), Real(1) / Real(deg - k)));
    if (scale == Real(0)) return std::vector<C>(deg, C(0));

    const Real pi = std::numbers::pi_v<Real>;
    for (int attempt = 0; attempt <= restarts; ++attempt) {
        std::vector<C> z(deg);
        Real phase = Real(0.39) + Real(0.77) * attempt;
        Real radius = scale * (Real(1) + Real(0.25) * attempt);
        for (int j = 0; j < deg; ++j)
            z[j] = radius * std::polar(Real(1), Real(2) * pi * (Real(j) + phase) / Real(deg));

        bool converged = false;
        for (int it = 0; it < max_iter && !converged; ++it) {
            converged = true;
            for (int j = 0; j < deg; ++j) {
                C p = poly_eval(coeffs, z[j]);
                C dp = poly_eval(deriv, z[j]);
                if (std::abs(p) <= residual_tol * (Real(1) + std::pow(std::abs(z[j]), Real(deg))))
                    continue;
                C newton = (dp != C(0)) ? p / dp : C(Real(0.5) * scale, Real(0.3) * scale);
                C sum(0);
                for (int k = 0; k < deg; ++k) {
                    if (k == j) continue;
                    C diff = z[j] - z[k];
                    if (diff == C(0)) diff = C(residual_tol * scale, residual_tol * scale);
                    sum += C(1) / diff;
                }
                C denom = C(1) - newton * sum;
                C step = (denom != C(0)) ? newton / denom : newton;
                z[j] -= step;
                converged = false;
            }
        }
        bool all_good = true;
        for (int j = 0; j < deg; ++j) {
            Real bound = residual_tol * (Real(1) + std::pow(std::abs(z[j]), Real(deg)));
            if (std::abs(poly_eval(coeffs, z[j])) > bound * Real(100)) {
                all_good = false;
                break;
            }
        }
        if (all_good) return z;
    }
    throw NoConvergence("root finder did not converge within the restart budget");
}

/// Configuration point: an unordered tuple of complex numbers. Cn points have
/// n distinct entries; Vn points have n-1 distinct nonzero entries.
template <typename Real = double>
struct ConfigPoint {
    enum class Kind { Cn, Vn };
    Kind kind = Kind::Vn;
    std::vector<std::complex<Real>> points;

    int size() const { return static_cast<int>(points.size()); }

    bool valid(Real sep = Real(1e-8)) const {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (kind == Kind::Vn && std::abs(points[i]) <= sep) return false;
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (std::abs(points[i] - points[j]) <= sep) return false;
        }
        return true;
    }
};

/// Monic polynomial of degree n with constant term 0, represented primarily by
/// its n-1 critical points. Roots and critical values are cached on build.
template <typename Real = double>
struct MonicPoly {
    int degree = 0;
    std::vector<std::complex<Real>> crit_points;  // size n-1
    std::vector<std::complex<Real>> coeffs;       // constant term first, exactly 0
    std::vector<std::complex<Real>> roots;        // size n, roots[0] == 0 exactly
    std::vector<std::complex<Real>> crit_values;  // f(crit_points[k]), index-paired
    bool in_Zn = false;

    ConfigPoint<Real> nonzero_roots() const {
        ConfigPoint<Real> v{ConfigPoint<Real>::Kind::Vn,
                            {roots.begin() + 1, roots.end()}};
        return v;
    }
};

/// f(u) = integral of n * prod (w - c_i) dw from 0 to u: monic of degree n,
/// constant term 0, critical points exactly c.
template <typename Real>
MonicPoly<Real> poly_from_critical_points(const std::vector<std::complex<Real>>& c,
                                          const Tolerances<Real>& tol = {}) {
    using C = std::complex<Real>;
    const int n = static_cast<int>(c.size()) + 1;
    MonicPoly<Real> p;
    p.degree = n;
    p.crit_points = c;

    std::vector<C> dcoeffs = poly_from_roots(c);  // monic, degree n-1
    p.coeffs.assign(n + 1, C(0));
    for (int k = 0; k <= n - 1; ++k) p.coeffs[k + 1] = Real(n) * dcoeffs[k] / Real(k + 1);

    // nonzero roots: f(u) = u * g(u), g of degree n-1
    std::vector<C> g(p.coeffs.begin() + 1, p.coeffs.end());
    std::vector<C> nz = aberth_roots<Real>(g, tol.residual);
    p.roots.assign(1, C(0));
    p.roots.insert(p.roots.end(), nz.begin(), nz.end());

    p.crit_values.clear();
    for (const auto& ck : c) p.crit_values.push_back(poly_eval(p.coeffs, ck));

    bool roots_distinct = true;
    for (std::size_t i = 0; i < p.roots.size() && roots_distinct; ++i)
        for (std::size_t j = i + 1; j < p.roots.size(); ++j)
            if (std::abs(p.roots[i] - p.roots[j]) <= tol.sep) {
                roots_distinct = false;
                break;
            }
    bool values_ok = true;
    for (std::size_t i = 0; i < p.crit_values.size() && values_ok; ++i) {
        if (std::abs(p.crit_values[i]) <= tol.sep) values_ok = false;
        for (std::size_t j = i + 1; j < p.crit_values.size(); ++j)
            if (std::abs(p.crit_values[i] - p.crit_values[j]) <= tol.sep) {
                values_ok = false;
                break;
            }
    }
    p.in_Zn = roots_distinct && values_ok;
    return p;
}

/// Critical-value tuple of p, index-paired with p.crit_points. Throws NotInVn
/// when the values collide or vanish within the separation tolerance.
template <typename Real>
ConfigPoint<Real> critical_values(const MonicPoly<Real>& p, const Tolerances<Real>& tol = {},
                                  bool require_Vn = true) {
    ConfigPoint<Real> v{ConfigPoint<Real>::Kind::Vn, p.crit_values};
    if (require_Vn && !v.valid(tol.sep))
        throw NotInVn("critical values collide or vanish");
    return v;
}

template <typename Real>
std::vector<std::complex<Real>> all_roots(const MonicPoly<Real>& p) {
    return p.roots;
}

/// Builds the polynomial with the given full root set (must contain a root at
/// 0 within tolerance; it is pinned to exactly 0).
template <typename Real>
MonicPoly<Real> poly_from_roots_with_zero(std::vector<std::complex<Real>> roots,
                                          const Tolerances<Real>& tol = {}) {
    using C = std::complex<Real>;
    auto zero_it = std::min_element(roots.begin(), roots.end(),
                                    [](const C& a, const C& b) { return std::abs(a) < std::abs(b); });
    if (zero_it == roots.end()) throw Error("empty root list");
    roots.erase(zero_it);

    std::vector<C> g = poly_from_roots(roots);        // monic degree n-1
    std::vector<C> f(g.size() + 1, C(0));             // f = u * g
    for (std::size_t k = 0; k < g.size(); ++k) f[k + 1] = g[k];
    std::vector<C> crit = aberth_roots<Real>([&] {
        auto d = poly_derivative(f);
        for (auto& c : d) c /= d.back();
        return d;
    }(), tol.residual);
    MonicPoly<Real> p = poly_from_critical_points(crit, tol);
    return p;
}

}  // namespace braidcover
