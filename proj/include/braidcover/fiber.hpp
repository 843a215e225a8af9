#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "braidcover/errors.hpp"
#include "braidcover/perm.hpp"
#include "braidcover/poly.hpp"

namespace braidcover {

/// Newton correction for the square system f_c(c_k) = v_k, k = 1..n-1, with
/// f_c the degree-n monic integral of n*prod(w - c_i). Returns true when the
/// residual target is met.
template <typename Real>
bool newton_critical_system(std::vector<std::complex<Real>>& c,
                            const std::vector<std::complex<Real>>& v, Real target,
                            int max_iter = 60) {
    using C = std::complex<Real>;
    const int m = static_cast<int>(v.size());
    const int n = m + 1;
    Real vscale = Real(1);
    for (const auto& x : v) vscale = std::max(vscale, std::abs(x));

    for (int it = 0; it < max_iter; ++it) {
        auto p = [&] {
            std::vector<C> dcoeffs = poly_from_roots(c);
            std::vector<C> coeffs(n + 1, C(0));
            for (int k = 0; k <= n - 1; ++k) coeffs[k + 1] = Real(n) * dcoeffs[k] / Real(k + 1);
            return coeffs;
        }();
        ComplexVector<Real> F(m);
        Real rmax = Real(0);
        for (int k = 0; k < m; ++k) {
            F(k) = poly_eval(p, c[k]) - v[k];
            rmax = std::max(rmax, std::abs(F(k)));
        }
        if (rmax <= target * vscale) return true;

        ComplexMatrix<Real> J(m, m);
        for (int j = 0; j < m; ++j) {
            std::vector<C> others;
            for (int i = 0; i < m; ++i)
                if (i != j) others.push_back(c[i]);
            std::vector<C> q = poly_from_roots(others);  // degree n-2 monic
            std::vector<C> integ(q.size() + 1, C(0));
            for (std::size_t k = 0; k < q.size(); ++k) integ[k + 1] = q[k] / Real(k + 1);
            for (int k = 0; k < m; ++k) J(k, j) = -Real(n) * poly_eval(integ, c[k]);
        }
        Eigen::PartialPivLU<ComplexMatrix<Real>> lu(J);
        ComplexVector<Real> delta = lu.solve(F);
        if (!delta.allFinite()) return false;
        Real step = Real(0);
        for (int k = 0; k < m; ++k) {
            c[k] -= delta(k);
            step = std::max(step, std::abs(delta(k)));
        }
        if (step > Real(1e6)) return false;  // diverging
    }
    return false;
}

struct FiberOptions {
    int max_starts = 4000;
    double residual = 1e-10;
    double value_match = 1e-8;  // critical-value set agreement, relative
    double sep = 1e-8;
};

/// All n^{n-1} polynomials whose critical-value set equals v. Multi-start
/// Newton over the orderings of v, closed under the root-of-unity symmetry,
/// deduplicated as unordered critical-point tuples. Deterministic.
template <typename Real>
std::vector<MonicPoly<Real>> solve_fiber(const ConfigPoint<Real>& v,
                                         const FiberOptions& opts = {},
                                         const Tolerances<Real>& tol = {}) {
    using C = std::complex<Real>;
    if (v.kind != ConfigPoint<Real>::Kind::Vn || !v.valid(Real(opts.sep)))
        throw NotInVn("fiber base is not a valid Vn point");
    const int m = v.size();
    const int n = m + 1;
    int expected = 1;
    for (int k = 0; k < m; ++k) expected *= n;

    Real vmax = Real(0);
    for (const auto& x : v.points) vmax = std::max(vmax, std::abs(x));
    const Real radius = Real(3) * std::pow(vmax, Real(1) / Real(n));
    const Real dedupe_tol = Real(100) * Real(opts.sep) * std::max(Real(1), radius);

    std::vector<std::vector<C>> found;  // canonical (sorted) critical tuples
    std::vector<MonicPoly<Real>> out;

    auto canonical = [](std::vector<C> c) {
        std::sort(c.begin(), c.end(), [](const C& a, const C& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        return c;
    };

    auto try_add = [&](const std::vector<C>& c) -> bool {
        std::vector<C> cc = c;
        if (!newton_critical_system(cc, v.points, Real(opts.residual) * Real(0.01)))
            return false;
        auto p = poly_from_critical_points(cc, tol);
        ConfigPoint<Real> got{ConfigPoint<Real>::Kind::Vn, p.crit_values};
        if (tuple_distance(got.points, v.points) > Real(opts.value_match) * (Real(1) + vmax) * m)
            return false;
        auto canon = canonical(cc);
        for (const auto& f : found)
            if (tuple_distance(f, canon) < dedupe_tol) return false;
        found.push_back(canon);
        out.push_back(std::move(p));
        return true;
    };

    const Real pi = std::numbers::pi_v<Real>;
    const C xi = std::polar(Real(1), Real(2) * pi / Real(n));

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t lcg = 0x2545F4914F6CDD1Dull;
    auto next01 = [&lcg]() {
        lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
        return Real((lcg >> 11) & 0xFFFFFFFFFFFFull) / Real(0x1000000000000ull);
    };

    int starts = 0;
    do {
        std::vector<C> target(m);
        for (int k = 0; k < m; ++k) target[k] = v.points[order[k]];
        ConfigPoint<Real> tv{ConfigPoint<Real>::Kind::Vn, target};

        for (int attempt = 0; attempt < opts.max_starts / 6 && static_cast<int>(out.size()) < expected;
             ++attempt) {
            ++starts;
            std::vector<C> c(m);
            for (int k = 0; k < m; ++k) {
                Real r = radius * std::sqrt(next01());
                Real a = Real(2) * pi * next01();
                c[k] = std::polar(r, a);
            }
            std::vector<C> cc = c;
            if (!newton_critical_system(cc, target, Real(opts.residual) * Real(0.01))) continue;
            // re-express in the base ordering before adding
            std::vector<C> base_order(m);
            // crit values of cc are index-paired with target = v[order]; undo
            for (int k = 0; k < m; ++k) base_order[k] = cc[k];
            // v-index of slot k is order[k]; sort slots so slot k targets v[k]
            std::vector<C> arranged(m);
            for (int k = 0; k < m; ++k) arranged[order[k]] = base_order[k];
            if (try_add(arranged)) {
                // close under multiplication of the configuration by the n-th
                // roots of unity; critical values are unchanged
                std::vector<C> rot = arranged;
                for (int k = 1; k < n; ++k) {
                    for (auto& x : rot) x *= xi;
                    try_add(rot);
                }
            }
        }
        if (static_cast<int>(out.size()) >= expected) break;
    } while (std::next_permutation(order.begin(), order.end()) && starts < opts.max_starts);

    if (static_cast<int>(out.size()) != expected)
        throw FiberIncomplete("fiber solve found " + std::to_string(out.size()) + " of " +
                                  std::to_string(expected) + " points",
                              static_cast<int>(out.size()), expected);
    return out;
}

/// The n polynomials whose roots are p's roots scaled by the n-th roots of
/// unity; all share p's critical-value set.
template <typename Real>
std::vector<MonicPoly<Real>> root_of_unity_orbit(const MonicPoly<Real>& p,
                                                 const Tolerances<Real>& tol = {}) {
    using C = std::complex<Real>;
    const Real pi = std::numbers::pi_v<Real>;
    const C xi = std::polar(Real(1), Real(2) * pi / Real(p.degree));
    std::vector<MonicPoly<Real>> orbit;
    std::vector<C> c = p.crit_points;
    for (int k = 0; k < p.degree; ++k) {
        orbit.push_back(poly_from_critical_points(c, tol));
        for (auto& x : c) x *= xi;
    }
    return orbit;
}

/// Reference labeling: root tuples (the n-1 nonzero roots) indexed by label,
/// together with the class map residue (label mod n) -> covered x index.
template <typename Real = double>
struct FiberReference {
    int n = 0;
    std::vector<std::vector<std::complex<Real>>> root_tuples;  // size n^n
    std::vector<int> x_of_class;  // size n: x index (1-based) covered by labels == c mod n
};

/// The full n^n-point labeled fiber over a Cn base configuration.
template <typename Real = double>
struct LabeledFiber {
    int n = 0;
    std::vector<std::complex<Real>> base;            // ordered tuple
    std::vector<std::vector<std::complex<Real>>> x;  // x[i-1] = tuple of the Vn point x_i
    std::vector<int> strand_of_x;                    // x_i came from this base slot
    std::vector<MonicPoly<Real>> points;             // indexed by label 0..n^n-1
    std::vector<int> x_of_class;                     // residue class -> covered x index (1-based)
    std::uint64_t content_hash = 0;

    int x_index_of_label(int label) const { return x_of_class[label % n]; }
    int class_of_x(int xi) const {
        for (int c = 0; c < n; ++c)
            if (x_of_class[c] == xi) return c;
        throw Error("x index not covered by any class");
    }
    std::vector<int> labels_over_x(int xi) const {
        std::vector<int> out;
        int c = class_of_x(xi);
        int total = static_cast<int>(points.size());
        for (int l = c; l < total; l += n) out.push_back(l);
        return out;
    }
};

/// Minimal-cost assignment (Hungarian algorithm, O(k^3)).
template <typename Real>
std::vector<int> min_cost_assignment(const std::vector<std::vector<Real>>& cost) {
    const int k = static_cast<int>(cost.size());
    const Real INF = std::numeric_limits<Real>::infinity();
    std::vector<Real> u(k + 1, Real(0)), vpot(k + 1, Real(0));
    std::vector<int> p(k + 1, 0), way(k + 1, 0);
    for (int i = 1; i <= k; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<Real> minv(k + 1, INF);
        std::vector<char> used(k + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = -1;
            Real delta = INF;
            for (int j = 1; j <= k; ++j) {
                if (used[j]) continue;
                Real cur = cost[i0 - 1][j - 1] - u[i0] - vpot[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= k; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    vpot[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> match(k);  // row -> column
    for (int j = 1; j <= k; ++j)
        if (p[j] > 0) match[p[j] - 1] = j - 1;
    return match;
}

struct MatchResult {
    Perm relabel;       // computed index -> reference label
    double max_deviation;
};

/// Minimal-cost bijection between computed fiber points and reference root
/// tuples under the unordered tuple distance.
template <typename Real>
MatchResult match_to_reference(const std::vector<MonicPoly<Real>>& points,
                               const std::vector<std::vector<std::complex<Real>>>& ref,
                               Real max_allowed = Real(1e-3)) {
    if (points.size() != ref.size())
        throw NoConsistentMatching("reference cardinality mismatch");
    const int k = static_cast<int>(points.size());
    std::vector<std::vector<Real>> cost(k, std::vector<Real>(k));
    for (int i = 0; i < k; ++i) {
        auto nz = points[i].nonzero_roots().points;
        for (int j = 0; j < k; ++j) cost[i][j] = tuple_distance(nz, ref[j]);
    }
    auto match = min_cost_assignment(cost);
    Real worst = Real(0);
    for (int i = 0; i < k; ++i) worst = std::max(worst, cost[i][match[i]]);
    if (worst > max_allowed)
        throw NoConsistentMatching("best matching deviates by " + std::to_string(double(worst)));
    return {Perm(match), double(worst)};
}

template <typename Real>
std::uint64_t hash_fiber_key(int n, const std::vector<std::complex<Real>>& base) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(n));
    for (const auto& z : base) {
        double re = double(z.real()), im = double(z.imag());
        std::uint64_t a, b;
        std::memcpy(&a, &re, 8);
        std::memcpy(&b, &im, 8);
        mix(a);
        mix(b);
    }
    return h;
}

/// Builds the labeled fiber over `base`. When a reference labeling is given,
/// labels follow it (per covered x point); otherwise labels are assigned
/// lexicographically within each residue class, class i mod n over x_i.
template <typename Real>
LabeledFiber<Real> full_fiber(const std::vector<std::complex<Real>>& base,
                              const std::optional<FiberReference<Real>>& reference = {},
                              const FiberOptions& opts = {}, const Tolerances<Real>& tol = {}) {
    using C = std::complex<Real>;
    const int n = static_cast<int>(base.size());
    ConfigPoint<Real> bc{ConfigPoint<Real>::Kind::Cn, base};
    if (!bc.valid(tol.sep)) throw NonGenericBase("base entries collide");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(base[i].real() - base[j].real()) <= tol.sep)
                throw NonGenericBase("base real parts are not distinct");

    LabeledFiber<Real> fib;
    fib.n = n;
    fib.base = base;
    fib.content_hash = hash_fiber_key(n, base);

    // x_i is the difference tuple taken from the strand with the i-th
    // smallest real part; its entries keep the base tuple order.
    std::vector<int> by_re(n);
    std::iota(by_re.begin(), by_re.end(), 0);
    std::sort(by_re.begin(), by_re.end(),
              [&](int a, int b) { return base[a].real() < base[b].real(); });
    fib.x.resize(n);
    fib.strand_of_x.resize(n);
    for (int i = 0; i < n; ++i) {
        int s = by_re[i];
        fib.strand_of_x[i] = s;
        for (int k = 0; k < n; ++k)
            if (k != s) fib.x[i].push_back(base[k] - base[s]);
    }

    fib.x_of_class.assign(n, 0);
    if (reference) {
        fib.x_of_class = reference->x_of_class;
    } else {
        for (int i = 1; i <= n; ++i) fib.x_of_class[i % n] = i;
    }

    int total = 1;
    for (int k = 0; k < n; ++k) total *= n;
    fib.points.resize(total);

    for (int i = 1; i <= n; ++i) {
        ConfigPoint<Real> v{ConfigPoint<Real>::Kind::Vn, fib.x[i - 1]};
        auto polys = solve_fiber(v, opts, tol);
        int cls = fib.class_of_x(i);
        std::vector<int> labels;
        for (int l = cls; l < total; l += n) labels.push_back(l);

        if (reference) {
            std::vector<std::vector<C>> ref_tuples;
            for (int l : labels) ref_tuples.push_back(reference->root_tuples[l]);
            auto mr = match_to_reference(polys, ref_tuples);
            for (std::size_t j = 0; j < polys.size(); ++j)
                fib.points[labels[mr.relabel(static_cast<int>(j))]] = polys[j];
        } else {
            std::vector<int> idx(polys.size());
            std::iota(idx.begin(), idx.end(), 0);
            auto key = [&](int a) {
                auto c = polys[a].crit_points;
                std::sort(c.begin(), c.end(), [](const C& x, const C& y) {
                    if (x.real() != y.real()) return x.real() < y.real();
                    return x.imag() < y.imag();
                });
                return c;
            };
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                auto ka = key(a), kb = key(b);
                for (std::size_t t = 0; t < ka.size(); ++t) {
                    if (ka[t].real() != kb[t].real()) return ka[t].real() < kb[t].real();
                    if (ka[t].imag() != kb[t].imag()) return ka[t].imag() < kb[t].imag();
                }
                return false;
            });
            for (std::size_t j = 0; j < idx.size(); ++j)
                fib.points[labels[j]] = polys[idx[j]];
        }
    }
    return fib;
}

}  // namespace braidcover
