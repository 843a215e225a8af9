#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "braidcover/errors.hpp"
#include "braidcover/fiber.hpp"
#include "braidcover/poly.hpp"

namespace braidcover {

/// Iterated preimages of a Vn point under the critical-value map: level j
/// holds the nonzero-root tuples whose j-fold image is the root point.
template <typename Real = double>
struct PreimageTree {
    std::vector<std::complex<Real>> root;
    std::vector<std::vector<std::vector<std::complex<Real>>>> levels;  // level 0 = {root}
    bool complete = true;
    std::string failure;

    /// All component complex numbers at one level, for plotting.
    std::vector<std::complex<Real>> level_points(int level) const {
        std::vector<std::complex<Real>> out;
        for (const auto& tuple : levels[level])
            out.insert(out.end(), tuple.begin(), tuple.end());
        return out;
    }
};

struct DynamicsOptions {
    std::uint64_t node_budget = 1000000;
    FiberOptions fiber;
};

template <typename Real>
PreimageTree<Real> preimage_tree(const std::vector<std::complex<Real>>& x, int depth,
                                 const DynamicsOptions& opts = {},
                                 const Tolerances<Real>& tol = {}) {
    ConfigPoint<Real> v{ConfigPoint<Real>::Kind::Vn, x};
    if (!v.valid(tol.sep)) throw NotInVn("preimage tree rooted outside Vn");

    PreimageTree<Real> tree;
    tree.root = x;
    tree.levels.push_back({x});
    std::uint64_t nodes = 1;
    for (int level = 1; level <= depth; ++level) {
        std::vector<std::vector<std::complex<Real>>> next;
        for (const auto& tuple : tree.levels.back()) {
            ConfigPoint<Real> base{ConfigPoint<Real>::Kind::Vn, tuple};
            std::vector<MonicPoly<Real>> fib;
            try {
                fib = solve_fiber(base, opts.fiber, tol);
            } catch (const FiberIncomplete& e) {
                tree.complete = false;
                tree.failure = e.what();
                tree.levels.push_back(std::move(next));
                return tree;
            }
            for (const auto& p : fib) {
                next.push_back(p.nonzero_roots().points);
                if (++nodes > opts.node_budget)
                    throw EnumerationBudgetExceeded("preimage tree over budget", nodes);
            }
        }
        tree.levels.push_back(std::move(next));
    }
    return tree;
}

enum class OrbitMode { Roots, CriticalPoints };

/// Forward orbit of a tuple under the critical-value map, with the count of
/// (numerically) zero entries per iterate.
template <typename Real = double>
struct ForwardOrbit {
    OrbitMode mode = OrbitMode::Roots;
    std::vector<std::vector<std::complex<Real>>> iterates;  // iterates[0] = start
    std::vector<int> zero_counts;                           // per iterate
    std::vector<bool> in_Vn;                                // per iterate
    Real tau_zero = Real(1e-7);
};

/// One application of the map. Roots mode: the tuple is the nonzero-root set
/// of u*prod(u - z_i); the image is that polynomial's critical values.
/// CriticalPoints mode: the tuple is identified with the plain integral
/// polynomial f(u) = int_0^u prod(w - c_i) dw and mapped to its values at c.
template <typename Real>
std::vector<std::complex<Real>> theta_step(const std::vector<std::complex<Real>>& tuple,
                                           OrbitMode mode, const Tolerances<Real>& tol = {}) {
    using C = std::complex<Real>;
    const int m = static_cast<int>(tuple.size());
    if (mode == OrbitMode::Roots) {
        std::vector<C> g = poly_from_roots(tuple);  // degree m monic
        std::vector<C> f(g.size() + 1, C(0));       // f = u * g, degree m+1
        for (std::size_t k = 0; k < g.size(); ++k) f[k + 1] = g[k];
        auto d = poly_derivative(f);
        for (auto& c : d) c /= d.back();
        auto crit = aberth_roots<Real>(d, tol.residual);
        std::vector<C> out;
        for (const auto& c : crit) out.push_back(poly_eval(f, c));
        return out;
    }
    // critical-point mode: f' = prod(w - c_i), integrate without rescaling
    std::vector<C> d = poly_from_roots(tuple);
    std::vector<C> f(d.size() + 1, C(0));
    for (std::size_t k = 0; k < d.size(); ++k) f[k + 1] = d[k] / Real(k + 1);
    std::vector<C> out;
    for (const auto& c : tuple) out.push_back(poly_eval(f, c));
    (void)m;
    return out;
}

template <typename Real>
ForwardOrbit<Real> forward_orbit(const std::vector<std::complex<Real>>& start, int steps,
                                 OrbitMode mode = OrbitMode::Roots,
                                 const Tolerances<Real>& tol = {}) {
    ForwardOrbit<Real> orbit;
    orbit.mode = mode;
    orbit.tau_zero = tol.zero;
    // zero counting is relative to the tuple scale: the map commutes with
    // scaling, and contracting orbits would otherwise dip below any absolute
    // threshold without containing an exact zero
    auto count_zeros = [&](const std::vector<std::complex<Real>>& tuple) {
        Real scale = Real(0);
        for (const auto& v : tuple) scale = std::max(scale, std::abs(v));
        int z = 0;
        for (const auto& v : tuple)
            if (std::abs(v) <= tol.zero * scale) ++z;
        return z;
    };
    auto record = [&](const std::vector<std::complex<Real>>& tuple) {
        orbit.iterates.push_back(tuple);
        orbit.zero_counts.push_back(count_zeros(tuple));
        ConfigPoint<Real> v{ConfigPoint<Real>::Kind::Vn, tuple};
        orbit.in_Vn.push_back(v.valid(tol.sep));
    };
    record(start);
    auto cur = start;
    for (int s = 0; s < steps; ++s) {
        cur = theta_step(cur, mode, tol);
        record(cur);
    }
    return orbit;
}

enum class PlotFormat { Csv, Svg };

/// Writes (depth, re, im) rows as CSV or a plain scatter SVG.
template <typename Real>
void export_plot(const std::vector<std::pair<int, std::complex<Real>>>& points,
                 PlotFormat format, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    if (format == PlotFormat::Csv) {
        out << "depth,re,im\n";
        out.precision(17);
        for (const auto& [depth, z] : points)
            out << depth << ',' << z.real() << ',' << z.imag() << '\n';
        return;
    }
    Real lo = Real(-1), hi = Real(1);
    for (const auto& [depth, z] : points) {
        lo = std::min({lo, z.real(), z.imag()});
        hi = std::max({hi, z.real(), z.imag()});
    }
    const double size = 640.0;
    const double pad = 20.0;
    auto map = [&](Real v) {
        return pad + (double(v) - double(lo)) / (double(hi) - double(lo)) * (size - 2 * pad);
    };
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << size << "' height='" << size
        << "'>\n";
    int max_depth = 1;
    for (const auto& [depth, z] : points) max_depth = std::max(max_depth, depth);
    for (const auto& [depth, z] : points) {
        int shade = 40 + 180 * depth / max_depth;
        out << "<circle cx='" << map(z.real()) << "' cy='" << size - map(z.imag())
            << "' r='1.5' fill='rgb(" << shade << ',' << 60 << ',' << 200 - shade / 2
            << ")'/>\n";
    }
    out << "</svg>\n";
}

}  // namespace braidcover
