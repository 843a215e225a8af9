#pragma once

#include <algorithm>
#include <vector>

#include "braidcover/action.hpp"
#include "braidcover/braid.hpp"
#include "braidcover/fiber.hpp"
#include "braidcover/lift.hpp"
#include "braidcover/path.hpp"

namespace braidcover {

struct PhiOptions {
    int max_depth = 3;      // prefix length guard
    int loop_samples = 100; // samples per generator loop
    LiftOptions lift;
    FiberOptions fiber;
};

namespace detail {

/// The Cn loop of a word: generator loops concatenated with the rightmost
/// letter traversed first.
template <typename Real>
SampledPath<Real> word_loop(const BraidWord& w, const std::vector<std::complex<Real>>& base,
                            int samples, Real sep) {
    if (w.empty()) {
        SampledPath<Real> constant;
        constant.space = PathSpace::Cn;
        constant.closed = true;
        constant.ts = {Real(0), Real(1)};
        constant.samples = {base, base};
        return constant;
    }
    SampledPath<Real> out;
    bool first = true;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        auto seg = generator_loop(w.strands(), it->index, base, samples, sep);
        if (it->sign < 0) seg = reverse_path(seg);
        out = first ? seg : concat_paths(out, seg);
        first = false;
    }
    return out;
}

/// Canonically ordered fiber over a Vn tuple: sorted by the lexicographic
/// order of the sorted critical-point tuples.
template <typename Real>
std::vector<MonicPoly<Real>> ordered_fiber(const std::vector<std::complex<Real>>& v,
                                           const FiberOptions& opts, const Tolerances<Real>& tol) {
    using C = std::complex<Real>;
    ConfigPoint<Real> vc{ConfigPoint<Real>::Kind::Vn, v};
    auto polys = solve_fiber(vc, opts, tol);
    auto key = [](const MonicPoly<Real>& p) {
        auto c = p.crit_points;
        std::sort(c.begin(), c.end(), [](const C& a, const C& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        return c;
    };
    std::sort(polys.begin(), polys.end(), [&](const MonicPoly<Real>& a, const MonicPoly<Real>& b) {
        auto ka = key(a), kb = key(b);
        for (std::size_t t = 0; t < ka.size(); ++t) {
            if (ka[t].real() != kb[t].real()) return ka[t].real() < kb[t].real();
            if (ka[t].imag() != kb[t].imag()) return ka[t].imag() < kb[t].imag();
        }
        return false;
    });
    return polys;
}

/// The Vn path traced by the nonzero roots of a lifted path.
template <typename Real>
SampledPath<Real> roots_vpath(const PolyPath<Real>& pp) {
    SampledPath<Real> out;
    out.space = PathSpace::Vn;
    out.ts = pp.ts;
    out.samples.reserve(pp.roots.size());
    for (const auto& r : pp.roots)
        out.samples.emplace_back(r.begin() + 1, r.end());
    return out;
}

template <typename Real>
int index_in_fiber(const std::vector<MonicPoly<Real>>& fiber,
                   const std::vector<std::complex<Real>>& crit_points, Real tol) {
    Real best = std::numeric_limits<Real>::infinity();
    int pick = -1;
    for (int i = 0; i < static_cast<int>(fiber.size()); ++i) {
        Real d = tuple_distance(fiber[i].crit_points, crit_points);
        if (d < best) {
            best = d;
            pick = i;
        }
    }
    Real scale = Real(1);
    for (const auto& z : crit_points) scale = std::max(scale, std::abs(z));
    if (best > tol * scale * static_cast<Real>(crit_points.size()))
        throw EndpointUnmatched("endpoint is not in the enumerated fiber");
    return pick;
}

}  // namespace detail

/// The tower action: the first digit moves by the permutation representation;
/// the second by monodromy over the labeled fiber; deeper digits by lifting
/// the actual lifted paths again through the covering map.
template <typename Real>
AdicPrefix phi_apply(const BraidWord& w, const AdicPrefix& a, const LabeledFiber<Real>& fiber,
                     const PhiOptions& opts = {}, const Tolerances<Real>& tol = {}) {
    if (a.kind != AdicPrefix::Kind::Phi) throw Error("phi_apply expects a phi prefix");
    a.validate();
    const int depth = static_cast<int>(a.digits.size());
    if (depth > opts.max_depth) throw DepthExceeded("phi depth exceeds the configured guard");
    if (a.n != fiber.n) throw Error("prefix and fiber disagree on n");

    AdicPrefix out = a;
    int xi = fiber.x_of_class[a.digits[0]];
    int xi_out = perm_rep(w)(xi - 1) + 1;
    out.digits[0] = fiber.class_of_x(xi_out);
    if (depth == 1) return out;

    auto loop = detail::word_loop(w, fiber.base, opts.loop_samples, tol.sep);
    auto vpath = project_to_V(loop, fiber.strand_of_x[xi - 1], tol.sep);

    auto labels = fiber.labels_over_x(xi);
    int start_label = labels[a.digits[1]];
    auto pp = lift_path(vpath, start_label, fiber, opts.lift, tol);
    auto labels_out = fiber.labels_over_x(xi_out);
    out.digits[1] =
        std::find(labels_out.begin(), labels_out.end(), pp.end_label) - labels_out.begin();

    for (int level = 2; level < depth; ++level) {
        auto next_vpath = detail::roots_vpath(pp);
        auto start_fiber = detail::ordered_fiber(next_vpath.samples.front(), opts.fiber, tol);
        auto end_fiber = detail::ordered_fiber(next_vpath.samples.back(), opts.fiber, tol);
        const auto& start_poly = start_fiber[a.digits[level]];
        pp = lift_path_from(next_vpath, start_poly, opts.lift, tol);
        out.digits[level] =
            detail::index_in_fiber(end_fiber, pp.crit_points.back(), Real(opts.lift.endpoint_tol));
    }
    return out;
}

/// Number of points at tower level j (prefix length j + 1).
inline std::uint64_t phi_level_size(int n, int level) {
    std::uint64_t m = 1;
    for (int k = 0; k + 1 < n; ++k) m *= n;
    std::uint64_t total = n;
    for (int j = 0; j < level; ++j) total *= m;
    return total;
}

/// Full permutation of the level-j tower points under a word, by running
/// phi_apply on every prefix of length j + 1.
template <typename Real>
Perm phi_level_perm(const BraidWord& w, int level, const LabeledFiber<Real>& fiber,
                    const PhiOptions& opts = {}, const Tolerances<Real>& tol = {}) {
    const int n = fiber.n;
    long long m = 1;
    for (int k = 0; k + 1 < n; ++k) m *= n;
    const std::uint64_t total = phi_level_size(n, level);
    if (level + 1 > opts.max_depth) throw DepthExceeded("phi level exceeds the depth guard");

    auto encode = [&](const AdicPrefix& p) {
        long long acc = 0, scale = 1;
        for (std::size_t k = 0; k < p.digits.size(); ++k) {
            acc += p.digits[k] * scale;
            scale *= p.radix(k);
        }
        return acc;
    };

    std::vector<int> img(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        AdicPrefix p{AdicPrefix::Kind::Phi, n, {}};
        long long rest = static_cast<long long>(code);
        p.digits.push_back(rest % n);
        rest /= n;
        for (int k = 0; k < level; ++k) {
            p.digits.push_back(rest % m);
            rest /= m;
        }
        img[code] = static_cast<int>(encode(phi_apply(w, p, fiber, opts, tol)));
    }
    return Perm(std::move(img));
}

template <typename Real>
bool kernel_membership_phi(const BraidWord& w, int level, const LabeledFiber<Real>& fiber,
                           const PhiOptions& opts = {}, const Tolerances<Real>& tol = {}) {
    return phi_level_perm(w, level, fiber, opts, tol).is_identity();
}

template <typename Real>
std::vector<Perm> phi_level_generators(int level, const LabeledFiber<Real>& fiber,
                                       const PhiOptions& opts = {},
                                       const Tolerances<Real>& tol = {}) {
    std::vector<Perm> gens;
    for (int g = 1; g < fiber.n; ++g)
        gens.push_back(phi_level_perm(BraidWord::generator(fiber.n, g), level, fiber, opts, tol));
    return gens;
}

}  // namespace braidcover
