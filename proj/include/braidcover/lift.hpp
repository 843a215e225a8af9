#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "braidcover/braid.hpp"
#include "braidcover/errors.hpp"
#include "braidcover/fiber.hpp"
#include "braidcover/path.hpp"

namespace braidcover {

enum class Embedding { Roots, CriticalPoints };

inline const char* to_string(Embedding e) {
    return e == Embedding::Roots ? "roots" : "critical_points";
}

struct LiftOptions {
    double residual = 1e-10;    // Newton residual per accepted step
    double h_min = 1e-6;        // smallest substep within one sample interval
    double endpoint_tol = 1e-6; // label matching distance at the endpoint
    bool crossing_flip = false; // global crossing-sign flip
};

/// A lifted path in Z_n: for every accepted parameter value, the tracked
/// critical-point tuple (slot order fixed at t=0 and continued) and the
/// tracked roots (slot 0 is the zero root).
template <typename Real = double>
struct PolyPath {
    std::vector<Real> ts;
    std::vector<std::vector<std::complex<Real>>> crit_points;
    std::vector<std::vector<std::complex<Real>>> roots;
    int start_label = -1;
    int end_label = -1;
};

namespace detail {

/// Match `fresh` against `prev` slotwise (nearest neighbour, injective).
template <typename Real>
std::vector<std::complex<Real>> match_tracked(const std::vector<std::complex<Real>>& prev,
                                              const std::vector<std::complex<Real>>& fresh) {
    using C = std::complex<Real>;
    const int k = static_cast<int>(prev.size());
    std::vector<C> out(k);
    std::vector<char> used(fresh.size(), 0);
    for (int i = 0; i < k; ++i) {
        Real best = std::numeric_limits<Real>::infinity();
        int pick = -1;
        for (int j = 0; j < static_cast<int>(fresh.size()); ++j) {
            if (used[j]) continue;
            Real d = std::abs(prev[i] - fresh[j]);
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        used[pick] = 1;
        out[i] = fresh[pick];
    }
    return out;
}

}  // namespace detail

/// Tracks the critical-point tuple along a sampled Vn path starting from the
/// polynomial `start`. Secant predictor, Newton corrector, substep halving on
/// corrector failure (doubling again after a few easy steps).
template <typename Real>
PolyPath<Real> lift_path_from(const SampledPath<Real>& vpath, const MonicPoly<Real>& start,
                              const LiftOptions& opts = {}, const Tolerances<Real>& tol = {}) {
    using C = std::complex<Real>;
    if (vpath.space != PathSpace::Vn) throw Error("lift expects a Vn path");
    const int m = vpath.strands();
    if (static_cast<int>(start.crit_points.size()) != m)
        throw Error("start polynomial degree does not match the path");

    // fix the critical-value <-> path-slot pairing at t = 0
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    Real best = std::numeric_limits<Real>::infinity();
    std::vector<int> best_assign;
    do {
        Real s = Real(0);
        for (int k = 0; k < m; ++k) s += std::abs(start.crit_values[k] - vpath.samples[0][idx[k]]);
        if (s < best) {
            best = s;
            best_assign = idx;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    Real scale = Real(1);
    for (const auto& v : vpath.samples[0]) scale = std::max(scale, std::abs(v));
    if (best > Real(1e-5) * scale * m)
        throw Error("start polynomial does not lie over the path's start point");

    std::vector<C> c(m);  // slot k of c pairs with slot k of the path samples
    for (int k = 0; k < m; ++k) c[best_assign[k]] = start.crit_points[k];

    PolyPath<Real> out;
    out.ts.push_back(vpath.ts.front());
    out.crit_points.push_back(c);
    {
        auto p0 = poly_from_critical_points(c, tol);
        out.roots.push_back(p0.roots);
    }

    std::vector<C> c_prev_step = c;  // for the secant predictor
    bool have_prev = false;

    for (std::size_t seg = 1; seg < vpath.size(); ++seg) {
        const auto& v0 = vpath.samples[seg - 1];
        const auto& v1 = vpath.samples[seg];
        Real lambda = Real(0);
        Real h = Real(1);
        int easy = 0;
        while (lambda < Real(1)) {
            h = std::min(h, Real(1) - lambda);
            Real next = lambda + h;
            std::vector<C> target(m);
            for (int k = 0; k < m; ++k)
                target[k] = v0[k] * (Real(1) - next) + v1[k] * next;

            std::vector<C> guess(m);
            for (int k = 0; k < m; ++k)
                guess[k] = have_prev ? c[k] + (c[k] - c_prev_step[k]) : c[k];
            std::vector<C> corrected = guess;
            bool ok = newton_critical_system(corrected, target, Real(opts.residual));
            if (ok) {
                // reject if the corrector jumped to a different sheet
                Real move = Real(0), min_pair = std::numeric_limits<Real>::infinity();
                for (int k = 0; k < m; ++k) move = std::max(move, std::abs(corrected[k] - c[k]));
                for (int a = 0; a < m; ++a)
                    for (int b = a + 1; b < m; ++b)
                        min_pair = std::min(min_pair, std::abs(c[a] - c[b]));
                if (m > 1 && move > min_pair / Real(2)) ok = false;
            }
            if (!ok) {
                h /= Real(2);
                easy = 0;
                have_prev = false;
                if (h < Real(opts.h_min))
                    throw PathTrackingFailure("step underflow during path lifting");
                continue;
            }
            c_prev_step = c;
            c = corrected;
            have_prev = true;
            lambda = next;
            if (++easy >= 4) {
                h = std::min(h * Real(2), Real(1));
                easy = 0;
            }

            Real t_here = vpath.ts[seg - 1] + (vpath.ts[seg] - vpath.ts[seg - 1]) * lambda;
            auto poly = poly_from_critical_points(c, tol);
            out.ts.push_back(t_here);
            out.crit_points.push_back(c);
            out.roots.push_back(detail::match_tracked(out.roots.back(), poly.roots));
        }
    }
    return out;
}

/// Lifts a Vn path starting at the given fiber label and matches the endpoint
/// back to a fiber label.
template <typename Real>
PolyPath<Real> lift_path(const SampledPath<Real>& vpath, int start_label,
                         const LabeledFiber<Real>& fiber, const LiftOptions& opts = {},
                         const Tolerances<Real>& tol = {}) {
    PolyPath<Real> pp = lift_path_from(vpath, fiber.points[start_label], opts, tol);
    pp.start_label = start_label;
    const auto& final_c = pp.crit_points.back();
    Real best = std::numeric_limits<Real>::infinity();
    int pick = -1;
    for (int l = 0; l < static_cast<int>(fiber.points.size()); ++l) {
        Real d = tuple_distance(final_c, fiber.points[l].crit_points);
        if (d < best) {
            best = d;
            pick = l;
        }
    }
    Real scale = Real(1);
    for (const auto& z : final_c) scale = std::max(scale, std::abs(z));
    if (best > Real(opts.endpoint_tol) * scale * static_cast<Real>(final_c.size()))
        throw EndpointUnmatched("lift endpoint is not a fiber point");
    pp.end_label = pick;
    return pp;
}

/// Reads the braid word traced by the tracked strand set. Letters are
/// detected as adjacent transpositions of the real-part order; the sign is
/// positive when the strand arriving from the right passes with the larger
/// imaginary part. The word is written with the first crossing rightmost.
template <typename Real>
BraidWord braid_from_path(const PolyPath<Real>& pp, Embedding emb,
                          const LiftOptions& opts = {}) {
    using C = std::complex<Real>;
    std::vector<std::vector<C>> strands;
    if (emb == Embedding::Roots) {
        strands = pp.roots;
    } else {
        strands.reserve(pp.crit_points.size());
        for (const auto& c : pp.crit_points) {
            std::vector<C> s{C(0)};
            s.insert(s.end(), c.begin(), c.end());
            strands.push_back(std::move(s));
        }
    }
    const int n = static_cast<int>(strands[0].size());

    auto order_of = [&](const std::vector<C>& tuple) {
        std::vector<int> ord(n);
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(),
                  [&](int a, int b) { return tuple[a].real() < tuple[b].real(); });
        return ord;
    };

    std::vector<Letter> time_letters;

    // Processes the interval between two tuples, subdividing linearly until
    // each piece contains at most one adjacent transposition.
    auto process = [&](auto&& self, const std::vector<C>& a, const std::vector<C>& b,
                       int depth) -> void {
        auto oa = order_of(a), ob = order_of(b);
        if (oa == ob) return;
        bool adjacent_swap = false;
        int pos = -1;
        for (int k = 0; k + 1 < n; ++k) {
            std::vector<int> swapped = oa;
            std::swap(swapped[k], swapped[k + 1]);
            if (swapped == ob) {
                adjacent_swap = true;
                pos = k;
                break;
            }
        }
        if (!adjacent_swap) {
            if (depth > 48) throw DegenerateProjection("could not isolate crossings");
            std::vector<C> mid(n);
            for (int k = 0; k < n; ++k) mid[k] = (a[k] + b[k]) / Real(2);
            self(self, a, mid, depth + 1);
            self(self, mid, b, depth + 1);
            return;
        }
        int left = oa[pos], right = oa[pos + 1];
        Real d0 = b[left].real() - a[left].real() - (b[right].real() - a[right].real());
        Real gap0 = a[right].real() - a[left].real();
        Real tau = (d0 != Real(0)) ? gap0 / d0 : Real(0.5);
        tau = std::clamp(tau, Real(0), Real(1));
        Real im_left = a[left].imag() + (b[left].imag() - a[left].imag()) * tau;
        Real im_right = a[right].imag() + (b[right].imag() - a[right].imag()) * tau;
        if (std::abs(im_left - im_right) < Real(1e-12) * (Real(1) + std::abs(im_left)))
            throw DegenerateProjection("strands meet at a crossing");
        int sign = (im_right > im_left) ? +1 : -1;
        if (opts.crossing_flip) sign = -sign;
        time_letters.push_back({pos + 1, sign});
    };

    for (std::size_t s = 1; s < strands.size(); ++s)
        process(process, strands[s - 1], strands[s], 0);

    BraidWord w(n);
    for (auto it = time_letters.rbegin(); it != time_letters.rend(); ++it) w.push_back(*it);
    return free_reduce(w);
}

}  // namespace braidcover
