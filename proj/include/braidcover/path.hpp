#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "braidcover/errors.hpp"
#include "braidcover/poly.hpp"

namespace braidcover {

enum class PathSpace { Cn, Vn };

/// A sampled path of configuration tuples with consistently matched entries:
/// slot k of consecutive samples is the same strand.
template <typename Real = double>
struct SampledPath {
    PathSpace space = PathSpace::Cn;
    std::vector<Real> ts;                                  // strictly increasing, 0..1
    std::vector<std::vector<std::complex<Real>>> samples;  // one tuple per t
    bool closed = false;

    int strands() const { return samples.empty() ? 0 : static_cast<int>(samples[0].size()); }
    std::size_t size() const { return ts.size(); }

    void validate() const {
        if (ts.size() < 2 || ts.size() != samples.size()) throw Error("path needs >= 2 samples");
        if (ts.front() != Real(0) || ts.back() != Real(1)) throw Error("path must run over [0,1]");
        for (std::size_t s = 1; s < ts.size(); ++s) {
            if (!(ts[s] > ts[s - 1])) throw Error("path times must increase");
            if (samples[s].size() != samples[0].size()) throw Error("ragged path samples");
            Real min_pair = std::numeric_limits<Real>::infinity();
            const auto& prev = samples[s - 1];
            for (std::size_t i = 0; i < prev.size(); ++i)
                for (std::size_t j = i + 1; j < prev.size(); ++j)
                    min_pair = std::min(min_pair, std::abs(prev[i] - prev[j]));
            for (std::size_t k = 0; k < prev.size(); ++k)
                if (std::abs(samples[s][k] - prev[k]) >= min_pair / Real(2))
                    throw Error("path samples too coarse for strand matching");
        }
    }
};

/// Loop in Cn exchanging the two strands with the i-th and (i+1)-th smallest
/// real parts by a half turn about their midpoint; all other strands rest.
template <typename Real>
SampledPath<Real> generator_loop(int n, int i, const std::vector<std::complex<Real>>& base,
                                 int m = 100, Real sep = Real(1e-8)) {
    using C = std::complex<Real>;
    if (static_cast<int>(base.size()) != n) throw Error("base size mismatch");
    if (i < 1 || i >= n) throw Error("generator index out of range");
    std::vector<int> by_re(n);
    std::iota(by_re.begin(), by_re.end(), 0);
    std::sort(by_re.begin(), by_re.end(),
              [&](int a, int b) { return base[a].real() < base[b].real(); });
    for (int k = 0; k + 1 < n; ++k)
        if (std::abs(base[by_re[k]].real() - base[by_re[k + 1]].real()) <= sep)
            throw NonGenericBase("base real parts are not distinct");

    const int a = by_re[i - 1], b = by_re[i];
    const C mid = (base[a] + base[b]) / Real(2);
    const C half = (base[b] - base[a]) / Real(2);
    const Real pi = std::numbers::pi_v<Real>;

    SampledPath<Real> path;
    path.space = PathSpace::Cn;
    path.closed = true;  // closed as an unordered configuration
    for (int s = 0; s <= m; ++s) {
        Real t = Real(s) / Real(m);
        C rot = std::polar(Real(1), pi * t);
        auto tuple = base;
        tuple[b] = mid + half * rot;
        tuple[a] = mid - half * rot;
        path.ts.push_back(t);
        path.samples.push_back(std::move(tuple));
    }
    return path;
}

/// Pointwise differences z_k(t) - z_i(t), k != i, preserving slot order.
template <typename Real>
SampledPath<Real> project_to_V(const SampledPath<Real>& path, int strand,
                               Real sep = Real(1e-8)) {
    if (path.space != PathSpace::Cn) throw Error("project_to_V expects a Cn path");
    if (strand < 0 || strand >= path.strands()) throw Error("strand out of range");
    SampledPath<Real> out;
    out.space = PathSpace::Vn;
    out.ts = path.ts;
    out.closed = path.closed;
    for (const auto& tuple : path.samples) {
        std::vector<std::complex<Real>> diff;
        for (int k = 0; k < static_cast<int>(tuple.size()); ++k)
            if (k != strand) diff.push_back(tuple[k] - tuple[strand]);
        ConfigPoint<Real> v{ConfigPoint<Real>::Kind::Vn, diff};
        if (!v.valid(sep)) throw LeavesVn("projected path leaves Vn");
        out.samples.push_back(std::move(diff));
    }
    return out;
}

/// Joins b after a; b's strand slots are reordered to continue a's endpoint.
template <typename Real>
SampledPath<Real> concat_paths(const SampledPath<Real>& a, const SampledPath<Real>& b) {
    using C = std::complex<Real>;
    if (a.space != b.space) throw Error("concat: space mismatch");
    if (a.strands() != b.strands()) throw Error("concat: strand count mismatch");
    const auto& end = a.samples.back();
    const auto& start = b.samples.front();
    const int k = static_cast<int>(end.size());

    // greedy nearest matching is fine here; starts must agree point-for-point
    std::vector<int> slot_of(k, -1);
    std::vector<char> used(k, 0);
    for (int i = 0; i < k; ++i) {
        Real best = std::numeric_limits<Real>::infinity();
        int pick = -1;
        for (int j = 0; j < k; ++j) {
            if (used[j]) continue;
            Real d = std::abs(end[i] - start[j]);
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        if (best > Real(1e-6) * (Real(1) + std::abs(end[i])))
            throw Error("concat: endpoint configurations do not match");
        slot_of[i] = pick;
        used[pick] = 1;
    }

    SampledPath<Real> out;
    out.space = a.space;
    out.ts = a.ts;
    out.samples = a.samples;
    for (auto& t : out.ts) t *= Real(0.5);
    for (std::size_t s = 1; s < b.size(); ++s) {
        out.ts.push_back(Real(0.5) + b.ts[s] / Real(2));
        std::vector<C> tuple(k);
        for (int i = 0; i < k; ++i) tuple[i] = b.samples[s][slot_of[i]];
        out.samples.push_back(std::move(tuple));
    }
    out.closed =
        tuple_distance(out.samples.back(), out.samples.front()) < Real(1e-7) * Real(k);
    {
        // normalize times exactly to [0,1]
        Real last = out.ts.back();
        for (auto& t : out.ts) t /= last;
        out.ts.front() = Real(0);
        out.ts.back() = Real(1);
    }
    return out;
}

template <typename Real>
SampledPath<Real> reverse_path(const SampledPath<Real>& p) {
    SampledPath<Real> out = p;
    std::reverse(out.samples.begin(), out.samples.end());
    for (std::size_t s = 0; s < p.ts.size(); ++s) out.ts[s] = Real(1) - p.ts[p.ts.size() - 1 - s];
    return out;
}

template <typename Real>
SampledPath<Real> power_path(const SampledPath<Real>& p, int k) {
    if (k < 1) throw Error("power_path needs k >= 1");
    SampledPath<Real> out = p;
    for (int i = 1; i < k; ++i) out = concat_paths(out, p);
    return out;
}

enum class ArgVerdict { Increasing, Decreasing, Constant, Fails };

inline const char* to_string(ArgVerdict v) {
    switch (v) {
        case ArgVerdict::Increasing: return "increasing";
        case ArgVerdict::Decreasing: return "decreasing";
        case ArgVerdict::Constant: return "constant";
        default: return "fails";
    }
}

/// Finite-difference verdict on the argument of each strand of a Vn path.
/// Any single step larger than pi/2 is treated as untrustworthy (the strand
/// passed too close to 0 for the wrap direction to be known).
template <typename Real>
std::vector<ArgVerdict> check_argument_monotone(const SampledPath<Real>& vpath,
                                                Real arg_tol = Real(1e-7)) {
    if (vpath.space != PathSpace::Vn) throw Error("argument check expects a Vn path");
    const int k = vpath.strands();
    const Real pi = std::numbers::pi_v<Real>;
    std::vector<ArgVerdict> verdicts(k, ArgVerdict::Constant);
    for (int s = 0; s < k; ++s) {
        bool pos = false, neg = false, broken = false;
        for (std::size_t j = 1; j < vpath.size() && !broken; ++j) {
            Real d = std::arg(vpath.samples[j][s] / vpath.samples[j - 1][s]);
            if (std::abs(d) > pi / 2) broken = true;
            else if (d > arg_tol) pos = true;
            else if (d < -arg_tol) neg = true;
        }
        if (broken || (pos && neg)) verdicts[s] = ArgVerdict::Fails;
        else if (pos) verdicts[s] = ArgVerdict::Increasing;
        else if (neg) verdicts[s] = ArgVerdict::Decreasing;
        else verdicts[s] = ArgVerdict::Constant;
    }
    return verdicts;
}

}  // namespace braidcover
