#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "braidcover/braid.hpp"

namespace braidcover {

/// Closure components as sets of strand indices: the cycles of perm_rep,
/// numbered by their smallest strand.
inline std::vector<std::vector<int>> closure_components(const BraidWord& w) {
    auto cycles = perm_rep(w).cycles(true);
    for (auto& c : cycles) std::sort(c.begin(), c.end());
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

/// Pairwise linking numbers of the closure: lk(C_i, C_j) is half the signed
/// count of crossings between strands of C_i and strands of C_j.
/// Keys are pairs of component indices (i < j) into closure_components(w).
inline std::map<std::pair<int, int>, int> linking_numbers(const BraidWord& w) {
    const int n = w.strands();
    auto comps = closure_components(w);
    std::vector<int> comp_of(n);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int s : comps[c]) comp_of[s] = c;

    // occupant[p] = which strand currently sits at position p
    std::vector<int> occupant(n);
    for (int i = 0; i < n; ++i) occupant[i] = i;

    std::map<std::pair<int, int>, int> twice_lk;
    for (int i = 0; i + 1 < static_cast<int>(comps.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(comps.size()); ++j) twice_lk[{i, j}] = 0;

    for (const Letter& l : w.letters()) {
        int a = occupant[l.index - 1];
        int b = occupant[l.index];
        int ca = comp_of[a], cb = comp_of[b];
        if (ca != cb) twice_lk[{std::min(ca, cb), std::max(ca, cb)}] += l.sign;
        std::swap(occupant[l.index - 1], occupant[l.index]);
    }

    std::map<std::pair<int, int>, int> lk;
    for (auto& [key, v] : twice_lk) lk[key] = v / 2;
    return lk;
}

inline long long linking_sum(const BraidWord& w) {
    long long s = 0;
    for (auto& [key, v] : linking_numbers(w)) s += v;
    return s;
}

/// True when no generator appears with both signs in the literal word.
inline bool homogeneous_check(const BraidWord& w) {
    std::map<int, int> sign_seen;
    for (const Letter& l : w.letters()) {
        auto it = sign_seen.find(l.index);
        if (it == sign_seen.end())
            sign_seen[l.index] = l.sign;
        else if (it->second != l.sign)
            return false;
    }
    return true;
}

}  // namespace braidcover
