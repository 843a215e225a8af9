#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "braidcover/action.hpp"
#include "braidcover/laurent.hpp"

namespace braidcover {

/// The nested lift sequence of a word: level j holds size^j words; the lifts
/// of level-j entry i sit at the indices congruent to i mod size^j.
struct LiftSequence {
    BraidWord root;
    std::vector<std::vector<BraidWord>> levels;
    Embedding embedding = Embedding::Roots;
    std::uint64_t fiber_hash = 0;
};

inline LiftSequence lift_sequence(const BraidWord& w, int depth, const GeneratorTables& tables,
                                  std::uint64_t guard = 1000000) {
    LiftSequence seq;
    seq.root = w;
    seq.embedding = tables.embedding();
    seq.fiber_hash = tables.fiber_hash();
    for (int j = 1; j <= depth; ++j) seq.levels.push_back(level_entries(w, j, tables, guard));
    return seq;
}

/// Cycle data of one level permutation: each cycle paired with the loop braid
/// obtained by concatenating the lifted entries along the cycle (the entry at
/// the cycle's minimal label is traversed first, hence written rightmost).
struct ConjugacyCycleData {
    int level = 0;
    std::vector<std::pair<std::vector<int>, BraidWord>> cycles;
};

inline std::vector<ConjugacyCycleData> conjugacy_sequence(const BraidWord& w, int depth,
                                                          const GeneratorTables& tables,
                                                          std::uint64_t guard = 1000000) {
    std::vector<ConjugacyCycleData> out;
    for (int j = 1; j <= depth; ++j) {
        ConjugacyCycleData data;
        data.level = j;
        Perm rho = rho_level(w, j, tables, guard);
        auto entries = level_entries(w, j, tables, guard);
        for (auto& cyc : rho.cycles(true)) {
            BraidWord loop(tables.n());
            for (int label : cyc) loop = entries[label] * loop;
            data.cycles.emplace_back(cyc, free_reduce(loop));
        }
        out.push_back(std::move(data));
    }
    return out;
}

enum class BaseInvariant { ExponentSum, CycleType, BurauTrace };

inline const char* to_string(BaseInvariant b) {
    switch (b) {
        case BaseInvariant::ExponentSum: return "exponent_sum";
        case BaseInvariant::CycleType: return "cycle_type";
        default: return "burau_trace";
    }
}

/// Canonical string rendering of a base invariant of one braid.
inline std::string evaluate_invariant(const BraidWord& w, BaseInvariant base) {
    switch (base) {
        case BaseInvariant::ExponentSum:
            return std::to_string(exponent_sum(w));
        case BaseInvariant::CycleType: {
            auto type = perm_rep(w).cycle_type();
            std::ostringstream os;
            for (std::size_t i = 0; i < type.size(); ++i) os << (i ? "," : "") << type[i];
            return os.str();
        }
        case BaseInvariant::BurauTrace:
            return burau_reduced(w).trace().str();
    }
    return {};
}

/// The base invariant evaluated on the root word and every sequence entry.
/// levels[0] holds the root value; levels[j] the level-j entries.
inline std::vector<std::vector<std::string>> invariant_stream(const BraidWord& w, int depth,
                                                              BaseInvariant base,
                                                              const GeneratorTables& tables,
                                                              std::uint64_t guard = 1000000) {
    std::vector<std::vector<std::string>> out;
    out.push_back({evaluate_invariant(w, base)});
    auto seq = lift_sequence(w, depth, tables, guard);
    for (const auto& level : seq.levels) {
        std::vector<std::string> values;
        values.reserve(level.size());
        for (const auto& entry : level) values.push_back(evaluate_invariant(entry, base));
        out.push_back(std::move(values));
    }
    return out;
}

struct DistinguishVerdict {
    bool distinguished = false;
    int level = -1;                  // 0 means the root word itself
    BaseInvariant via = BaseInvariant::ExponentSum;
    std::string detail;
};

/// Scans cheap invariants level by level for the first separation. Sequences
/// are only comparable over the same fiber; words must share a strand count.
inline DistinguishVerdict distinguish(const BraidWord& a, const BraidWord& b, int depth,
                                      const GeneratorTables& tables,
                                      std::uint64_t guard = 1000000) {
    if (a.strands() != b.strands())
        throw StrandMismatch("distinguish: different strand counts");
    const BaseInvariant bases[] = {BaseInvariant::ExponentSum, BaseInvariant::CycleType,
                                   BaseInvariant::BurauTrace};
    for (int level = 0; level <= depth; ++level) {
        for (BaseInvariant base : bases) {
            std::vector<std::string> va, vb;
            if (level == 0) {
                va = {evaluate_invariant(a, base)};
                vb = {evaluate_invariant(b, base)};
            } else {
                auto ea = level_entries(a, level, tables, guard);
                auto eb = level_entries(b, level, tables, guard);
                for (const auto& e : ea) va.push_back(evaluate_invariant(e, base));
                for (const auto& e : eb) vb.push_back(evaluate_invariant(e, base));
            }
            if (va != vb) {
                DistinguishVerdict v;
                v.distinguished = true;
                v.level = level;
                v.via = base;
                for (std::size_t i = 0; i < va.size(); ++i)
                    if (va[i] != vb[i]) {
                        v.detail = "entry " + std::to_string(i) + ": " + va[i] + " vs " + vb[i];
                        break;
                    }
                return v;
            }
        }
        // permutation-level separation is decisive as well
        if (level >= 1 && rho_level(a, level, tables, guard) != rho_level(b, level, tables, guard)) {
            DistinguishVerdict v;
            v.distinguished = true;
            v.level = level;
            v.via = BaseInvariant::CycleType;
            v.detail = "level permutations differ";
            return v;
        }
    }
    DistinguishVerdict v;
    v.detail = "indistinguishable up to depth " + std::to_string(depth);
    return v;
}

/// Sum of exponent sums over one level of the lift sequence; conserved across
/// isotopic representatives of the root word.
inline long long level_exponent_total(const BraidWord& w, int level,
                                      const GeneratorTables& tables,
                                      std::uint64_t guard = 1000000) {
    long long total = 0;
    for (const auto& e : level_entries(w, level, tables, guard)) total += exponent_sum(e);
    return total;
}

}  // namespace braidcover
