#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidcover/braid.hpp"
#include "braidcover/errors.hpp"
#include "braidcover/fiber.hpp"
#include "braidcover/lift.hpp"
#include "braidcover/perm.hpp"

namespace braidcover {

/// One level of lifting data for a braid word: the lifted braid starting at
/// each fiber label, and the endpoint permutation of the labels.
struct WreathTable {
    int n = 0;
    std::vector<BraidWord> lifted;
    Perm perm;
    Embedding embedding = Embedding::Roots;
    std::uint64_t fiber_hash = 0;

    int size() const { return static_cast<int>(lifted.size()); }

    static WreathTable identity(int n, int size, Embedding emb, std::uint64_t hash) {
        WreathTable t;
        t.n = n;
        t.lifted.assign(size, BraidWord(n));
        t.perm = Perm::identity(size);
        t.embedding = emb;
        t.fiber_hash = hash;
        return t;
    }
};

/// Wreath product: entry_i(u * v) = u_{perm(v)(i)} concatenated before v_i,
/// perm(u * v) = perm(u) o perm(v). The rightmost factor acts first.
inline WreathTable table_product(const WreathTable& u, const WreathTable& v) {
    if (u.size() != v.size() || u.n != v.n) throw Error("table_product: shape mismatch");
    if (u.fiber_hash != v.fiber_hash || u.embedding != v.embedding)
        throw Error("table_product: tables come from different fibers");
    WreathTable out;
    out.n = u.n;
    out.embedding = u.embedding;
    out.fiber_hash = u.fiber_hash;
    out.perm = compose(u.perm, v.perm);
    out.lifted.reserve(u.size());
    for (int i = 0; i < u.size(); ++i)
        out.lifted.push_back(free_reduce(u.lifted[v.perm(i)] * v.lifted[i]));
    return out;
}

inline WreathTable table_inverse(const WreathTable& t) {
    WreathTable out;
    out.n = t.n;
    out.embedding = t.embedding;
    out.fiber_hash = t.fiber_hash;
    out.perm = t.perm.inverse();
    out.lifted.resize(t.size());
    for (int i = 0; i < t.size(); ++i) out.lifted[i] = t.lifted[out.perm(i)].inverse();
    return out;
}

/// Lifts the generator loop from every fiber label.
template <typename Real>
WreathTable generator_table(const LabeledFiber<Real>& fiber, int gen, Embedding emb,
                            int samples = 100, const LiftOptions& opts = {},
                            const Tolerances<Real>& tol = {}) {
    WreathTable t;
    t.n = fiber.n;
    t.embedding = emb;
    t.fiber_hash = fiber.content_hash;
    auto loop = generator_loop(fiber.n, gen, fiber.base, samples, tol.sep);
    const int total = static_cast<int>(fiber.points.size());
    std::vector<int> endpoint(total);
    t.lifted.resize(total);
    for (int label = 0; label < total; ++label) {
        int xi = fiber.x_index_of_label(label);
        auto vp = project_to_V(loop, fiber.strand_of_x[xi - 1], tol.sep);
        auto pp = lift_path(vp, label, fiber, opts, tol);
        endpoint[label] = pp.end_label;
        t.lifted[label] = braid_from_path(pp, emb, opts);
    }
    t.perm = Perm(endpoint);
    return t;
}

/// Tables for every generator of B_n over one fiber, with an h-composition
/// cache keyed by word text.
class GeneratorTables {
  public:
    GeneratorTables() = default;

    template <typename Real>
    GeneratorTables(const LabeledFiber<Real>& fiber, Embedding emb, int samples = 100,
                    const LiftOptions& opts = {}, const Tolerances<Real>& tol = {}) {
        n_ = fiber.n;
        emb_ = emb;
        hash_ = fiber.content_hash;
        for (int gen = 1; gen < fiber.n; ++gen)
            tables_.push_back(generator_table(fiber, gen, emb, samples, opts, tol));
        size_ = tables_.empty() ? 0 : tables_[0].size();
    }

    static GeneratorTables from_tables(std::vector<WreathTable> tables) {
        if (tables.empty()) throw MissingTable("no generator tables given");
        GeneratorTables g;
        g.n_ = tables[0].n;
        g.emb_ = tables[0].embedding;
        g.hash_ = tables[0].fiber_hash;
        g.size_ = tables[0].size();
        g.tables_ = std::move(tables);
        return g;
    }

    int n() const { return n_; }
    int size() const { return size_; }
    Embedding embedding() const { return emb_; }
    std::uint64_t fiber_hash() const { return hash_; }

    const WreathTable& generator(int gen) const {
        if (gen < 1 || gen > static_cast<int>(tables_.size()))
            throw MissingTable("no table for generator " + std::to_string(gen));
        return tables_[gen - 1];
    }
    const std::vector<WreathTable>& all() const { return tables_; }

    /// Wreath image of a word; memoized across calls.
    const WreathTable& h_of_word(const BraidWord& w) const {
        std::string key = w.str();
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        WreathTable acc = WreathTable::identity(n_, size_, emb_, hash_);
        for (const Letter& l : w.letters()) {
            const WreathTable& g = generator(l.index);
            acc = table_product(acc, l.sign > 0 ? g : table_inverse(g));
        }
        return memo_.emplace(std::move(key), std::move(acc)).first->second;
    }

  private:
    int n_ = 0;
    int size_ = 0;
    Embedding emb_ = Embedding::Roots;
    std::uint64_t hash_ = 0;
    std::vector<WreathTable> tables_;
    mutable std::unordered_map<std::string, WreathTable> memo_;
};

inline WreathTable h_of_word(const BraidWord& w, const GeneratorTables& tables) {
    return tables.h_of_word(w);
}

/// The lifted words at level j, indexed 0 .. size^j - 1: level 1 entries are
/// h(w).lifted; the lift of entry i at the next level starting at label k
/// lands at index size^j * k + i.
inline std::vector<BraidWord> level_entries(const BraidWord& w, int level,
                                            const GeneratorTables& tables,
                                            std::uint64_t guard = 1000000) {
    if (level < 1) throw Error("level must be >= 1");
    const std::uint64_t m = tables.size();
    std::uint64_t count = m;
    for (int j = 1; j < level; ++j) {
        count *= m;
        if (count > guard) throw EnumerationBudgetExceeded("level entry count over budget", count);
    }
    std::vector<BraidWord> cur = tables.h_of_word(w).lifted;
    std::uint64_t stride = m;
    for (int j = 2; j <= level; ++j) {
        std::vector<BraidWord> next(stride * m, BraidWord(tables.n()));
        for (std::uint64_t i = 0; i < stride; ++i) {
            const WreathTable& h = tables.h_of_word(cur[i]);
            for (std::uint64_t k = 0; k < m; ++k) next[stride * k + i] = h.lifted[k];
        }
        cur = std::move(next);
        stride *= m;
    }
    return cur;
}

/// The level-j permutation on size^j points, built inductively:
/// size^j k + i  ->  size^j perm(h(B_{j,i}))(k) + rho_j(i).
inline Perm rho_level(const BraidWord& w, int level, const GeneratorTables& tables,
                      std::uint64_t guard = 1000000) {
    if (level < 1) throw Error("level must be >= 1");
    const std::uint64_t m = tables.size();
    std::uint64_t count = m;
    for (int j = 1; j < level; ++j) {
        count *= m;
        if (count > guard)
            throw EnumerationBudgetExceeded("rho level point count over budget", count);
    }
    std::vector<int> rho = tables.h_of_word(w).perm.images();
    std::vector<BraidWord> entries = tables.h_of_word(w).lifted;
    std::uint64_t stride = m;
    for (int j = 2; j <= level; ++j) {
        std::vector<int> next(stride * m);
        std::vector<BraidWord> next_entries;
        bool want_entries = (j < level);
        if (want_entries) next_entries.assign(stride * m, BraidWord(tables.n()));
        for (std::uint64_t i = 0; i < stride; ++i) {
            const WreathTable& h = tables.h_of_word(entries[i]);
            for (std::uint64_t k = 0; k < m; ++k) {
                next[stride * k + i] =
                    static_cast<int>(stride) * h.perm(static_cast<int>(k)) + rho[i];
                if (want_entries) next_entries[stride * k + i] = h.lifted[k];
            }
        }
        rho = std::move(next);
        entries = std::move(next_entries);
        stride *= m;
    }
    return Perm(std::move(rho));
}

/// A finite prefix of an adic integer in the digit radix of the chosen
/// action: psi uses base n^n per digit; phi uses Z/n for the first digit and
/// Z/(n^{n-1}) for the deeper ones.
struct AdicPrefix {
    enum class Kind { Psi, Phi };
    Kind kind = Kind::Psi;
    int n = 2;
    std::vector<long long> digits;

    long long radix(std::size_t position) const {
        long long nn = 1;
        if (kind == Kind::Psi) {
            for (int k = 0; k < n; ++k) nn *= n;
            return nn;
        }
        if (position == 0) return n;
        for (int k = 0; k + 1 < n; ++k) nn *= n;
        return nn;
    }

    void validate() const {
        if (digits.empty()) throw Error("adic prefix needs at least one digit");
        for (std::size_t p = 0; p < digits.size(); ++p)
            if (digits[p] < 0 || digits[p] >= radix(p))
                throw Error("adic digit out of range");
    }

    /// Compatible value sequence a_j = value mod radix^j.
    std::vector<long long> cumulative() const {
        std::vector<long long> out;
        long long acc = 0, scale = 1;
        for (std::size_t p = 0; p < digits.size(); ++p) {
            acc += digits[p] * scale;
            scale *= radix(p);
            out.push_back(acc);
        }
        return out;
    }

    static AdicPrefix psi_from_cumulative(int n, const std::vector<long long>& a) {
        AdicPrefix out{Kind::Psi, n, {}};
        long long scale = 1, prev = 0;
        for (long long aj : a) {
            out.digits.push_back((aj - prev) / scale);
            prev = aj;
            scale *= out.radix(0);
        }
        out.validate();
        return out;
    }
};

/// psi action on a prefix: digit j moves by the level permutation restricted
/// along the prefix chain, so the cost is linear in depth and word length.
inline AdicPrefix psi_apply(const BraidWord& w, const AdicPrefix& a,
                            const GeneratorTables& tables) {
    if (a.kind != AdicPrefix::Kind::Psi) throw Error("psi_apply expects a psi prefix");
    a.validate();
    AdicPrefix out = a;
    BraidWord chain = w;
    for (std::size_t p = 0; p < a.digits.size(); ++p) {
        const WreathTable& h = tables.h_of_word(chain);
        int d = static_cast<int>(a.digits[p]);
        out.digits[p] = h.perm(d);
        chain = h.lifted[d];
    }
    return out;
}

/// Membership in the level-j kernel H_j: the level permutation is trivial.
inline bool kernel_membership_psi(const BraidWord& w, int level, const GeneratorTables& tables,
                                  std::uint64_t guard = 1000000) {
    return rho_level(w, level, tables, guard).is_identity();
}

/// Order of the permutation group generated by `gens` (breadth-first closure).
inline std::uint64_t image_order(const std::vector<Perm>& gens, std::uint64_t budget = 2000000) {
    if (gens.empty()) return 1;
    std::set<std::vector<int>> seen;
    std::vector<Perm> frontier{Perm::identity(gens[0].size())};
    seen.insert(frontier[0].images());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier) {
            for (const Perm& g : gens) {
                for (const Perm& q : {compose(g, p), compose(g.inverse(), p)}) {
                    if (seen.insert(q.images()).second) {
                        next.push_back(q);
                        if (seen.size() > budget)
                            throw EnumerationBudgetExceeded("group closure over budget",
                                                            seen.size());
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

/// Orbit decomposition of {0..m-1} under the generators (and inverses).
inline std::vector<std::vector<int>> orbit_partition(const std::vector<Perm>& gens) {
    if (gens.empty()) return {};
    const int m = gens[0].size();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& g : gens)
        for (int i = 0; i < m; ++i) {
            int a = find(i), b = find(g(i));
            if (a != b) parent[a] = b;
        }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

/// Level-j psi permutations of the generators, for orbit and order scans.
inline std::vector<Perm> psi_level_generators(int level, const GeneratorTables& tables,
                                              std::uint64_t guard = 1000000) {
    std::vector<Perm> gens;
    for (int g = 1; g < tables.n(); ++g)
        gens.push_back(rho_level(BraidWord::generator(tables.n(), g), level, tables, guard));
    return gens;
}

}  // namespace braidcover
