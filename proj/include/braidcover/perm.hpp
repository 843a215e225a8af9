#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "braidcover/errors.hpp"

namespace braidcover {

/// Permutation of {0..m-1}, stored as the image list: img[i] is where i goes.
class Perm {
  public:
    Perm() = default;

    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw Error("Perm: image list is not a bijection");
            seen[v] = 1;
        }
    }

    static Perm identity(int m) {
        std::vector<int> v(m);
        std::iota(v.begin(), v.end(), 0);
        return Perm(std::move(v));
    }

    static Perm transposition(int m, int a, int b) {
        Perm p = identity(m);
        std::swap(p.img_[a], p.img_[b]);
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return !(*this == o); }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
        return Perm(std::move(inv));
    }

    std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
        std::vector<std::vector<int>> out;
        std::vector<char> done(img_.size(), 0);
        for (int i = 0; i < size(); ++i) {
            if (done[i]) continue;
            std::vector<int> cyc;
            int j = i;
            while (!done[j]) {
                done[j] = 1;
                cyc.push_back(j);
                j = img_[j];
            }
            if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
        }
        return out;
    }

    /// Multiset of cycle lengths including fixed points, sorted.
    std::vector<int> cycle_type() const {
        std::vector<int> t;
        for (auto& c : cycles(true)) t.push_back(static_cast<int>(c.size()));
        std::sort(t.begin(), t.end());
        return t;
    }

    std::uint64_t order() const {
        std::uint64_t ord = 1;
        for (auto& c : cycles(true)) ord = std::lcm<std::uint64_t>(ord, c.size());
        return ord;
    }

    /// Canonical cycle notation: each cycle starts at its minimum, cycles
    /// sorted by minimum, fixed points omitted. Identity prints as "()".
    std::string cycle_string() const {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::ostringstream os;
        for (auto& c : cs) {
            os << '(';
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (k) os << ' ';
                os << c[k];
            }
            os << ')';
        }
        return os.str();
    }

    /// Parses "(a b c)(d e)" over {0..m-1}; unlisted points are fixed.
    static Perm parse_cycles(const std::string& s, int m) {
        std::vector<int> img(m);
        std::iota(img.begin(), img.end(), 0);
        std::size_t pos = 0;
        while (pos < s.size()) {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
            if (pos >= s.size()) break;
            if (s[pos] != '(') throw ParseError("expected '(' in cycle notation");
            std::size_t close = s.find(')', pos);
            if (close == std::string::npos) throw ParseError("unbalanced cycle notation");
            std::istringstream is(s.substr(pos + 1, close - pos - 1));
            std::vector<int> cyc;
            int v;
            while (is >> v) {
                if (v < 0 || v >= m) throw ParseError("cycle entry out of range");
                cyc.push_back(v);
            }
            for (std::size_t k = 0; k + 1 < cyc.size(); ++k) img[cyc[k]] = cyc[k + 1];
            if (cyc.size() > 1) img[cyc.back()] = cyc.front();
            pos = close + 1;
        }
        return Perm(std::move(img));
    }

  private:
    std::vector<int> img_;
};

/// compose(p, q)(x) = p(q(x)); q acts first.
inline Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw Error("compose: size mismatch");
    std::vector<int> img(p.size());
    for (int i = 0; i < p.size(); ++i) img[i] = p(q(i));
    return Perm(std::move(img));
}

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

}  // namespace braidcover
