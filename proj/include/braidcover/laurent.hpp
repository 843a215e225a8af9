#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "braidcover/braid.hpp"
#include "braidcover/errors.hpp"

namespace braidcover {

/// Integer Laurent polynomial in one variable t, exact arithmetic.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(long long c, int degree = 0) {
        if (c != 0) {
            lo_ = degree;
            coef_ = {c};
        }
    }

    static LaurentPoly t(int degree = 1) { return LaurentPoly(1, degree); }

    bool is_zero() const { return coef_.empty(); }
    int lowest() const { return lo_; }                                   // valid only if nonzero
    int highest() const { return lo_ + static_cast<int>(coef_.size()) - 1; }
    int breadth() const { return is_zero() ? 0 : highest() - lowest(); }

    long long coeff(int degree) const {
        if (is_zero() || degree < lo_ || degree > highest()) return 0;
        return coef_[degree - lo_];
    }

    long long leading_coeff() const { return is_zero() ? 0 : coef_.back(); }

    bool operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && coef_ == o.coef_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        int lo = std::min(lo_, o.lo_);
        int hi = std::max(highest(), o.highest());
        std::vector<long long> c(hi - lo + 1, 0);
        for (std::size_t i = 0; i < coef_.size(); ++i) c[lo_ - lo + i] += coef_[i];
        for (std::size_t i = 0; i < o.coef_.size(); ++i) c[o.lo_ - lo + i] += o.coef_[i];
        return make(lo, std::move(c));
    }

    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        if (is_zero() || o.is_zero()) return LaurentPoly();
        std::vector<long long> c(coef_.size() + o.coef_.size() - 1, 0);
        for (std::size_t i = 0; i < coef_.size(); ++i)
            for (std::size_t j = 0; j < o.coef_.size(); ++j) c[i + j] += coef_[i] * o.coef_[j];
        return make(lo_ + o.lo_, std::move(c));
    }

    /// Multiplies by t^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.lo_ += k;
        return r;
    }

    /// Exact division; throws if the divisor does not divide exactly.
    LaurentPoly divide_exact(const LaurentPoly& d) const {
        if (d.is_zero()) throw Error("Laurent division by zero");
        if (is_zero()) return LaurentPoly();
        std::vector<long long> rem = coef_;
        int rem_lo = lo_;
        std::vector<long long> q(coef_.size(), 0);  // aligned to quotient lowest degree
        const int qlo = lo_ - d.lo_;
        const int dn = static_cast<int>(d.coef_.size());
        // long division from the top
        for (int pos = static_cast<int>(rem.size()) - 1; pos >= dn - 1; --pos) {
            if (rem[pos] == 0) continue;
            if (rem[pos] % d.coef_.back() != 0) throw Error("Laurent division is not exact");
            long long f = rem[pos] / d.coef_.back();
            q[pos - (dn - 1)] = f;
            for (int k = 0; k < dn; ++k) rem[pos - (dn - 1) + k] -= f * d.coef_[k];
        }
        for (long long c : rem)
            if (c != 0) throw Error("Laurent division is not exact");
        q.resize(coef_.size() - dn + 1);
        (void)rem_lo;
        return make(qlo, std::move(q));
    }

    long long eval_int(long long x) const {
        // only meaningful when lo_ >= 0 or x = +-1
        long long acc = 0, p = 1;
        for (int d = 0; d < lo_; ++d) p *= x;
        for (long long c : coef_) {
            acc += c * p;
            p *= x;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = static_cast<int>(coef_.size()) - 1; i >= 0; --i) {
            long long c = coef_[i];
            if (c == 0) continue;
            int d = lo_ + i;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            long long a = c > 0 ? c : -c;
            first = false;
            if (a != 1 || d == 0) os << a;
            if (d != 0) {
                if (a != 1) os << "*";
                os << "t";
                if (d != 1) os << "^" << d;
            }
        }
        return os.str();
    }

  private:
    static LaurentPoly make(int lo, std::vector<long long> c) {
        std::size_t b = 0, e = c.size();
        while (e > b && c[e - 1] == 0) --e;
        while (b < e && c[b] == 0) ++b;
        LaurentPoly r;
        if (b < e) {
            r.lo_ = lo + static_cast<int>(b);
            r.coef_.assign(c.begin() + b, c.begin() + e);
        }
        return r;
    }

    int lo_ = 0;
    std::vector<long long> coef_;
};

/// Small dense matrix of integer Laurent polynomials.
class LaurentMatrix {
  public:
    LaurentMatrix() : dim_(0) {}
    explicit LaurentMatrix(int dim) : dim_(dim), e_(dim * dim) {}

    static LaurentMatrix identity(int dim) {
        LaurentMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly(1);
        return m;
    }

    int dim() const { return dim_; }
    LaurentPoly& at(int r, int c) { return e_[r * dim_ + c]; }
    const LaurentPoly& at(int r, int c) const { return e_[r * dim_ + c]; }

    bool operator==(const LaurentMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }

    LaurentMatrix operator*(const LaurentMatrix& o) const {
        if (dim_ != o.dim_) throw Error("LaurentMatrix: dimension mismatch");
        LaurentMatrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < dim_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }

    LaurentMatrix operator-(const LaurentMatrix& o) const {
        if (dim_ != o.dim_) throw Error("LaurentMatrix: dimension mismatch");
        LaurentMatrix r(dim_);
        for (int i = 0; i < dim_ * dim_; ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    LaurentPoly trace() const {
        LaurentPoly tr;
        for (int i = 0; i < dim_; ++i) tr = tr + at(i, i);
        return tr;
    }

    /// Cofactor expansion; dimensions here are tiny.
    LaurentPoly det() const {
        if (dim_ == 0) return LaurentPoly(1);
        if (dim_ == 1) return at(0, 0);
        LaurentPoly d;
        for (int c = 0; c < dim_; ++c) {
            if (at(0, c).is_zero()) continue;
            LaurentMatrix minor(dim_ - 1);
            for (int i = 1; i < dim_; ++i) {
                int jj = 0;
                for (int j = 0; j < dim_; ++j) {
                    if (j == c) continue;
                    minor.at(i - 1, jj++) = at(i, j);
                }
            }
            LaurentPoly term = at(0, c) * minor.det();
            d = (c % 2 == 0) ? d + term : d - term;
        }
        return d;
    }

  private:
    int dim_;
    std::vector<LaurentPoly> e_;
};

/// Reduced Burau image of one generator, (n-1)x(n-1).
inline LaurentMatrix burau_generator(int strands, int index, int sign) {
    const int d = strands - 1;
    LaurentMatrix m = LaurentMatrix::identity(d);
    const int r = index - 1;  // row of the affected basis vector
    if (sign > 0) {
        if (r - 1 >= 0) m.at(r, r - 1) = LaurentPoly::t();
        m.at(r, r) = -LaurentPoly::t();
        if (r + 1 < d) m.at(r, r + 1) = LaurentPoly(1);
    } else {
        if (r - 1 >= 0) m.at(r, r - 1) = LaurentPoly(1);
        m.at(r, r) = -LaurentPoly::t(-1);
        if (r + 1 < d) m.at(r, r + 1) = LaurentPoly::t(-1);
    }
    return m;
}

/// Reduced Burau image of a word; matrices multiply in written order, so the
/// rightmost letter acts first on column vectors.
inline LaurentMatrix burau_reduced(const BraidWord& w) {
    if (w.strands() < 2) throw Error("burau_reduced needs at least 2 strands");
    LaurentMatrix m = LaurentMatrix::identity(w.strands() - 1);
    for (const Letter& l : w.letters()) m = m * burau_generator(w.strands(), l.index, l.sign);
    return m;
}

struct EqualityResult {
    bool equal;
    bool authoritative;  // true for n <= 3, where reduced Burau is faithful
    operator bool() const { return equal; }
};

/// Group-element equality. Exact for n <= 3 via reduced Burau; for n >= 4 a
/// semi-decision (permutation, exponent sum and Burau image all agree) that is
/// flagged non-authoritative when it reports "equal".
inline EqualityResult braids_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw StrandMismatch("braids_equal: different strand counts");
    const int n = a.strands();
    if (n == 1) return {true, true};
    if (n <= 3) return {burau_reduced(a) == burau_reduced(b), true};
    if (perm_rep(a) != perm_rep(b)) return {false, true};
    if (exponent_sum(a) != exponent_sum(b)) return {false, true};
    if (burau_reduced(a) != burau_reduced(b)) return {false, true};
    return {true, false};
}

struct AlexanderResult {
    LaurentPoly poly;  // normalized: lowest degree 0, leading coefficient > 0
    int breadth;       // degree span; equals the Conway polynomial degree
};

/// Single-variable Alexander polynomial of the closure of w, up to units,
/// via det(burau(w) - I) * (t - 1) / (t^n - 1).
inline AlexanderResult alexander_poly(const BraidWord& w) {
    if (w.strands() < 2) throw Error("alexander_poly needs at least 2 strands");
    const int n = w.strands();
    LaurentMatrix m = burau_reduced(w) - LaurentMatrix::identity(n - 1);
    LaurentPoly d = m.det();
    if (d.is_zero())
        throw DegenerateClosure("Alexander determinant vanishes identically");
    LaurentPoly tn1 = LaurentPoly(1, n) - LaurentPoly(1);  // t^n - 1
    LaurentPoly t1 = LaurentPoly(1, 1) - LaurentPoly(1);   // t - 1
    LaurentPoly p = (d * t1).divide_exact(tn1);
    if (p.is_zero()) throw DegenerateClosure("Alexander polynomial vanished after division");
    p = p.shifted(-p.lowest());
    if (p.leading_coeff() < 0) p = -p;
    return {p, p.breadth()};
}

}  // namespace braidcover
