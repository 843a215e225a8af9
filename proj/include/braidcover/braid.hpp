#pragma once

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "braidcover/errors.hpp"
#include "braidcover/perm.hpp"

namespace braidcover {

/// One letter of a braid word: generator index in {1..strands-1} and a sign.
struct Letter {
    int index;
    int sign;  // +1 or -1
    bool operator==(const Letter& o) const { return index == o.index && sign == o.sign; }
};

/// A word in the generators of the braid group on `strands` strands.
///
/// Composition convention, used everywhere in this library: a word acts on
/// points (fiber labels, strands, matrices) with its RIGHTMOST letter first,
/// so that perm_of(u * v) = perm_of(u) o perm_of(v) under ordinary function
/// composition. Equivalently, written words are traversed right to left as
/// paths. All cycle notations and level tables are generated under this rule.
class BraidWord {
  public:
    BraidWord() : strands_(2) {}
    explicit BraidWord(int strands) : strands_(strands) {
        if (strands < 1) throw Error("BraidWord: strands must be positive");
    }
    BraidWord(int strands, std::vector<Letter> letters)
        : strands_(strands), letters_(std::move(letters)) {
        if (strands < 1) throw Error("BraidWord: strands must be positive");
        for (const Letter& l : letters_) check_letter(l);
    }

    static BraidWord generator(int strands, int index, int sign = +1) {
        BraidWord w(strands);
        w.push_back({index, sign});
        return w;
    }

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    void push_back(const Letter& l) {
        check_letter(l);
        letters_.push_back(l);
    }

    BraidWord operator*(const BraidWord& o) const {
        if (strands_ != o.strands_) throw StrandMismatch("concatenating words on different strand counts");
        BraidWord w(strands_, letters_);
        w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
        return w;
    }

    BraidWord inverse() const {
        BraidWord w(strands_);
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back({it->index, -it->sign});
        return w;
    }

    BraidWord pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        BraidWord w(strands_);
        for (int i = 0; i < k; ++i) w = w * *this;
        return w;
    }

    bool operator==(const BraidWord& o) const {
        return strands_ == o.strands_ && letters_ == o.letters_;
    }

    /// Compact form like "s1 s2^-1 s1^3"; the empty word prints as "e".
    std::string str() const {
        if (letters_.empty()) return "e";
        std::ostringstream os;
        std::size_t i = 0;
        bool first = true;
        while (i < letters_.size()) {
            std::size_t j = i;
            while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
            int run = static_cast<int>(j - i) * letters_[i].sign;
            if (!first) os << ' ';
            first = false;
            os << 's' << letters_[i].index;
            if (run != 1) os << '^' << run;
            i = j;
        }
        return os.str();
    }

    static BraidWord parse(const std::string& text, int strands) {
        BraidWord w(strands);
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            if (tok == "e") continue;
            if (tok[0] != 's') throw ParseError("bad braid token: " + tok);
            std::size_t caret = tok.find('^');
            int index = 0, power = 1;
            try {
                index = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
                if (caret != std::string::npos) power = std::stoi(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw ParseError("bad braid token: " + tok);
            }
            int sign = power >= 0 ? +1 : -1;
            for (int k = 0; k < std::abs(power); ++k) w.push_back({index, sign});
        }
        return w;
    }

  private:
    void check_letter(const Letter& l) const {
        if (l.index < 1 || l.index >= strands_)
            throw Error("letter index out of range for strand count");
        if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
    }

    int strands_;
    std::vector<Letter> letters_;
};

/// Cancels adjacent inverse pairs until no more remain.
inline BraidWord free_reduce(const BraidWord& w) {
    std::vector<Letter> stack;
    stack.reserve(w.length());
    for (const Letter& l : w.letters()) {
        if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return BraidWord(w.strands(), std::move(stack));
}

inline long long exponent_sum(const BraidWord& w) {
    long long s = 0;
    for (const Letter& l : w.letters()) s += l.sign;
    return s;
}

/// Image in S_n; the generator s_i maps to the transposition (i-1, i).
/// A position swap per letter in written order accumulates
/// P(l_1) o P(l_2) o ... o P(l_m), the rightmost-first action.
inline Perm perm_rep(const BraidWord& w) {
    const int n = w.strands();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (const Letter& l : w.letters()) std::swap(img[l.index - 1], img[l.index]);
    return Perm(std::move(img));
}

}  // namespace braidcover
