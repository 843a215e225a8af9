#include "braidcover/refdata.hpp"

#include <cmath>
#include <numbers>

namespace braidcover::refdata {

using C = std::complex<double>;

std::vector<C> base_n3() {
    return {C(0, 0), std::polar(1.0, std::numbers::pi / 4), C(2, 0)};
}

std::vector<C> base_n2(double eps) {
    C w = std::polar(0.5, eps);
    return {-w, w};
}

FiberReference<double> reference_n2(double eps) {
    FiberReference<double> ref;
    ref.n = 2;
    auto e = [](double a) { return std::polar(2.0, a); };
    ref.root_tuples = {
        {-e((eps + std::numbers::pi) / 2)},  // z_0
        {e(eps / 2)},                        // z_1
        {e((eps + std::numbers::pi) / 2)},   // z_2
        {-e(eps / 2)},                       // z_3
    };
    // even labels cover x_1 (the difference with positive real part), odd x_2
    ref.x_of_class = {1, 2};
    return ref;
}

FiberReference<double> reference_n3() {
    FiberReference<double> ref;
    ref.n = 3;
    ref.root_tuples = {
        {{-2.43868, -0.93710}, {-1.95413, +0.64884}},  // z_0
        {{+2.01732, +0.49143}, {+2.56659, -0.71767}},  // z_1
        {{+1.59961, -0.51396}, {+2.81046, +0.04969}},  // z_2
        {{+0.48455, +1.58593}, {+2.43868, +0.93710}},  // z_3
        {{+1.32174, -0.12887}, {+1.90481, +1.86390}},  // z_4
        {{+1.09356, -0.76680}, {+1.44826, -2.40909}},  // z_5
        {{+0.41516, -2.01675}, {+2.03089, -1.64342}},  // z_6
        {{+0.77247, +1.08022}, {+1.43425, -1.50134}},  // z_7
        {{+0.11729, +1.33045}, {+1.36220, +2.45878}},  // z_8
        {{+0.40779, +2.58051}, {+1.53898, +1.36791}},  // z_9
        {{-0.77247, -1.08022}, {+0.66178, -2.58157}},  // z_10
        {{-0.11729, -1.33045}, {+1.24491, +1.12832}},  // z_11
        {{-0.48455, -1.58593}, {+1.95413, -0.64884}},  // z_12
        {{-1.32174, +0.12887}, {+0.58308, +1.99277}},  // z_13
        {{-1.59961, +0.51396}, {+1.21085, +0.56365}},  // z_14
        {{-0.41516, +2.01675}, {+1.61573, +0.37333}},  // z_15
        {{-2.01732, -0.49143}, {+0.54927, -1.20909}},  // z_16
        {{-1.09356, +0.76680}, {+0.35470, -1.64229}},  // z_17
        {{-0.40780, -2.58051}, {+1.13118, -1.21260}},  // z_18
        {{-1.43425, +1.50134}, {-0.66178, +2.58157}},  // z_19
        {{-1.44826, +2.40909}, {-0.35470, +1.64229}},  // z_20
        {{-1.53898, -1.36791}, {-1.13118, +1.21260}},  // z_21
        {{-1.90481, -1.86390}, {-0.58308, -1.99277}},  // z_22
        {{-1.36220, -2.45878}, {-1.24491, -1.12832}},  // z_23
        {{-2.03089, +1.64342}, {-1.61573, -0.37333}},  // z_24
        {{-2.56659, +0.71767}, {-0.54927, +1.20909}},  // z_25
        {{-2.81046, -0.04969}, {-1.21085, -0.56365}},  // z_26
    };
    // labels == i mod 3 cover x_i, with class 0 covering x_3
    ref.x_of_class = {3, 1, 2};
    return ref;
}

Perm rho21_sigma1() { return Perm::parse_cycles("(0 1 2 3)", 4); }

Perm rho31_sigma1() {
    return Perm::parse_cycles(
        "(1 2)(3 9 15)(4 8 13 11)(5 7 17 10)(6 12 18)(14 25 26 16)(19 20)(21 24 0)(22 23)", 27);
}

Perm rho31_sigma2() {
    return Perm::parse_cycles(
        "(1 4 7)(2 3 14 12)(5 6)(8 9)(10 16 22)(11 21 23 18)(13 19 25)(15 20 24 17)(26 0)", 27);
}

Perm rho22_sigma1() {
    return Perm::parse_cycles("(0 1 6 7 8 9 14 15)(2 3 4 5 10 11 12 13)", 16);
}

Perm rho22_sigma1_pow12() {
    return Perm::parse_cycles("(1 9)(5 13)(2 10)(6 14)(3 11)(7 15)(4 12)(8 0)", 16);
}

namespace {
std::vector<BraidWord> parse_list(int strands, const std::vector<std::string>& words) {
    std::vector<BraidWord> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(BraidWord::parse(w, strands));
    return out;
}
}  // namespace

std::vector<BraidWord> lifts_n2_sigma1() { return parse_list(2, {"e", "s1", "e", "s1"}); }

std::vector<BraidWord> lifts_n3_sigma1_roots() {
    return parse_list(3, {"e",  "e",  "s2", "e",  "e",  "e",  "s1^-1", "s1",    "s1",
                          "s1", "s1", "s1", "e",  "e",  "s2", "s1^-1", "e",     "e",
                          "s1", "s1", "e",  "s1", "e",  "s1", "s1^-1", "e",     "s2"});
}

std::vector<BraidWord> lifts_n3_sigma2_roots() {
    return parse_list(3, {"s1", "s2^-1", "e",  "s1", "s2", "e",  "s2", "e",     "s2",
                          "e",  "e",     "s2", "s1", "s2", "e",  "s2", "s2^-1", "e",
                          "e",  "e",     "e",  "e",  "s2", "s2", "s2", "s2^-1", "e"});
}

// Two-letter entries appear reversed relative to the journal's printing: words
// here are written with the rightmost letter traversed first.
std::vector<BraidWord> lifts_n3_sigma1_critpts() {
    return parse_list(3, {"e",     "e",  "e",  "e",  "e",  "e",  "s1^-1", "s1",    "s1",
                          "s1 s2", "s1", "s1", "s1", "e",  "s2", "s1^-1", "e",     "e",
                          "s2",    "e",  "e",  "s1", "e",  "e",  "e",     "e",     "s2"});
}

std::vector<BraidWord> lifts_n3_sigma2_critpts() {
    return parse_list(3, {"e",     "e",  "e",     "s1",    "s2",    "e",  "e",     "e",  "e",
                          "e",     "e",  "s2",    "s1",    "s1 s2", "e",  "s2",    "s2^-1", "e",
                          "s1^-1", "e",  "e",     "e",     "s2 s1", "s1 s2", "s2", "s2^-1", "e"});
}

BraidWord beta_example() { return BraidWord::parse("s1^12 s2^12 s1^-12 s2^-12", 3); }

BraidWord beta_S() { return BraidWord::parse("s2^6 s1^6 s2^-6 s1^-6", 3); }
BraidWord beta_T() { return BraidWord::parse("s1^6 s2^6 s1^-6 s2^-6", 3); }

std::vector<BraidWord> beta_lift_pattern() {
    std::vector<BraidWord> out;
    BraidWord e(3), S = beta_S(), T = beta_T();
    const char* pattern = "..S..T..T..T..S..T..T..T..S";
    for (int i = 0; i < 27; ++i)
        out.push_back(pattern[i] == 'S' ? S : pattern[i] == 'T' ? T : e);
    return out;
}

// Like the two-letter table entries, the non-palindromic words here are
// written reversed relative to the journal's printing so that the same group
// elements come out under the rightmost-first reading.
std::vector<BraidWord> beta_loops() {
    return parse_list(3, {"s1^2", "s2 s1^2 s2^-1", "s2 s1^2", "s2^2 s1^2", "s2 s1^2 s2"});
}

std::vector<int> beta_loop_powers() { return {1, 2, 6, 6, 3}; }

std::vector<BraidWord> w_words() {
    return parse_list(3, {"s2", "s1^2", "s1 s2 s1 s1 s2 s1",
                          "s2 s1 s2^-1 s1 s2 s2 s1 s2^-1 s1 s2", "s1 s2^2 s1 s2^-1"});
}

BraidWord obstruction_braid() {
    BraidWord inner = BraidWord::parse("s1^-1 s2^-2 s1^-1 s2 s1^-1 s2^-2 s1^-1", 3);
    BraidWord half = inner * inner * BraidWord::parse("s1^-2", 3);
    return half * half;
}

}  // namespace braidcover::refdata
