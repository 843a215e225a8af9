#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "braidcover/laurent.hpp"
#include "braidcover/lift.hpp"
#include "braidcover/refdata.hpp"

using namespace braidcover;
using C = std::complex<double>;

namespace {

const double kEps = 0.8;

LabeledFiber<double> fiber_n2() {
    static LabeledFiber<double> fib =
        full_fiber<double>(refdata::base_n2(kEps), refdata::reference_n2(kEps));
    return fib;
}

LabeledFiber<double> fiber_n3() {
    static LabeledFiber<double> fib =
        full_fiber<double>(refdata::base_n3(), refdata::reference_n3());
    return fib;
}

SampledPath<double> vpath_for_label(const LabeledFiber<double>& fib,
                                    const SampledPath<double>& loop, int label) {
    int xi = fib.x_index_of_label(label);
    return project_to_V(loop, fib.strand_of_x[xi - 1]);
}

}  // namespace

TEST_CASE("generator_loop reproduces the closed-form n=2 parametrisation") {
    auto base = refdata::base_n2(kEps);
    auto loop = generator_loop(2, 1, base, 100);
    loop.validate();
    for (std::size_t s = 0; s < loop.size(); ++s) {
        double t = loop.ts[s] * std::numbers::pi;
        C hi = std::polar(0.5, t + kEps);
        // slot 1 holds the strand that started at +0.5 e^{i eps}
        CHECK(std::abs(loop.samples[s][1] - hi) < 1e-12);
        CHECK(std::abs(loop.samples[s][0] + hi) < 1e-12);
    }
}

TEST_CASE("project_to_V gives the published n=2 lift paths") {
    auto base = refdata::base_n2(kEps);
    auto loop = generator_loop(2, 1, base, 100);
    auto v0 = project_to_V(loop, 0);
    for (std::size_t s = 0; s < v0.size(); ++s) {
        double t = v0.ts[s] * std::numbers::pi;
        CHECK(std::abs(v0.samples[s][0] - std::polar(1.0, t + kEps)) < 1e-12);
    }
    auto constant = loop;
    for (auto& sample : constant.samples) sample = loop.samples[0];
    auto cv = project_to_V(constant, 0);
    for (auto& sample : cv.samples) CHECK(std::abs(sample[0] - cv.samples[0][0]) == 0.0);
}

TEST_CASE("project_to_V rejects collisions") {
    SampledPath<double> path;
    path.space = PathSpace::Cn;
    path.ts = {0.0, 1.0};
    path.samples = {{C(0, 0), C(1, 0)}, {C(0, 0), C(0, 0)}};
    CHECK_THROWS_AS(project_to_V(path, 0), LeavesVn);
}

TEST_CASE("n=2 lifts reproduce the published permutation and braids") {
    auto fib = fiber_n2();
    auto loop = generator_loop(2, 1, refdata::base_n2(kEps), 100);
    auto expected = refdata::lifts_n2_sigma1();

    std::vector<int> endpoint(4);
    for (int label = 0; label < 4; ++label) {
        auto vp = vpath_for_label(fib, loop, label);
        auto pp = lift_path(vp, label, fib);
        endpoint[label] = pp.end_label;
        BraidWord w = braid_from_path(pp, Embedding::Roots);
        INFO("label ", label, " -> ", w.str());
        CHECK(w == expected[label]);
    }
    CHECK(Perm(endpoint) == refdata::rho21_sigma1());
}

TEST_CASE("n=2 lift from z_1 follows the closed-form root path") {
    auto fib = fiber_n2();
    auto loop = generator_loop(2, 1, refdata::base_n2(kEps), 100);
    auto vp = vpath_for_label(fib, loop, 1);
    auto pp = lift_path(vp, 1, fib);
    for (std::size_t s = 0; s < pp.ts.size(); ++s) {
        double t = pp.ts[s] * std::numbers::pi;
        C expect = std::polar(2.0, (t + kEps) / 2.0);
        CHECK(std::abs(pp.roots[s][1] - expect) < 1e-8);
    }
    CHECK(pp.end_label == 2);
}

TEST_CASE("n=3 sigma_1 lift examples from the published tables") {
    auto fib = fiber_n3();
    auto loop = generator_loop(3, 1, refdata::base_n3(), 100);

    auto vp1 = vpath_for_label(fib, loop, 1);
    auto pp1 = lift_path(vp1, 1, fib);
    CHECK(pp1.end_label == 2);
    CHECK(braid_from_path(pp1, Embedding::Roots).empty());

    auto vp3 = vpath_for_label(fib, loop, 3);
    auto pp3 = lift_path(vp3, 3, fib);
    CHECK(pp3.end_label == 9);
    CHECK(braid_from_path(pp3, Embedding::Roots) == refdata::lifts_n3_sigma1_roots()[3]);

    auto vp7 = vpath_for_label(fib, loop, 7);
    auto pp7 = lift_path(vp7, 7, fib);
    CHECK(pp7.end_label == 17);
    CHECK(braid_from_path(pp7, Embedding::Roots) == BraidWord::parse("s1", 3));

    auto vp6 = vpath_for_label(fib, loop, 6);
    auto pp6 = lift_path(vp6, 6, fib);
    CHECK(braid_from_path(pp6, Embedding::Roots) == BraidWord::parse("s1^-1", 3));

    auto vp9 = vpath_for_label(fib, loop, 9);
    auto pp9 = lift_path(vp9, 9, fib);
    CHECK(braid_from_path(pp9, Embedding::CriticalPoints) == BraidWord::parse("s1 s2", 3));
}

TEST_CASE("lift endpoints are stable under sample refinement") {
    auto fib = fiber_n3();
    for (int m : {50, 100, 200}) {
        auto loop = generator_loop(3, 2, refdata::base_n3(), m);
        auto vp = vpath_for_label(fib, loop, 4);
        auto pp = lift_path(vp, 4, fib);
        CHECK(pp.end_label == refdata::rho31_sigma2()(4));
        CHECK(braid_from_path(pp, Embedding::Roots) == refdata::lifts_n3_sigma2_roots()[4]);
    }
}

TEST_CASE("lifting a concatenation equals concatenating the lifts") {
    auto fib = fiber_n3();
    auto loop1 = generator_loop(3, 1, refdata::base_n3(), 100);
    auto loop2 = generator_loop(3, 2, refdata::base_n3(), 100);

    // word s2 s1 read rightmost-first: the sigma_1 loop runs first
    int start = 5;
    auto vp_first = vpath_for_label(fib, loop1, start);
    auto pp_first = lift_path(vp_first, start, fib);
    int midpoint = pp_first.end_label;
    auto vp_second = vpath_for_label(fib, loop2, midpoint);
    auto pp_second = lift_path(vp_second, midpoint, fib);

    auto cn = concat_paths(loop1, loop2);
    auto vp_full = vpath_for_label(fib, cn, start);
    auto pp_full = lift_path(vp_full, start, fib);

    CHECK(pp_full.end_label == pp_second.end_label);
    BraidWord expected =
        braid_from_path(pp_second, Embedding::Roots) * braid_from_path(pp_first, Embedding::Roots);
    CHECK(braids_equal(braid_from_path(pp_full, Embedding::Roots), free_reduce(expected)).equal);
}

TEST_CASE("reversing a path inverts the lift") {
    auto fib = fiber_n3();
    auto loop = generator_loop(3, 1, refdata::base_n3(), 100);
    int start = 4;
    auto vp = vpath_for_label(fib, loop, start);
    auto pp = lift_path(vp, start, fib);

    auto rev = reverse_path(vp);
    auto pp_back = lift_path(rev, pp.end_label, fib);
    CHECK(pp_back.end_label == start);
    BraidWord forward = braid_from_path(pp, Embedding::Roots);
    BraidWord backward = braid_from_path(pp_back, Embedding::Roots);
    CHECK(braids_equal(backward, forward.inverse()).equal);
}

TEST_CASE("lift endpoints respect strand bookkeeping on label classes") {
    auto fib = fiber_n3();
    for (int gen : {1, 2}) {
        auto loop = generator_loop(3, gen, refdata::base_n3(), 100);
        Perm pi = perm_rep(BraidWord::generator(3, gen));
        for (int label : {0, 1, 2, 10, 20}) {
            int xi = fib.x_index_of_label(label);
            auto vp = vpath_for_label(fib, loop, label);
            auto pp = lift_path(vp, label, fib);
            CHECK(fib.x_index_of_label(pp.end_label) == pi(xi - 1) + 1);
        }
    }
}

TEST_CASE("check_argument_monotone verdicts") {
    const int m = 200;
    SampledPath<double> vp;
    vp.space = PathSpace::Vn;
    vp.closed = true;
    for (int s = 0; s <= m; ++s) {
        double t = 2.0 * std::numbers::pi * s / m;
        vp.ts.push_back(double(s) / m);
        vp.samples.push_back({std::polar(1.0, std::numbers::pi / 4 + t), C(2, 0)});
    }
    auto verdicts = check_argument_monotone(vp);
    REQUIRE(verdicts.size() == 2);
    CHECK(verdicts[0] == ArgVerdict::Increasing);
    CHECK(verdicts[1] == ArgVerdict::Constant);

    auto rev = reverse_path(vp);
    auto back = check_argument_monotone(rev);
    CHECK(back[0] == ArgVerdict::Decreasing);

    // a chord passing very close to 0 flips real-part sign in one step; the
    // wrap direction cannot be trusted, so the verdict is Fails
    SampledPath<double> chord;
    chord.space = PathSpace::Vn;
    chord.ts = {0.0, 0.45, 0.55, 1.0};
    chord.samples = {{C(1, 1e-6)}, {C(0.1, 1e-7)}, {C(-0.1, -1e-7)}, {C(-1, -1e-6)}};
    auto cv = check_argument_monotone(chord);
    CHECK(cv[0] == ArgVerdict::Fails);
}
