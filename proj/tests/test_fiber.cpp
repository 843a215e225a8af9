#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "braidcover/fiber.hpp"
#include "braidcover/refdata.hpp"

using namespace braidcover;
using C = std::complex<double>;

namespace {
std::mt19937 rng(417);

C random_complex(double radius = 2.0) {
    std::uniform_real_distribution<double> d(-radius, radius);
    return {d(rng), d(rng)};
}

ConfigPoint<double> random_vn(int n) {
    while (true) {
        ConfigPoint<double> v{ConfigPoint<double>::Kind::Vn, {}};
        for (int k = 0; k + 1 < n; ++k) v.points.push_back(random_complex());
        if (v.valid(1e-2)) return v;
    }
}
}  // namespace

TEST_CASE("n=2 fiber closed form") {
    const double eps = 0.8;
    ConfigPoint<double> x1{ConfigPoint<double>::Kind::Vn, {std::polar(1.0, eps)}};
    auto fib = solve_fiber(x1);
    REQUIRE(fib.size() == 2);
    C expect = std::polar(2.0, (eps + std::numbers::pi) / 2);
    std::vector<C> got{fib[0].roots[1], fib[1].roots[1]};
    double d1 = std::abs(got[0] - expect) + std::abs(got[1] + expect);
    double d2 = std::abs(got[0] + expect) + std::abs(got[1] - expect);
    CHECK(std::min(d1, d2) < 1e-8);

    ConfigPoint<double> x2{ConfigPoint<double>::Kind::Vn, {-std::polar(1.0, eps)}};
    auto fib2 = solve_fiber(x2);
    REQUIRE(fib2.size() == 2);
    C expect2 = std::polar(2.0, eps / 2);
    std::vector<C> got2{fib2[0].roots[1], fib2[1].roots[1]};
    double e1 = std::abs(got2[0] - expect2) + std::abs(got2[1] + expect2);
    double e2 = std::abs(got2[0] + expect2) + std::abs(got2[1] - expect2);
    CHECK(std::min(e1, e2) < 1e-8);
}

TEST_CASE("fiber cardinality is n^(n-1) with verified residuals") {
    for (int n : {2, 3}) {
        for (int rep = 0; rep < 50; ++rep) {
            auto v = random_vn(n);
            auto fib = solve_fiber(v);
            int expected = 1;
            for (int k = 0; k + 1 < n; ++k) expected *= n;
            REQUIRE(static_cast<int>(fib.size()) == expected);
            for (const auto& p : fib) {
                CHECK(p.in_Zn);
                CHECK(tuple_distance(p.crit_values, v.points) < 1e-7);
            }
        }
    }
}

TEST_CASE("fiber is closed under the root-of-unity orbit") {
    for (int rep = 0; rep < 5; ++rep) {
        auto v = random_vn(3);
        auto fib = solve_fiber(v);
        for (const auto& p : fib) {
            auto orbit = root_of_unity_orbit(p);
            REQUIRE(orbit.size() == 3);
            for (const auto& q : orbit) {
                CHECK(tuple_distance(q.crit_values, p.crit_values) < 1e-8);
                double best = 1e9;
                for (const auto& f : fib)
                    best = std::min(best, tuple_distance(f.crit_points, q.crit_points));
                CHECK(best < 1e-7);
            }
        }
    }
}

TEST_CASE("root_of_unity_orbit basics") {
    auto p = poly_from_roots_with_zero<double>({C(0, 0), C(0, 2)});
    auto orbit = root_of_unity_orbit(p);
    REQUIRE(orbit.size() == 2);
    CHECK(std::abs(orbit[0].roots[1] - C(0, 2)) < 1e-12);
    CHECK(std::abs(orbit[1].roots[1] + C(0, 2)) < 1e-12);

    // orbit of the orbit gives the same configuration set
    auto again = root_of_unity_orbit(orbit[1]);
    double best = 1e9;
    for (auto& q : again) best = std::min(best, tuple_distance(q.crit_points, p.crit_points));
    CHECK(best < 1e-12);
}

TEST_CASE("solve_fiber determinism") {
    auto v = random_vn(3);
    auto a = solve_fiber(v);
    auto b = solve_fiber(v);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(tuple_distance(a[i].crit_points, b[i].crit_points) == 0.0);
}

TEST_CASE("full_fiber n=2 matches the published labels") {
    const double eps = 0.8;
    auto fib = full_fiber<double>(refdata::base_n2(eps), refdata::reference_n2(eps));
    REQUIRE(fib.points.size() == 4);
    auto ref = refdata::reference_n2(eps);
    for (int l = 0; l < 4; ++l)
        CHECK(tuple_distance(fib.points[l].nonzero_roots().points, ref.root_tuples[l]) < 1e-9);
    // x_1 has positive real part and is covered by the even labels
    CHECK(fib.x_of_class[0] == 1);
    CHECK(fib.x[0][0].real() > 0);
}

TEST_CASE("full_fiber n=3 matches the published table") {
    auto fib = full_fiber<double>(refdata::base_n3(), refdata::reference_n3());
    REQUIRE(fib.points.size() == 27);
    auto ref = refdata::reference_n3();
    auto mr = match_to_reference(fib.points, ref.root_tuples);
    CHECK(mr.relabel.is_identity());
    CHECK(mr.max_deviation <= 1e-4);
    // residue convention: label l covers x_{x_of_class[l mod 3]}
    for (int l = 0; l < 27; ++l) {
        int xi = fib.x_index_of_label(l);
        CHECK(tuple_distance(fib.points[l].crit_values, fib.x[xi - 1]) < 1e-7);
    }
}

TEST_CASE("full_fiber count and genericity errors") {
    auto count_fib = full_fiber<double>({C(-0.6, 0.2), C(0.4, -0.1)}, {});
    CHECK(count_fib.points.size() == 4);
    CHECK_THROWS_AS(full_fiber<double>({C(0, 0), C(0, 1)}, {}), NonGenericBase);
    CHECK_THROWS_AS(full_fiber<double>({C(0, 0), C(0, 0)}, {}), NonGenericBase);
}

TEST_CASE("match_to_reference identity and rotation") {
    auto v = random_vn(3);
    auto fib = solve_fiber(v);
    std::vector<std::vector<C>> ref;
    for (auto& p : fib) ref.push_back(p.nonzero_roots().points);
    auto mr = match_to_reference(fib, ref);
    CHECK(mr.relabel.is_identity());
    CHECK(mr.max_deviation == 0.0);

    std::rotate(ref.begin(), ref.begin() + 1, ref.end());
    auto mr2 = match_to_reference(fib, ref);
    CHECK_FALSE(mr2.relabel.is_identity());
    for (int i = 0; i < mr2.relabel.size(); ++i)
        CHECK(mr2.relabel(i) ==
              (i + static_cast<int>(ref.size()) - 1) % static_cast<int>(ref.size()));

    std::vector<std::vector<C>> far(ref.size(), {C(100, 100), C(101, 101)});
    CHECK_THROWS_AS(match_to_reference(fib, far), NoConsistentMatching);
}
