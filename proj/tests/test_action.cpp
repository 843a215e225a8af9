#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidcover/action.hpp"
#include "braidcover/laurent.hpp"
#include "braidcover/phi.hpp"
#include "braidcover/refdata.hpp"

using namespace braidcover;

namespace {

const GeneratorTables& tables_n2() {
    static GeneratorTables t = [] {
        auto fib = full_fiber<double>(refdata::base_n2(0.8), refdata::reference_n2(0.8));
        return GeneratorTables(fib, Embedding::Roots);
    }();
    return t;
}

const LabeledFiber<double>& fiber_n3() {
    static LabeledFiber<double> fib =
        full_fiber<double>(refdata::base_n3(), refdata::reference_n3());
    return fib;
}

const GeneratorTables& tables_n3() {
    static GeneratorTables t = GeneratorTables(fiber_n3(), Embedding::Roots);
    return t;
}

const GeneratorTables& tables_n3_hat() {
    static GeneratorTables t = GeneratorTables(fiber_n3(), Embedding::CriticalPoints);
    return t;
}

BraidWord random_word(std::mt19937& rng, int strands, int len) {
    BraidWord w(strands);
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int i = 0; i < len; ++i) w.push_back({gen(rng), sgn(rng) ? 1 : -1});
    return w;
}

}  // namespace

TEST_CASE("n=2 generator table matches the published data") {
    const auto& t = tables_n2().generator(1);
    CHECK(t.perm == refdata::rho21_sigma1());
    auto expected = refdata::lifts_n2_sigma1();
    for (int i = 0; i < 4; ++i) CHECK(t.lifted[i] == expected[i]);
}

TEST_CASE("n=3 generator tables match the published data") {
    const auto& a = tables_n3().generator(1);
    const auto& b = tables_n3().generator(2);
    CHECK(a.perm == refdata::rho31_sigma1());
    CHECK(b.perm == refdata::rho31_sigma2());
    auto ea = refdata::lifts_n3_sigma1_roots();
    auto eb = refdata::lifts_n3_sigma2_roots();
    for (int i = 0; i < 27; ++i) {
        CHECK(braids_equal(a.lifted[i], ea[i]).equal);
        CHECK(braids_equal(b.lifted[i], eb[i]).equal);
    }
}

TEST_CASE("n=3 critical-point tables match the published hat lists") {
    const auto& a = tables_n3_hat().generator(1);
    const auto& b = tables_n3_hat().generator(2);
    CHECK(a.perm == refdata::rho31_sigma1());
    CHECK(b.perm == refdata::rho31_sigma2());
    auto ea = refdata::lifts_n3_sigma1_critpts();
    auto eb = refdata::lifts_n3_sigma2_critpts();
    for (int i = 0; i < 27; ++i) {
        CHECK(braids_equal(a.lifted[i], ea[i]).equal);
        CHECK(braids_equal(b.lifted[i], eb[i]).equal);
    }
}

TEST_CASE("h_of_word identities") {
    const auto& tables = tables_n3();
    auto id = tables.h_of_word(BraidWord(3));
    CHECK(id.perm.is_identity());
    for (const auto& w : id.lifted) CHECK(w.empty());

    auto cancel = tables.h_of_word(BraidWord::parse("s1 s1^-1", 3));
    CHECK(cancel.perm.is_identity());
    for (const auto& w : cancel.lifted) CHECK(braids_equal(w, BraidWord(3)).equal);
}

TEST_CASE("the worked commutator example") {
    const auto& tables = tables_n3();
    BraidWord beta = refdata::beta_example();
    const auto& h = tables.h_of_word(beta);
    CHECK(h.perm.is_identity());
    auto pattern = refdata::beta_lift_pattern();
    for (int i = 0; i < 27; ++i) {
        INFO("entry ", i, " = ", h.lifted[i].str());
        CHECK(h.lifted[i] == pattern[i]);
    }
    // only the entries with index 2 mod 3 are nontrivial
    for (int i = 0; i < 27; ++i)
        CHECK(h.lifted[i].empty() == (i % 3 != 2));

    CHECK(rho_level(beta, 1, tables).is_identity());
    Perm level2 = rho_level(beta, 2, tables);
    CHECK_FALSE(level2.is_identity());
    CHECK(level2(27 * 2 + 2) == 27 * 26 + 2);
}

TEST_CASE("rho_level reproduces the published level-2 n=2 permutations") {
    const auto& tables = tables_n2();
    BraidWord s1 = BraidWord::generator(2, 1);
    CHECK(rho_level(s1, 1, tables) == refdata::rho21_sigma1());
    CHECK(rho_level(s1, 2, tables) == refdata::rho22_sigma1());
    CHECK(rho_level(s1.pow(12), 2, tables) == refdata::rho22_sigma1_pow12());
}

TEST_CASE("rho_level is a homomorphism and compatible across levels") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 100; ++iter) {
        bool use3 = iter % 2;
        const auto& tables = use3 ? tables_n3() : tables_n2();
        int n = use3 ? 3 : 2;
        BraidWord a = random_word(rng, n, 1 + iter % 8);
        BraidWord b = random_word(rng, n, 1 + (iter * 3) % 8);
        for (int j : {1, 2}) {
            Perm lhs = rho_level(a * b, j, tables);
            Perm rhs = compose(rho_level(a, j, tables), rho_level(b, j, tables));
            CHECK(lhs == rhs);
        }
        // compatibility: level-2 image reduced mod size equals level 1
        Perm l2 = rho_level(a, 2, tables);
        Perm l1 = rho_level(a, 1, tables);
        int m = tables.size();
        for (int x = 0; x < m; ++x) CHECK(l2(x) % m == l1(x));
    }
}

TEST_CASE("halving of sigma_1 powers at n=2") {
    const auto& tables = tables_n2();
    for (int k = 1; k <= 12; ++k) {
        auto h = tables.h_of_word(BraidWord::generator(2, 1).pow(k));
        for (int i = 0; i < 4; ++i) {
            int expected = (k % 2 == 0) ? k / 2 : (i % 2 == 1 ? (k + 1) / 2 : k / 2);
            CHECK(braids_equal(h.lifted[i], BraidWord::generator(2, 1).pow(expected)).equal);
        }
    }
}

TEST_CASE("psi_apply on published cycles") {
    const auto& tables = tables_n2();
    BraidWord s1 = BraidWord::generator(2, 1);

    AdicPrefix one{AdicPrefix::Kind::Psi, 2, {1}};
    CHECK(psi_apply(s1, one, tables).digits == std::vector<long long>{2});

    AdicPrefix idprefix{AdicPrefix::Kind::Psi, 2, {3, 2, 1}};
    CHECK(psi_apply(BraidWord(2), idprefix, tables).digits == idprefix.digits);

    // cumulative (1,1) -> (1,9) under s1^12 at level 2
    auto start = AdicPrefix::psi_from_cumulative(2, {1, 1});
    auto end = psi_apply(s1.pow(12), start, tables);
    CHECK(end.cumulative() == std::vector<long long>{1, 9});
}

TEST_CASE("psi_apply agrees with the materialized level permutations") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        bool use3 = iter % 2;
        const auto& tables = use3 ? tables_n3() : tables_n2();
        int n = use3 ? 3 : 2;
        int m = tables.size();
        BraidWord w = random_word(rng, n, 1 + iter % 10);
        int depth = 1 + iter % 3;
        if (use3 && depth > 2) depth = 2;

        AdicPrefix a{AdicPrefix::Kind::Psi, n, {}};
        std::uniform_int_distribution<long long> dig(0, m - 1);
        for (int p = 0; p < depth; ++p) a.digits.push_back(dig(rng));

        auto out = psi_apply(w, a, tables);
        auto cum_in = a.cumulative();
        auto cum_out = out.cumulative();
        for (int j = 1; j <= depth; ++j) {
            Perm rho = rho_level(w, j, tables);
            CHECK(rho(static_cast<int>(cum_in[j - 1])) == cum_out[j - 1]);
        }
    }
}

TEST_CASE("psi digit-prefix isometry and inverses") {
    std::mt19937 rng(2718);
    const auto& tables = tables_n3();
    std::uniform_int_distribution<long long> dig(0, 26);
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord w = random_word(rng, 3, 1 + iter % 8);
        AdicPrefix a{AdicPrefix::Kind::Psi, 3, {}};
        AdicPrefix b{AdicPrefix::Kind::Psi, 3, {}};
        for (int p = 0; p < 3; ++p) {
            a.digits.push_back(dig(rng));
            b.digits.push_back(dig(rng));
        }
        auto wa = psi_apply(w, a, tables);
        auto wb = psi_apply(w, b, tables);
        std::size_t before = 0, after = 0;
        while (before < 3 && a.digits[before] == b.digits[before]) ++before;
        while (after < 3 && wa.digits[after] == wb.digits[after]) ++after;
        CHECK(before == after);

        auto back = psi_apply(w.inverse(), wa, tables);
        CHECK(back.digits == a.digits);
    }
}

TEST_CASE("psi_2 is faithful at finite level") {
    const auto& tables = tables_n2();
    BraidWord s1 = BraidWord::generator(2, 1);
    for (int m = 0; m <= 5; ++m) {
        for (long long q : {1, -1, 3}) {
            long long k = (1ll << m) * q;
            BraidWord w = s1.pow(static_cast<int>(k));
            CHECK_FALSE(rho_level(w, m + 1, tables).is_identity());
        }
    }
}

TEST_CASE("kernel membership examples") {
    const auto& tables = tables_n2();
    BraidWord s1 = BraidWord::generator(2, 1);
    for (int j = 1; j <= 3; ++j) CHECK(kernel_membership_psi(BraidWord(2), j, tables));
    CHECK_FALSE(kernel_membership_psi(s1, 1, tables));
    CHECK(kernel_membership_psi(s1.pow(4), 1, tables));
    CHECK_FALSE(kernel_membership_psi(s1.pow(4), 2, tables));
}

TEST_CASE("image orders at small levels") {
    const auto& t2 = tables_n2();
    CHECK(image_order(psi_level_generators(1, t2)) == 4);
    CHECK(image_order(psi_level_generators(2, t2)) == 8);

    const auto& t3 = tables_n3();
    try {
        std::uint64_t order = image_order(psi_level_generators(1, t3), 200000);
        CHECK(order >= 27);
    } catch (const EnumerationBudgetExceeded& e) {
        CHECK(e.elements_found >= 27);
    }
}

TEST_CASE("orbit partitions") {
    const auto& t2 = tables_n2();
    auto level1 = orbit_partition(psi_level_generators(1, t2));
    CHECK(level1.size() == 1);

    auto level2 = orbit_partition(psi_level_generators(2, t2));
    REQUIRE(level2.size() == 2);
    CHECK(level2[0].size() == 8);
    CHECK(level2[1].size() == 8);

    const auto& t3 = tables_n3();
    auto n3_level1 = orbit_partition(psi_level_generators(1, t3));
    CHECK(n3_level1.size() == 1);
}

TEST_CASE("phi level 1 agrees with the labeled-fiber monodromy") {
    const auto& fib = fiber_n3();
    const auto& tables = tables_n3();
    PhiOptions opts;
    for (int g : {1, 2}) {
        BraidWord w = BraidWord::generator(3, g);
        Perm psi1 = rho_level(w, 1, tables);
        // translate fiber labels to phi digit codes (d1 = class, d2 = index)
        Perm phi1 = phi_level_perm(w, 1, fib, opts);
        for (int label = 0; label < 27; ++label) {
            int xi = fib.x_index_of_label(label);
            auto labels = fib.labels_over_x(xi);
            long long d1 = label % 3;
            long long d2 = std::find(labels.begin(), labels.end(), label) - labels.begin();
            long long code = d1 + 3 * d2;
            int image = phi1(static_cast<int>(code));
            int e1 = image % 3, e2 = image / 3;
            int exi = fib.x_of_class[e1];
            int expected_label = fib.labels_over_x(exi)[e2];
            CHECK(expected_label == psi1(label));
        }
    }
}

TEST_CASE("phi first digit is the permutation representation") {
    const auto& fib = fiber_n3();
    std::mt19937 rng(12);
    for (int iter = 0; iter < 20; ++iter) {
        BraidWord w = random_word(rng, 3, 1 + iter % 6);
        for (int d1 = 0; d1 < 3; ++d1) {
            AdicPrefix p{AdicPrefix::Kind::Phi, 3, {d1}};
            auto out = phi_apply(w, p, fib);
            int xi = fib.x_of_class[d1];
            int expect = fib.class_of_x(perm_rep(w)(xi - 1) + 1);
            CHECK(out.digits[0] == expect);
        }
    }
}

TEST_CASE("phi depth guard") {
    const auto& fib = fiber_n3();
    PhiOptions opts;
    opts.max_depth = 2;
    AdicPrefix deep{AdicPrefix::Kind::Phi, 3, {0, 1, 2}};
    CHECK_THROWS_AS(phi_apply(BraidWord::generator(3, 1), deep, fib, opts), DepthExceeded);
}
