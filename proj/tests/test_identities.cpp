#include <catch2/catch_amalgamated.hpp>

#include "qmac/identities.hpp"

using namespace qmac;

TEST_CASE("sign-term sum identity at random points", "[identities]") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            const auto rep = check_sign_term_sum(n, k, 100, 1234);
            INFO(rep.identity << " n=" << n << " k=" << k << " diff=" << rep.max_abs_diff
                              << " " << rep.note);
            CHECK(rep.pass);
            CHECK(rep.max_abs_diff < 1e-10);
        }
}

TEST_CASE("sign-term sum is invariant under single-variable inversion", "[identities]") {
    for (int n = 1; n <= 3; ++n) {
        const auto rep = check_sign_term_sum_inversion(n, 2, 50, 99);
        INFO(rep.note);
        CHECK(rep.pass);
    }
}

TEST_CASE("deformed sum identity at random points", "[identities]") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            const auto rep = check_deformed_sum(n, k, 100, 4321);
            INFO(rep.identity << " n=" << n << " k=" << k << " diff=" << rep.max_abs_diff
                              << " " << rep.note);
            CHECK(rep.pass);
        }
}

TEST_CASE("deformed sum collapses to the sign-term sum at large x", "[identities]") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 2; ++k) {
            const auto rep = check_deformed_sum_limit(n, k, 20, 5);
            INFO("n=" << n << " k=" << k << " diff=" << rep.max_abs_diff);
            CHECK(rep.pass);
        }
}

TEST_CASE("deformed sum residue at x = t y_1 matches the closed form", "[identities]") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 2; ++k) {
            const auto rep = check_deformed_sum_residue(n, k, 20, 6);
            INFO("n=" << n << " k=" << k << " diff=" << rep.max_abs_diff);
            CHECK(rep.pass);
        }
}

TEST_CASE("Poincare identities, numeric and exact modes", "[identities]") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            const auto reps = check_poincare(n, k, 100, 77);
            REQUIRE(reps.size() == 2);
            for (const auto& rep : reps) {
                INFO(rep.identity << " n=" << n << " k=" << k << " diff=" << rep.max_abs_diff
                                  << " " << rep.note);
                CHECK(rep.pass);
                if (n <= 2) {
                    CHECK(rep.exact_checked);
                    CHECK(rep.exact_pass);
                }
            }
        }
    CHECK_THROWS_AS(check_poincare(5, 1), std::invalid_argument);
}

TEST_CASE("q-binomial specialization is exact", "[identities]") {
    for (int k = 1; k <= 3; ++k) {
        const auto rep = check_q_binomial(k, 6);
        INFO("k=" << k << " note: " << rep.note);
        CHECK(rep.pass);
        CHECK(rep.max_abs_diff == 0.0);
    }
    // spot values: k=2 gives 1, 1+q, 1+q+q^2, ...
    CHECK(gaussian_binomial(2, 1) == vpoly(1) + vpoly::q_power(1));
}

TEST_CASE("identity reports are replayable from the seed", "[identities]") {
    const auto a = check_deformed_sum(2, 2, 25, 31337);
    const auto b = check_deformed_sum(2, 2, 25, 31337);
    CHECK(a.max_abs_diff == b.max_abs_diff);
    CHECK(a.pass == b.pass);
}
