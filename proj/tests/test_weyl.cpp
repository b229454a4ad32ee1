#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qmac/weyl.hpp"

using namespace qmac;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Orbit size by direct enumeration over the whole group.
std::size_t orbit_size_enumerated(const partition& mu, int n) {
    std::set<std::vector<int>> seen;
    const auto base = mu.padded(n);
    for (const auto& [perm, signs] : signed_permutations(n)) {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[perm[i]] = signs[i] * base[i];
        seen.insert(e);
    }
    return seen.size();
}

}  // namespace

TEST_CASE("monomial symmetric examples", "[weyl]") {
    CHECK(monomial_symmetric(partition{}, 2) == laurent_p::one(2));

    const auto m1 = monomial_symmetric(partition{1}, 2);
    laurent_p expect(2);
    expect += laurent_p::variable(2, 0);
    expect += laurent_p::variable(2, 0, -1);
    expect += laurent_p::variable(2, 1);
    expect += laurent_p::variable(2, 1, -1);
    CHECK(m1 == expect);

    const auto m11 = monomial_symmetric(partition{1, 1}, 2);
    CHECK(m11.term_count() == 4);
    CHECK(m11.coeff({1, 1}) == vpoly(1));
    CHECK(m11.coeff({1, -1}) == vpoly(1));
    CHECK(m11.coeff({-1, 1}) == vpoly(1));
    CHECK(m11.coeff({-1, -1}) == vpoly(1));
}

TEST_CASE("monomial symmetric is invariant under the generators", "[weyl]") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : all_partitions(3, n, 4)) {
            const auto m = monomial_symmetric(mu, n);
            CHECK(is_hyperoctahedral_invariant(m));
            for (int i = 0; i < n; ++i) CHECK(m.invert_variable(i) == m);
        }
}

TEST_CASE("orbit sizes match the counting formula", "[weyl]") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : all_partitions(4, n, 4)) {
            const auto m = monomial_symmetric(mu, n);
            // 2^r * n! / (z! * prod multiplicities!) with r nonzero parts,
            // z zero slots
            const auto parts = mu.padded(n);
            int r = 0;
            long denom = 1;
            int run = 1;
            for (int i = 0; i < n; ++i) {
                if (parts[i] != 0) ++r;
                if (i > 0 && parts[i] == parts[i - 1] && parts[i] != 0)
                    ++run;
                else {
                    denom *= factorial(run);
                    run = 1;
                }
            }
            denom *= factorial(run);
            const int z = n - r;
            denom *= factorial(z);
            const long expect = (1L << r) * factorial(n) / denom;
            CHECK(m.term_count() == static_cast<std::size_t>(expect));
            CHECK(m.term_count() == orbit_size_enumerated(mu, n));
            // all coefficients are 1
            for (const auto& [e, c] : m.terms()) CHECK(c == vpoly(1));
        }
}

TEST_CASE("non-symmetric input is detected", "[weyl]") {
    CHECK_FALSE(is_hyperoctahedral_invariant(laurent_p::variable(2, 0)));
    const auto almost = laurent_p::variable(1, 0) + laurent_p::variable(1, 0, -1) +
                        laurent_p::variable(1, 0, 2);
    CHECK_FALSE(is_hyperoctahedral_invariant(almost));
}
