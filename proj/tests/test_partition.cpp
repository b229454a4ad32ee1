#include <catch2/catch_amalgamated.hpp>

#include "qmac/partition.hpp"

using namespace qmac;

namespace {

// Brute-force oracle for cone membership: d = sum c_i alpha_i with c_i >= 0,
// alpha_i = e_i - e_{i+1} (i < n), alpha_n = 2 e_n, searched exhaustively.
bool in_positive_cone_bruteforce(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    int bound = 0;
    for (int x : d) bound += std::abs(x);
    std::vector<int> c(n, 0);
    for (;;) {
        std::vector<int> sum(n, 0);
        for (int i = 0; i + 1 < n; ++i) {
            sum[i] += c[i];
            sum[i + 1] -= c[i];
        }
        sum[n - 1] += 2 * c[n - 1];
        if (sum == d) return true;
        int pos = 0;
        while (pos < n && c[pos] == bound) c[pos++] = 0;
        if (pos == n) return false;
        ++c[pos];
    }
}

bool dominance_oracle(const partition& nu, const partition& mu, int n) {
    const auto a = nu.padded(n), b = mu.padded(n);
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = b[i] - a[i];
    return in_positive_cone_bruteforce(d);
}

}  // namespace

TEST_CASE("partition construction and canonical form", "[partition]") {
    CHECK(partition{2, 0} == partition{2});
    CHECK(partition{}.weight() == 0);
    CHECK(partition{3, 1}.weight() == 4);
    CHECK(partition{3, 1}.padded(3) == std::vector<int>{3, 1, 0});
    CHECK_THROWS_AS(partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(partition({-1}), std::invalid_argument);
    CHECK_THROWS_AS(partition({2, 1}).padded(1), std::invalid_argument);
}

TEST_CASE("orbit representative", "[partition]") {
    CHECK(partition::orbit_representative({-2, 1, 0}) == partition{2, 1});
    CHECK(partition::orbit_representative({0, 0}) == partition{});
}

TEST_CASE("dominance examples", "[partition]") {
    CHECK(dominance_leq(partition{}, partition{2}, 2));        // (2,0)-(0,0): even total
    CHECK_FALSE(dominance_leq(partition{1}, partition{2}, 2)); // odd total
    CHECK(dominance_leq(partition{1, 1}, partition{2}, 2));    // difference is a simple root
    CHECK(dominance_leq(partition{2}, partition{2}, 2));       // reflexive
    CHECK_FALSE(dominance_leq(partition{2}, partition{1, 1}, 2));
}

TEST_CASE("dominance agrees with brute-force cone membership", "[partition]") {
    for (int n = 1; n <= 3; ++n) {
        const auto all = all_partitions(4, n, 4);
        for (const auto& nu : all)
            for (const auto& mu : all)
                CHECK(dominance_leq(nu, mu, n) == dominance_oracle(nu, mu, n));
    }
}

TEST_CASE("dominance is a partial order", "[partition]") {
    const int n = 3;
    const auto all = all_partitions(6, n, 6);
    for (const auto& a : all) {
        CHECK(dominance_leq(a, a, n));
        for (const auto& b : all) {
            if (dominance_leq(a, b, n) && dominance_leq(b, a, n)) CHECK(a == b);
            for (const auto& c : all)
                if (dominance_leq(a, b, n) && dominance_leq(b, c, n))
                    CHECK(dominance_leq(a, c, n));
        }
    }
}

TEST_CASE("lower partitions", "[partition]") {
    CHECK(lower_partitions(partition{1}, 3).empty());
    CHECK(lower_partitions(partition{}, 2).empty());
    CHECK(lower_partitions(partition{2}, 2) ==
          std::vector<partition>{partition{1, 1}, partition{}});
    CHECK(lower_partitions(partition{3, 1}, 2) ==
          std::vector<partition>{partition{2, 2}, partition{2}, partition{1, 1}, partition{}});
}

TEST_CASE("lower partitions agree with a brute-force scan", "[partition]") {
    const partition mu{2};
    std::vector<partition> expect;
    for (const auto& nu : all_partitions(2, 2, 4))
        if (nu != mu && dominance_oracle(nu, mu, 2)) expect.push_back(nu);
    auto got = lower_partitions(mu, 2);
    CHECK(got.size() == expect.size());
    for (const auto& nu : expect)
        CHECK(std::find(got.begin(), got.end(), nu) != got.end());
}
