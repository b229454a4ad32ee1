#include <catch2/catch_amalgamated.hpp>

#include "qmac/macdonald.hpp"
#include "qmac/qseries.hpp"
#include "test_util.hpp"

using namespace qmac;

namespace {

// Independent q->1 oracle: the Gaussian binomial (q^k;q)_i/(q;q)_i counts
// multisets, so its coefficient sum is C(k-1+i, i).
rational binomial_int(int n, int r) {
    rational acc(1);
    for (int i = 0; i < r; ++i) acc *= make_rational(n - i, i + 1);
    return acc;
}

}  // namespace

TEST_CASE("q-Pochhammer basics", "[qseries]") {
    const vpoly q = vpoly::q_power(1);
    CHECK(q_pochhammer(q, 0) == vpoly(1));
    // (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
    CHECK(q_pochhammer(q, 2) ==
          vpoly(1) - q - vpoly::q_power(2) + vpoly::q_power(3));
    // t = q^k with k = 1: same value through the t route
    CHECK(q_pochhammer(vpoly::t_power(1), 2) == q_pochhammer(q, 2));
}

TEST_CASE("q-Pochhammer recurrence on random inputs", "[qseries]") {
    qmac_test::test_rng rng(42);
    const vpoly q = vpoly::q_power(1);
    for (int trial = 0; trial < 50; ++trial) {
        const vpoly a = rng.random_vpoly(3, 3);
        const int m = rng.int_in(0, 10);
        const vpoly lhs = q_pochhammer(a, m + 1);
        const vpoly rhs = q_pochhammer(a, m) * (vpoly(1) - a * q.pow(m));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q-Pochhammer numeric overload matches exact layer", "[qseries]") {
    const complex q(0.3, 0.0);
    const complex a(0.8, 0.2);
    const complex num = q_pochhammer(a, q, 3);
    const complex expect = (1.0 - a) * (1.0 - a * q) * (1.0 - a * q * q);
    CHECK(std::abs(num - expect) < 1e-14);
}

TEST_CASE("Gaussian binomial small values", "[qseries]") {
    const vpoly q = vpoly::q_power(1);
    for (int k = 1; k <= 4; ++k) CHECK(gaussian_binomial(k, 0) == vpoly(1));
    for (int i = 0; i <= 8; ++i) CHECK(gaussian_binomial(1, i) == vpoly(1));
    CHECK(gaussian_binomial(2, 2) == vpoly(1) + q + vpoly::q_power(2));
    CHECK(gaussian_binomial(2, 1) == vpoly(1) + q);
}

TEST_CASE("Gaussian binomial positivity, degree and q->1 count", "[qseries]") {
    for (int k = 1; k <= 4; ++k)
        for (int i = 0; i <= 8; ++i) {
            const vpoly g = gaussian_binomial(k, i);
            for (const auto& [e, c] : g.terms()) {
                CHECK(c > 0);
                CHECK(c.get_den() == 1);
                CHECK(e % 2 == 0);  // polynomial in q
                CHECK(e >= 0);
            }
            if (!g.is_zero()) CHECK(g.max_exp() == 2 * i * (k - 1));
            CHECK(g.sum_of_coeffs() == binomial_int(k - 1 + i, i));
        }
}

TEST_CASE("eigenvalue at the zero partition", "[qseries]") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            vpoly expect = vpoly::one();
            for (int i = 1; i <= n; ++i) expect *= vpoly(1) + vpoly::t_power(k, i);
            CHECK(macdonald_eigenvalue(partition{}, n, k) == expect);
        }
}

TEST_CASE("eigenvalue one-row factored form", "[qseries]") {
    // independent oracle: (q^(-l/2) + q^(l/2) t^n) prod_{i<n} (1 + t^i)
    for (int lambda = 0; lambda <= 6; ++lambda)
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= 3; ++k) {
                vpoly expect = vpoly::v_power(-lambda) +
                               vpoly::v_power(lambda) * vpoly::t_power(k, n);
                for (int i = 1; i < n; ++i) expect *= vpoly(1) + vpoly::t_power(k, i);
                CHECK(macdonald_eigenvalue(partition{lambda}, n, k) == expect);
            }
}

TEST_CASE("eigenvalue explicit small case", "[qseries]") {
    // c_{(1)} for n = k = 1: q^(-1/2) + q^(3/2)
    CHECK(macdonald_eigenvalue(partition{1}, 1, 1) ==
          vpoly::v_power(-1) + vpoly::v_power(3));
}
