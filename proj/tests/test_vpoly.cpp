#include <catch2/catch_amalgamated.hpp>

#include "qmac/vfrac.hpp"
#include "qmac/vpoly.hpp"
#include "test_util.hpp"

using namespace qmac;

TEST_CASE("vpoly canonical form strips zeros", "[vpoly]") {
    vpoly p = vpoly::monomial(1, 2);
    p -= vpoly::monomial(1, 2);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);

    vpoly q = vpoly::monomial(rational(1, 2), 0) + vpoly::monomial(rational(1, 2), 0);
    CHECK(q == vpoly(1));
    CHECK(q.is_one());
}

TEST_CASE("vpoly arithmetic is exact", "[vpoly]") {
    const vpoly q = vpoly::q_power(1);
    // (1 - q)(1 + q) = 1 - q^2
    CHECK((vpoly(1) - q) * (vpoly(1) + q) == vpoly(1) - vpoly::q_power(2));

    const vpoly a = vpoly::monomial(rational(2, 3), -1);
    const vpoly b = vpoly::monomial(rational(3, 2), 1);
    CHECK(a * b == vpoly(1));

    CHECK(vpoly::v_power(3) * vpoly::v_power(-3) == vpoly(1));
    CHECK((q - q).is_zero());
}

TEST_CASE("vpoly exact division", "[vpoly]") {
    const vpoly q = vpoly::q_power(1);
    const vpoly num = vpoly(1) - vpoly::q_power(2);
    CHECK(num.divide_exact(vpoly(1) - q) == vpoly(1) + q);

    // Laurent units divide out.
    const vpoly p = vpoly::monomial(1, -3) + vpoly::monomial(2, 1);
    CHECK(p.divide_exact(vpoly::v_power(-3)) == vpoly(1) + vpoly::monomial(2, 4));

    CHECK_THROWS_AS((vpoly(1) + q).divide_exact(vpoly(1) - q), not_divisible);
}

TEST_CASE("vpoly division round-trips on random inputs", "[vpoly]") {
    qmac_test::test_rng rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const vpoly a = rng.nonzero_vpoly();
        const vpoly b = rng.nonzero_vpoly();
        CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("vpoly gcd", "[vpoly]") {
    const vpoly q = vpoly::q_power(1);
    const vpoly a = (vpoly(1) - q) * (vpoly(1) + q);
    const vpoly b = (vpoly(1) - q) * (vpoly(1) - q);
    const vpoly g = vpoly::gcd(a, b);
    // normalized: valuation 0, leading coefficient 1, i.e. -(1 - q) = q - 1
    CHECK(g == q - vpoly(1));
    CHECK(a.divide_exact(g) * b.divide_exact(g) * g * g == a * b);

    CHECK(vpoly::gcd(vpoly(), b) == q * q - vpoly::q_power(1).scaled(2) + vpoly(1));
}

TEST_CASE("vpoly evaluation", "[vpoly]") {
    const vpoly g = vpoly(1) + vpoly::q_power(1) + vpoly::q_power(2);
    CHECK(std::abs(g.eval_q(0.5) - complex(1.75, 0.0)) < 1e-12);

    // odd v powers are genuine half-powers of q
    const vpoly h = vpoly::v_power(1);
    CHECK(std::abs(h.eval_q(0.25) - complex(0.5, 0.0)) < 1e-12);
}

TEST_CASE("vfrac reduces to canonical form", "[vpoly]") {
    const vpoly q = vpoly::q_power(1);
    const vfrac f((vpoly(1) - q) * (vpoly(1) + q), vpoly(1) - q);
    CHECK(f.is_polynomial());
    CHECK(f.poly() == vpoly(1) + q);

    const vfrac g(vpoly(1) + q, (vpoly(1) + q) * (vpoly(1) + q));
    CHECK_FALSE(g.is_polynomial());
    CHECK(g == vfrac(vpoly(1), vpoly(1) + q));
}

TEST_CASE("vfrac equality by cross multiplication", "[vpoly]") {
    const vpoly q = vpoly::q_power(1);
    const vfrac a(vpoly(2), vpoly(1) - q);
    const vfrac b((vpoly(2)) * (vpoly(1) + q), (vpoly(1) - q) * (vpoly(1) + q));
    CHECK(a == b);
    CHECK(a + (-a) == vfrac(0));
    CHECK(a * vfrac(vpoly(1) - q) == vfrac(vpoly(2)));
}

TEST_CASE("vfrac field axioms on random inputs", "[vpoly]") {
    qmac_test::test_rng rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        const vfrac a(rng.random_vpoly(), rng.nonzero_vpoly());
        const vfrac b(rng.random_vpoly(), rng.nonzero_vpoly());
        const vfrac c(rng.random_vpoly(), rng.nonzero_vpoly());
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
