#include <catch2/catch_amalgamated.hpp>

#include "qmac/onerow.hpp"
#include "qmac/random.hpp"

using namespace qmac;

TEST_CASE("composition enumeration", "[onerow]") {
    CHECK(compositions(2, 4).size() == 10);  // C(5,3)
    CHECK(compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(compositions(1, 2) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

    // lexicographic, no repeats, all sums correct
    const auto cs = compositions(3, 3);
    CHECK(cs.size() == 10);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        int s = 0;
        for (int v : cs[i]) s += v;
        CHECK(s == 3);
        if (i > 0) CHECK(cs[i - 1] < cs[i]);
    }
}

TEST_CASE("one-row polynomial base cases", "[onerow]") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            CHECK(one_row_polynomial(0, n, k) == laurent_f::one(n));
            CHECK(one_row_polynomial(1, n, k) ==
                  to_fractions(monomial_symmetric(partition{1}, n)));
        }
}

TEST_CASE("one-row polynomial lambda=2, n=1: frozen value", "[onerow]") {
    for (int k = 1; k <= 3; ++k) {
        const vpoly t = vpoly::t_power(k);
        const vpoly q = vpoly::q_power(1);
        laurent_f expect = to_fractions(monomial_symmetric(partition{2}, 1));
        expect += laurent_f::constant(1, vfrac((vpoly(1) + q) * (vpoly(1) - t), vpoly(1) - t * q));
        CHECK(one_row_polynomial(2, 1, k) == expect);
    }
}

TEST_CASE("one-row polynomial agrees with the eigen-solver", "[onerow]") {
    for (int lambda = 0; lambda <= 3; ++lambda)
        for (int n = 1; n <= 2; ++n)
            for (int k = 1; k <= 2; ++k)
                CHECK(one_row_polynomial(lambda, n, k) ==
                      macdonald_polynomial(partition{lambda}, n, k));
}

TEST_CASE("one-row polynomial is monic, symmetric, triangular", "[onerow]") {
    for (int lambda = 0; lambda <= 4; ++lambda)
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= 3; ++k) {
                const auto p = one_row_polynomial(lambda, n, k);
                CHECK(is_hyperoctahedral_invariant(p));
                std::vector<int> lead(n, 0);
                lead[0] = lambda;
                CHECK(p.coeff(lead) == vfrac(1));
                const partition mu{lambda};
                for (const auto& [nu, c] : monomial_expansion(p))
                    CHECK(dominance_leq(nu, mu, n));
            }
}

TEST_CASE("contour normalization equals the Gaussian binomial", "[onerow]") {
    CHECK(contour_normalization(0, 2) == vfrac(1));
    for (int lambda = 0; lambda <= 5; ++lambda) CHECK(contour_normalization(lambda, 1) == vfrac(1));
    CHECK(contour_normalization(2, 2) ==
          vfrac(vpoly(1) + vpoly::q_power(1) + vpoly::q_power(2)));
    for (int k = 1; k <= 3; ++k)
        for (int lambda = 0; lambda <= 6; ++lambda)
            CHECK(contour_normalization(lambda, k) == vfrac(gaussian_binomial(k, lambda)));
}

TEST_CASE("residue solution: k=1 collapses to the bare prefactor", "[onerow]") {
    point_sampler rng(31);
    const int n = 2, k = 1;
    for (int lambda = 0; lambda <= 2; ++lambda)
        for (int trial = 0; trial < 5; ++trial) {
            const auto y = rng.y_vector(n);
            const complex q(0.4, 0.0);
            for (int i = 0; i < n; ++i) {
                complex expect = pow_int(y[i], lambda);
                for (int j = 0; j < n; ++j) {
                    if (j != i) expect /= 1.0 - y[j] / y[i];
                    expect /= 1.0 - 1.0 / (y[j] * y[i]);
                }
                const complex got = residue_solution(i, 1, lambda, n, k, q, y);
                CHECK(std::abs(got - expect) < 1e-10 * std::max(1.0, std::abs(expect)));
            }
        }
}

TEST_CASE("residue branches are related by inverting one variable", "[onerow]") {
    point_sampler rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2, k = 2, lambda = 2;
        const complex q(0.3, 0.0);
        const auto y = rng.y_vector(n);
        for (int i = 0; i < n; ++i) {
            auto yinv = y;
            yinv[i] = 1.0 / yinv[i];
            const complex minus = residue_solution(i, -1, lambda, n, k, q, y);
            const complex plus_inverted = residue_solution(i, 1, lambda, n, k, q, yinv);
            CHECK(std::abs(minus - plus_inverted) <
                  1e-10 * std::max(1.0, std::abs(minus)));
        }
    }
}

TEST_CASE("pole guard triggers near a prefactor zero", "[onerow]") {
    // y_2/y_1 = 1 makes (y_2/y_1;q)_k vanish at its first factor
    const std::vector<complex> y{complex(1.2, 0.0), complex(1.2, 0.0)};
    CHECK_THROWS_AS(residue_solution(0, 1, 1, 2, 1, complex(0.3, 0.0), y), pole_proximity);
}
