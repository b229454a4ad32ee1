#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "qmac/laurent.hpp"
#include "qmac/partition.hpp"
#include "qmac/qseries.hpp"
#include "qmac/weyl.hpp"

namespace qmac {

/// Eigenvalue c_mu = q^(-|mu|/2) prod_i (1 + q^(mu_i) t^(n-i+1)) with t = q^k,
/// expressed in v: v^(-|mu|) prod_i (1 + v^(2 mu_i + 2k(n-i+1))).
inline vpoly macdonald_eigenvalue(const partition& mu, int n, int k) {
    const auto m = mu.padded(n);
    vpoly c = vpoly::v_power(-mu.weight());
    for (int i = 0; i < n; ++i)
        c *= vpoly::one() + vpoly::v_power(2 * m[i] + 2 * k * (n - i));
    return c;
}

namespace detail {

// Denominator factors of one operator term for sign vector a:
// (1 - y_i^{a_i} y_j^{a_j}) for i<j and (1 - y_i^{2 a_i}).
inline std::vector<std::vector<int>> term_denominator_exponents(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[i] = a[i];
            e[j] = a[j];
            out.push_back(std::move(e));
        }
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 2 * a[i];
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<std::vector<int>> sign_vectors(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> a(n, 1);
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) a[b] = -1;
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace detail

/// The type-C_n Macdonald q-difference operator, applied exactly:
///
///   E f = sum over sign vectors a of
///         prod_{i<j} (1 - t y_i^{a_i} y_j^{a_j}) / (1 - y_i^{a_i} y_j^{a_j})
///         prod_i    (1 - t y_i^{2 a_i}) / (1 - y_i^{2 a_i})  ·  T^{a/2} f,
///
/// with t = q^k and T^{a/2} the half-step shifts y_i -> q^{a_i/2} y_i.
/// Every term is placed over the common denominator (the product of all
/// pair and square factors in both orientations), the numerators are summed,
/// and one exact division recovers the polynomial result. The division
/// remainder check is the internal audit that f really was invariant.
inline laurent_p macdonald_operator(const laurent_p& f, int k) {
    if (k < 1) throw std::invalid_argument("macdonald_operator: need k >= 1");
    const int n = f.nvars();
    if (!is_hyperoctahedral_invariant(f))
        throw not_symmetric("macdonald_operator: input is not W(C_n)-invariant");

    const vpoly t = vpoly::t_power(k);
    const auto signs = detail::sign_vectors(n);

    factored_denominator common;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    std::vector<int> e(n, 0);
                    e[i] = si;
                    e[j] = sj;
                    common.factors.push_back({vpoly::one(), std::move(e)});
                }
    for (int i = 0; i < n; ++i)
        for (int si : {1, -1}) {
            std::vector<int> e(n, 0);
            e[i] = 2 * si;
            common.factors.push_back({vpoly::one(), std::move(e)});
        }

    auto term_for = [&](const std::vector<int>& a) {
        laurent_p term = f;
        for (int i = 0; i < n; ++i) term = term.half_shift(i, a[i]);
        const auto own = detail::term_denominator_exponents(a);
        // numerator factors (1 - t y^alpha) for this term's own alphas
        for (const auto& alpha : own) term = term.times_binomial(t, alpha);
        // complement of the term's denominator inside the common denominator
        for (const auto& fac : common.factors) {
            if (std::find(own.begin(), own.end(), fac.alpha) == own.end())
                term = term.times_binomial(fac.c, fac.alpha);
        }
        return term;
    };

    // The 2^n terms are independent; evaluate in parallel, combine in index
    // order so the result is reproducible.
    std::vector<std::future<laurent_p>> futures;
    futures.reserve(signs.size());
    for (const auto& a : signs)
        futures.push_back(std::async(std::launch::async, term_for, a));
    laurent_p total(n);
    for (auto& fu : futures) total += fu.get();

    return exact_divide(std::move(total), common);
}

/// Fraction-coefficient overload: clears the common v-denominator, applies
/// the operator to the polynomial part, and divides back. Valid because the
/// operator is linear over v-constants.
inline laurent_f macdonald_operator(const laurent_f& f, int k) {
    auto [num, den] = clear_denominators(f);
    return divide_coeffs(macdonald_operator(num, k), den);
}

/// Expansion of an invariant Laurent polynomial in the monomial symmetric
/// basis: peel the (weight, lex)-greatest orbit representative, which is
/// dominance-maximal among the remaining support.
template <class C>
std::map<partition, C> monomial_expansion(laurent<C> f) {
    if (!is_hyperoctahedral_invariant(f))
        throw not_symmetric("monomial_expansion: input is not W(C_n)-invariant");
    const int n = f.nvars();
    std::map<partition, C> out;
    while (!f.is_zero()) {
        bool have = false;
        partition best;
        for (const auto& [e, c] : f.terms()) {
            partition rep = partition::orbit_representative(e);
            if (!have || rep.weight() > best.weight() ||
                (rep.weight() == best.weight() && best < rep)) {
                best = rep;
                have = true;
            }
        }
        C c = f.coeff(best.padded(n));
        if (c.is_zero())
            throw internal_error("monomial_expansion: dominant representative missing from support");
        f -= monomial_symmetric<C>(best, n).scaled(c);
        out.emplace(best, std::move(c));
    }
    return out;
}

namespace detail {

/// Memoized monomial-basis expansion of E m_nu, keyed by (nu, n, k). Shared
/// across threads behind a mutex; results are pure so concurrent callers see
/// identical values.
inline const std::map<partition, vpoly>& operator_on_monomial(const partition& nu, int n, int k) {
    using key_t = std::tuple<std::vector<int>, int, int>;
    static std::map<key_t, std::map<partition, vpoly>> memo;
    static std::mutex mu;
    const key_t key{nu.parts(), n, k};
    {
        std::scoped_lock lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    auto expansion = monomial_expansion(macdonald_operator(monomial_symmetric<vpoly>(nu, n), k));
    std::scoped_lock lock(mu);
    return memo.emplace(key, std::move(expansion)).first->second;
}

}  // namespace detail

/// The Macdonald polynomial P_mu = m_mu + sum_{nu < mu} a_nu m_nu, built from
/// the defining triangular eigenproblem: expanding E P = c_mu P in the m basis
/// gives (c_mu - c_nu) a_nu = sum_{rho > nu} a_rho [m_nu](E m_rho), solved
/// walking down the dominance order. Coefficients are reduced fractions; they
/// collapse to polynomials whenever the denominators cancel.
inline laurent_f macdonald_polynomial(const partition& mu, int n, int k) {
    if (mu.length() > n)
        throw std::invalid_argument("macdonald_polynomial: partition longer than variable count");
    if (k < 1) throw std::invalid_argument("macdonald_polynomial: need k >= 1");

    const vpoly c_mu = macdonald_eigenvalue(mu, n, k);
    const auto lows = lower_partitions(mu, n);

    std::vector<partition> processed{mu};
    std::map<partition, vfrac> coeff;
    coeff.emplace(mu, vfrac(1));

    for (const auto& nu : lows) {
        vfrac rhs(0);
        for (const auto& rho : processed) {
            const auto& expansion = detail::operator_on_monomial(rho, n, k);
            auto it = expansion.find(nu);
            if (it != expansion.end()) rhs += coeff.at(rho) * it->second;
        }
        const vpoly gap = c_mu - macdonald_eigenvalue(nu, n, k);
        if (gap.is_zero())
            throw degenerate_eigenvalue("macdonald_polynomial: c_mu = c_nu for nu = " + nu.str() +
                                        ", mu = " + mu.str());
        coeff.emplace(nu, rhs / vfrac(gap));
        processed.push_back(nu);
    }

    laurent_f p(n);
    for (const auto& [nu, a] : coeff)
        if (!a.is_zero()) p += monomial_symmetric<vfrac>(nu, n).scaled(a);
    return p;
}

}  // namespace qmac
