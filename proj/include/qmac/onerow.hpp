#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qmac/laurent.hpp"
#include "qmac/macdonald.hpp"
#include "qmac/qseries.hpp"

namespace qmac {

/// Weak compositions of total into a fixed number of parts, visited in
/// lexicographic order. The visitor sees each composition once.
template <class F>
void for_each_composition(int total, int parts, F&& visit) {
    if (total < 0 || parts < 1)
        throw std::invalid_argument("for_each_composition: need total >= 0, parts >= 1");
    std::vector<int> comp(parts, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            comp[pos] = remaining;
            visit(const_cast<const std::vector<int>&>(comp));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            comp[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    for_each_composition(total, parts, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

/// The explicit one-row Macdonald polynomial
///
///   P_(lambda,0,...,0) = (q;q)_lambda / (t;q)_lambda  ·
///       sum_{i_1+...+i_{2n}=lambda} prod_m [ (t;q)_{i_m} / (q;q)_{i_m} ]
///       y_1^{i_1-i_{2n}} y_2^{i_2-i_{2n-1}} ... y_n^{i_n-i_{n+1}},
///
/// with every (t;q)_i/(q;q)_i a Gaussian binomial. Partial Gaussian products
/// are carried down the composition tree, so each node costs one coefficient
/// multiply. The prefactor is 1/gauss(k,lambda); coefficients that survive it
/// as polynomials come out with denominator 1, the rest stay reduced
/// fractions.
inline laurent_f one_row_polynomial(int lambda, int n, int k) {
    if (lambda < 0 || n < 1 || k < 1)
        throw std::invalid_argument("one_row_polynomial: need lambda >= 0, n >= 1, k >= 1");
    std::vector<vpoly> gauss(lambda + 1);
    for (int i = 0; i <= lambda; ++i) gauss[i] = gaussian_binomial(k, i);

    const int parts = 2 * n;
    laurent_p sum(n);
    std::vector<int> comp(parts, 0);
    std::vector<int> e(n);
    // depth-first over compositions, partial coefficient product on the stack
    auto rec = [&](auto&& self, int pos, int remaining, const vpoly& partial) -> void {
        if (pos == parts - 1) {
            comp[pos] = remaining;
            for (int j = 0; j < n; ++j) e[j] = comp[j] - comp[parts - 1 - j];
            sum.add_term(e, partial * gauss[remaining]);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            comp[pos] = v;
            self(self, pos + 1, remaining - v, partial * gauss[v]);
        }
    };
    rec(rec, 0, lambda, vpoly::one());
    return divide_coeffs(sum, gauss[lambda]);
}

/// (t;q)_lambda / (q;q)_lambda, the constant relating the full-cycle contour
/// integral to the one-row polynomial. For t = q^k it reduces to the
/// Gaussian binomial gauss(k, lambda).
inline vfrac contour_normalization(int lambda, int k) {
    if (lambda < 0 || k < 1)
        throw std::invalid_argument("contour_normalization: need lambda >= 0, k >= 1");
    return vfrac(q_pochhammer(vpoly::t_power(k), lambda),
                 q_pochhammer(vpoly::q_power(1), lambda));
}

namespace detail {

// (a;q)_m with a per-factor modulus guard on every factor.
inline complex poch_guarded(complex a, complex q, int m, double guard = 1e-9) {
    complex acc(1.0, 0.0);
    complex aq = a;
    for (int i = 0; i < m; ++i) {
        const complex factor = complex(1.0, 0.0) - aq;
        if (std::abs(factor) <= guard)
            throw pole_proximity("q-Pochhammer factor within guard distance of zero");
        acc *= factor;
        aq *= q;
    }
    return acc;
}

}  // namespace detail

/// Closed-form value of the small-cycle integral around the poles
/// x = y_i q^m (branch +1) or x = y_i^{-1} q^m (branch -1), m = 0..k-1.
/// Every denominator factor carries a 1e-9 pole guard.
inline complex residue_solution(int i, int branch, int lambda, int n, int k, complex q_val,
                                const std::vector<complex>& y) {
    if (i < 0 || i >= n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("residue_solution: bad index or y size");
    if (branch != 1 && branch != -1)
        throw std::invalid_argument("residue_solution: branch must be +1 or -1");
    const complex q = q_val;
    const complex t = pow_int(q, k);
    const complex tq = q / t;  // t^{-1} q

    complex pref_den = detail::poch_guarded(q, q, k - 1);
    complex lsum(0.0, 0.0);
    if (branch == 1) {
        for (int j = 0; j < n; ++j) {
            if (j != i) pref_den *= detail::poch_guarded(y[j] / y[i], q, k);
            pref_den *= detail::poch_guarded(1.0 / (y[j] * y[i]), q, k);
        }
        const complex z = pow_int(t, 2 * n) * pow_int(q, lambda);
        for (int l = 0; l < k; ++l) {
            complex term = pow_int(z, l);
            for (int j = 0; j < n; ++j) {
                term *= q_pochhammer(tq * y[i] / y[j], q, l) *
                        q_pochhammer(tq * y[i] * y[j], q, l);
                term /= detail::poch_guarded(q * y[i] / y[j], q, l) *
                        detail::poch_guarded(q * y[i] * y[j], q, l);
            }
            lsum += term;
        }
        return pow_int(y[i], lambda) / pref_den * lsum;
    }
    for (int j = 0; j < n; ++j) {
        if (j != i) pref_den *= detail::poch_guarded(y[i] / y[j], q, k);
        pref_den *= detail::poch_guarded(y[j] * y[i], q, k);
    }
    const complex z = pow_int(t, 2 * n) * pow_int(q, lambda);
    for (int l = 0; l < k; ++l) {
        complex term = pow_int(z, l);
        for (int j = 0; j < n; ++j) {
            term *= q_pochhammer(tq * y[j] / y[i], q, l) *
                    q_pochhammer(tq / (y[i] * y[j]), q, l);
            term /= detail::poch_guarded(q * y[j] / y[i], q, l) *
                    detail::poch_guarded(q / (y[i] * y[j]), q, l);
        }
        lsum += term;
    }
    return pow_int(y[i], -lambda) / pref_den * lsum;
}

/// Sum of the small-cycle values over all variables and both branches;
/// homologous to the full cycle enclosing every pole.
inline complex residue_solution_sum(int lambda, int n, int k, complex q_val,
                                    const std::vector<complex>& y) {
    complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i)
        for (int branch : {1, -1}) acc += residue_solution(i, branch, lambda, n, k, q_val, y);
    return acc;
}

}  // namespace qmac
