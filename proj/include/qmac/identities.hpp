#pragma once

#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmac/contour.hpp"
#include "qmac/macdonald.hpp"
#include "qmac/random.hpp"
#include "qmac/weyl.hpp"

namespace qmac {

/// Outcome of one identity check. max_abs_diff is the worst deviation over
/// all sampled points; note carries the witness point when the check fails.
/// exact_checked marks identities additionally verified by exact symbolic
/// algebra (cleared denominators, numerator compared to zero); exact_pass is
/// that verdict. A disagreement between the two modes is flagged in note.
struct identity_report {
    std::string identity;
    int n = 0;
    int k = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double max_abs_diff = 0.0;
    bool pass = false;
    bool exact_checked = false;
    bool exact_pass = true;
    std::string note;
};

namespace detail {

// Operator coefficient at y for sign vector a, with pole guards.
inline complex sign_term_coeff(const std::vector<complex>& y, complex t,
                               const std::vector<int>& a, double guard = 1e-9) {
    const int n = static_cast<int>(y.size());
    std::vector<complex> ya(n);
    for (int i = 0; i < n; ++i) ya[i] = pow_int(y[i], a[i]);
    complex coeff(1.0, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const complex den = 1.0 - ya[i] * ya[j];
            if (std::abs(den) <= guard) throw pole_proximity("sign_term_coeff: pair factor");
            coeff *= (1.0 - t * ya[i] * ya[j]) / den;
        }
    for (int i = 0; i < n; ++i) {
        const complex den = 1.0 - ya[i] * ya[i];
        if (std::abs(den) <= guard) throw pole_proximity("sign_term_coeff: square factor");
        coeff *= (1.0 - t * ya[i] * ya[i]) / den;
    }
    return coeff;
}

inline complex sign_term_sum(const std::vector<complex>& y, complex t) {
    complex acc(0.0, 0.0);
    for (const auto& a : sign_vectors(static_cast<int>(y.size())))
        acc += sign_term_coeff(y, t, a);
    return acc;
}

/// Sign-term sum with each term carrying (1 - y_i^{a_i}/x)/(1 - t y_i^{a_i}/x).
inline complex deformed_sign_term_sum(const std::vector<complex>& y, complex t, complex x,
                                      double guard = 1e-9) {
    const int n = static_cast<int>(y.size());
    complex acc(0.0, 0.0);
    for (const auto& a : sign_vectors(n)) {
        complex term = sign_term_coeff(y, t, a, guard);
        for (int i = 0; i < n; ++i) {
            const complex yai = pow_int(y[i], a[i]);
            const complex den = 1.0 - t * yai / x;
            if (std::abs(den) <= guard) throw pole_proximity("deformed_sign_term_sum: x factor");
            term *= (1.0 - yai / x) / den;
        }
        acc += term;
    }
    return acc;
}

/// prod_i (1 - y_i/x)(1 - y_i^{-1}/x) / [(1 - t y_i/x)(1 - t y_i^{-1}/x)].
inline complex crossratio_product(const std::vector<complex>& y, complex t, complex x,
                                  double guard = 1e-9) {
    complex acc(1.0, 0.0);
    for (const auto& yi : y) {
        const complex d1 = 1.0 - t * yi / x, d2 = 1.0 - t / (yi * x);
        if (std::abs(d1) <= guard || std::abs(d2) <= guard)
            throw pole_proximity("crossratio_product: denominator factor");
        acc *= (1.0 - yi / x) * (1.0 - 1.0 / (yi * x)) / (d1 * d2);
    }
    return acc;
}

/// Closed form of the deformed sum: prod_{i<n}(1+t^i) * {1 + t^n * crossratio}.
inline complex deformed_sum_closed_form(const std::vector<complex>& y, complex t, complex x) {
    const int n = static_cast<int>(y.size());
    complex pref(1.0, 0.0);
    for (int i = 1; i < n; ++i) pref *= 1.0 + pow_int(t, i);
    return pref * (1.0 + pow_int(t, n) * crossratio_product(y, t, x));
}

/// Residue of [deformed sum / x] dx at x = t*y_1, closed form:
/// t^{1-n} (1 - t^{-1}) (1 - t y_1^2)/(1 - y_1^2) prod_{i<n}(1 + t^i)
///   prod_{j>=2} (1 - t y_1 y_j)(1 - t y_1/y_j) / [(1 - y_1 y_j)(1 - y_1/y_j)].
inline complex deformed_sum_residue_closed_form(const std::vector<complex>& y, complex t) {
    const int n = static_cast<int>(y.size());
    complex acc = pow_int(t, 1 - n) * (1.0 - 1.0 / t) * (1.0 - t * y[0] * y[0]) /
                  (1.0 - y[0] * y[0]);
    for (int i = 1; i < n; ++i) acc *= 1.0 + pow_int(t, i);
    for (int j = 1; j < n; ++j)
        acc *= (1.0 - t * y[0] * y[j]) * (1.0 - t * y[0] / y[j]) /
               ((1.0 - y[0] * y[j]) * (1.0 - y[0] / y[j]));
    return acc;
}

inline std::string witness(const std::vector<complex>& y, double q) {
    std::ostringstream os;
    os << "q = " << q << ", y = [";
    for (std::size_t i = 0; i < y.size(); ++i) {
        os << (i ? ", " : "") << "(" << y[i].real() << "," << y[i].imag() << ")";
    }
    os << "]";
    return os.str();
}

/// Drive a point check: draw (q, y) per trial, resample on pole proximity,
/// track the worst absolute deviation.
template <class Eval>
identity_report run_point_checks(const std::string& name, int n, int k, int trials,
                                 std::uint64_t seed, double tol, Eval&& eval_diff) {
    identity_report rep;
    rep.identity = name;
    rep.n = n;
    rep.k = k;
    rep.trials = trials;
    rep.seed = seed;
    point_sampler rng(seed);
    int done = 0, attempts = 0;
    while (done < trials) {
        if (++attempts > 100 * trials + 1000)
            throw pole_proximity(name + ": resampling budget exhausted");
        const double q = rng.uniform(0.1, 0.9);
        const auto y = rng.y_vector(n);
        double diff;
        try {
            diff = eval_diff(q, y, rng);
        } catch (const pole_proximity&) {
            continue;
        }
        if (diff > rep.max_abs_diff) {
            rep.max_abs_diff = diff;
            if (diff >= tol) rep.note = "worst point: " + witness(y, q);
        }
        ++done;
    }
    rep.pass = rep.max_abs_diff < tol;
    return rep;
}

}  // namespace detail

/// Identity: sum over sign vectors of the operator coefficients equals
/// prod_{i=1}^n (1 + t^i), independent of y.
inline identity_report check_sign_term_sum(int n, int k, int trials = 100,
                                           std::uint64_t seed = 0, double tol = 1e-10) {
    return detail::run_point_checks(
        "sign-term-sum", n, k, trials, seed, tol,
        [n, k](double q, const std::vector<complex>& y, point_sampler&) {
            const complex t = pow_int(complex(q, 0.0), k);
            complex expect(1.0, 0.0);
            for (int i = 1; i <= n; ++i) expect *= 1.0 + pow_int(t, i);
            return std::abs(detail::sign_term_sum(y, t) - expect);
        });
}

/// Per-variable inversion invariance of the sign-term sum: the sum over sign
/// vectors re-indexes under y_i -> y_i^{-1}.
inline identity_report check_sign_term_sum_inversion(int n, int k, int trials = 100,
                                                     std::uint64_t seed = 0,
                                                     double tol = 1e-10) {
    return detail::run_point_checks(
        "sign-term-sum-inversion", n, k, trials, seed, tol,
        [n, k](double q, const std::vector<complex>& y, point_sampler&) {
            const complex t = pow_int(complex(q, 0.0), k);
            const complex base = detail::sign_term_sum(y, t);
            double worst = 0.0;
            for (int i = 0; i < n; ++i) {
                auto yi = y;
                yi[i] = 1.0 / yi[i];
                worst = std::max(worst, std::abs(detail::sign_term_sum(yi, t) - base));
            }
            return worst;
        });
}

/// Identity: the deformed sign-term sum equals
/// prod_{i<n}(1+t^i) {1 + t^n prod_i (1-y_i/x)(1-y_i^{-1}/x) /
///                              [(1-t y_i/x)(1-t y_i^{-1}/x)]}.
inline identity_report check_deformed_sum(int n, int k, int trials = 100,
                                          std::uint64_t seed = 0, double tol = 1e-10) {
    return detail::run_point_checks(
        "deformed-sum", n, k, trials, seed, tol,
        [n, k](double q, const std::vector<complex>& y, point_sampler& rng) {
            const complex t = pow_int(complex(q, 0.0), k);
            const complex x = rng.annulus_point(0.7, 1.4);
            return std::abs(detail::deformed_sign_term_sum(y, t, x) -
                            detail::deformed_sum_closed_form(y, t, x));
        });
}

/// Large-|x| limit of both sides of the deformed identity: at |x| = 10^6 both
/// collapse to prod(1+t^i) within 1e-4.
inline identity_report check_deformed_sum_limit(int n, int k, int trials = 20,
                                                std::uint64_t seed = 0, double tol = 1e-4) {
    return detail::run_point_checks(
        "deformed-sum-limit", n, k, trials, seed, tol,
        [n, k](double q, const std::vector<complex>& y, point_sampler& rng) {
            const complex t = pow_int(complex(q, 0.0), k);
            const complex x = std::polar(1e6, rng.uniform(0.0, 2.0 * std::numbers::pi));
            complex expect(1.0, 0.0);
            for (int i = 1; i <= n; ++i) expect *= 1.0 + pow_int(t, i);
            const double d1 = std::abs(detail::deformed_sign_term_sum(y, t, x) - expect);
            const double d2 = std::abs(detail::deformed_sum_closed_form(y, t, x) - expect);
            return std::max(d1, d2);
        });
}

/// Numeric residue of both sides of the deformed identity at x = t y_1,
/// against the closed form: evaluate (x - t y_1) f(x)/x at x = t y_1 (1+1e-6)
/// and compare relative to the closed-form magnitude. The finite offset makes
/// the estimator first-order accurate only when x = t y_1 is well separated
/// from the other poles t y_j^{+-1} and the residue prefactors are moderate,
/// so ill-conditioned draws are resampled.
inline identity_report check_deformed_sum_residue(int n, int k, int trials = 20,
                                                  std::uint64_t seed = 0, double tol = 1e-5) {
    return detail::run_point_checks(
        "deformed-sum-residue", n, k, trials, seed, tol,
        [n, k](double q, const std::vector<complex>& y, point_sampler&) {
            const complex t = pow_int(complex(q, 0.0), k);
            const complex x0 = t * y[0];
            // conditioning guards: other poles in x away from x0, and the
            // factors of the closed form away from zero
            for (int j = 0; j < n; ++j) {
                if (j > 0 && std::abs(x0 - t * y[j]) < 0.2 * std::abs(x0))
                    throw pole_proximity("residue check: nearby pole t*y_j");
                if (std::abs(x0 - t / y[j]) < 0.2 * std::abs(x0))
                    throw pole_proximity("residue check: nearby pole t/y_j");
            }
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    if (std::abs(1.0 - y[i] * y[j]) < 0.05)
                        throw pole_proximity("residue check: ill-conditioned y pair");
                    if (i < j && std::abs(1.0 - y[i] / y[j]) < 0.05)
                        throw pole_proximity("residue check: ill-conditioned y ratio");
                }
            const complex x = x0 * (1.0 + 1e-6);
            const complex expect = detail::deformed_sum_residue_closed_form(y, t);
            const complex lhs = (x - x0) * detail::deformed_sign_term_sum(y, t, x) / x;
            const complex rhs = (x - x0) * detail::deformed_sum_closed_form(y, t, x) / x;
            const double scale = std::max(1.0, std::abs(expect));
            return std::max(std::abs(lhs - expect), std::abs(rhs - expect)) / scale;
        });
}

namespace detail {

// Action of a signed permutation on an evaluation point:
// (w y)[perm[i]] = y[i]^{signs[i]}.
inline std::vector<complex> act_point(const std::vector<int>& perm, const std::vector<int>& signs,
                                      const std::vector<complex>& y) {
    std::vector<complex> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        out[perm[i]] = signs[i] == 1 ? y[i] : 1.0 / y[i];
    return out;
}

// Signed-permutation image of an exponent vector.
inline std::vector<int> act_exponent(const std::vector<int>& perm, const std::vector<int>& signs,
                                     const std::vector<int>& alpha) {
    std::vector<int> out(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) out[perm[i]] = signs[i] * alpha[i];
    return out;
}

/// Exact group-average identity over a list of group elements acting on the
/// base factor exponents: checks
///   sum_w prod_base (1 - t y^{w alpha}) * prod_{complement}(1 - y^beta)
///     == closed_form * prod_{all beta}(1 - y^beta).
inline bool exact_poincare_identity(
    int n, int k, const std::vector<std::vector<int>>& base_alphas,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& group,
    const vpoly& closed_form) {
    const vpoly t = vpoly::t_power(k);
    // all factor images across the group
    std::set<std::vector<int>> all;
    for (const auto& [perm, signs] : group)
        for (const auto& alpha : base_alphas) all.insert(act_exponent(perm, signs, alpha));

    laurent_p lhs(n);
    for (const auto& [perm, signs] : group) {
        std::vector<std::vector<int>> own;
        for (const auto& alpha : base_alphas) own.push_back(act_exponent(perm, signs, alpha));
        laurent_p term = laurent_p::one(n);
        for (const auto& alpha : own) term = term.times_binomial(t, alpha);
        for (const auto& beta : all)
            if (std::find(own.begin(), own.end(), beta) == own.end())
                term = term.times_binomial(vpoly::one(), beta);
        lhs += term;
    }
    laurent_p rhs = laurent_p::constant(n, closed_form);
    for (const auto& beta : all) rhs = rhs.times_binomial(vpoly::one(), beta);
    return lhs == rhs;
}

}  // namespace qmac::detail

/// The two Poincare-series identities (Macdonald's closed form for
/// sum_w w{prod_{alpha > 0} (1 - t e^alpha)/(1 - e^alpha)}), checked
/// numerically at random points for n <= 4 and, for n <= 2, also by exact
/// symbolic algebra with cleared denominators. One report per identity,
/// hyperoctahedral first.
///
/// hyperoctahedral, over the full C_n positive system
///   {e_i - e_j, e_i + e_j (i<j), 2 e_i}:
///   sum_{w in W(C_n)} w{ prod_{i<j} (1-t y_i y_j)(1-t y_i/y_j) /
///     [(1-y_i y_j)(1-y_i/y_j)] prod_i (1-t y_i^2)/(1-y_i^2) }
///   = prod_{i=1}^n (1-t^{2i}) / (1-t)^n.
/// symmetric-group, over {e_i - e_j (i<j)}:
///   sum_{w in W(A_{n-1})} w{ prod_{i<j} (1-t y_i/y_j)/(1-y_i/y_j) }
///   = prod_{i=1}^n (1-t^i) / (1-t)^n.
///
/// Dividing the first by the second and grouping W(C_n) into sign-vector
/// cosets of the symmetric group is exactly what produces the sign-term-sum
/// identity, so the three checks are mutually consistent.
inline std::vector<identity_report> check_poincare(int n, int k, int trials = 100,
                                                   std::uint64_t seed = 0, double tol = 1e-10) {
    if (n < 1 || n > 4) throw std::invalid_argument("check_poincare: need 1 <= n <= 4");
    std::vector<identity_report> out;

    const auto wc = signed_permutations(n);
    const auto wa = permutations(n);

    auto hyper = detail::run_point_checks(
        "poincare-hyperoctahedral", n, k, trials, seed, tol,
        [&](double q, const std::vector<complex>& y, point_sampler&) {
            const complex t = pow_int(complex(q, 0.0), k);
            complex lhs(0.0, 0.0);
            for (const auto& [perm, signs] : wc) {
                const auto z = detail::act_point(perm, signs, y);
                complex f(1.0, 0.0);
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        const complex den1 = 1.0 - z[i] * z[j];
                        const complex den2 = 1.0 - z[i] / z[j];
                        if (std::abs(den1) <= 1e-9 || std::abs(den2) <= 1e-9)
                            throw pole_proximity("poincare pair factor");
                        f *= (1.0 - t * z[i] * z[j]) / den1;
                        f *= (1.0 - t * z[i] / z[j]) / den2;
                    }
                    const complex den = 1.0 - z[i] * z[i];
                    if (std::abs(den) <= 1e-9) throw pole_proximity("poincare square factor");
                    f *= (1.0 - t * z[i] * z[i]) / den;
                }
                lhs += f;
            }
            complex rhs(1.0, 0.0);
            for (int i = 1; i <= n; ++i) rhs *= (1.0 - pow_int(t, 2 * i)) / (1.0 - t);
            return std::abs(lhs - rhs);
        });
    if (n <= 2) {
        std::vector<std::vector<int>> base;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> a(n, 0);
                a[i] = 1;
                a[j] = 1;
                base.push_back(a);
                a[j] = -1;
                base.push_back(std::move(a));
            }
        for (int i = 0; i < n; ++i) {
            std::vector<int> a(n, 0);
            a[i] = 2;
            base.push_back(std::move(a));
        }
        vpoly closed = vpoly::one();
        const vpoly t = vpoly::t_power(k);
        for (int i = 1; i <= n; ++i) {
            vpoly geom;
            for (int j = 0; j < 2 * i; ++j) geom += t.pow(j);
            closed *= geom;  // (1 - t^{2i})/(1 - t)
        }
        hyper.exact_checked = true;
        hyper.exact_pass = detail::exact_poincare_identity(n, k, base, wc, closed);
        if (hyper.exact_pass != hyper.pass)
            hyper.note += " [exact and numeric modes disagree]";
    }
    out.push_back(std::move(hyper));

    auto symm = detail::run_point_checks(
        "poincare-symmetric-group", n, k, trials, seed, tol,
        [&](double q, const std::vector<complex>& y, point_sampler&) {
            const complex t = pow_int(complex(q, 0.0), k);
            complex lhs(0.0, 0.0);
            for (const auto& perm : wa) {
                std::vector<complex> z(n);
                for (int i = 0; i < n; ++i) z[perm[i]] = y[i];
                complex f(1.0, 0.0);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        const complex den = 1.0 - z[i] / z[j];
                        if (std::abs(den) <= 1e-9) throw pole_proximity("poincare ratio factor");
                        f *= (1.0 - t * z[i] / z[j]) / den;
                    }
                lhs += f;
            }
            complex rhs(1.0, 0.0);
            for (int i = 1; i <= n; ++i) rhs *= (1.0 - pow_int(t, i)) / (1.0 - t);
            return std::abs(lhs - rhs);
        });
    if (n <= 2) {
        std::vector<std::vector<int>> base;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> a(n, 0);
                a[i] = 1;
                a[j] = -1;
                base.push_back(std::move(a));
            }
        std::vector<std::pair<std::vector<int>, std::vector<int>>> group;
        for (const auto& perm : wa) group.emplace_back(perm, std::vector<int>(n, 1));
        vpoly closed = vpoly::one();
        const vpoly t = vpoly::t_power(k);
        for (int i = 1; i <= n; ++i) {
            vpoly geom;
            for (int j = 0; j < i; ++j) geom += t.pow(j);
            closed *= geom;  // (1 - t^i)/(1 - t)
        }
        symm.exact_checked = true;
        symm.exact_pass = detail::exact_poincare_identity(n, k, base, group, closed);
        if (symm.exact_pass != symm.pass) symm.note += " [exact and numeric modes disagree]";
    }
    out.push_back(std::move(symm));
    return out;
}

/// q-binomial theorem specialized to a = t = q^k: the coefficient list of
/// sum_i gauss(k,i) z^i must match the degree-lambda_max truncation of
/// prod_{m=0}^{k-1} (1 - q^m z)^{-1}, expanded here as an independent formal
/// geometric series. Exact comparison, no tolerance.
inline identity_report check_q_binomial(int k, int lambda_max) {
    if (k < 1 || lambda_max < 0)
        throw std::invalid_argument("check_q_binomial: need k >= 1, lambda_max >= 0");
    identity_report rep;
    rep.identity = "q-binomial-truncation";
    rep.n = 0;
    rep.k = k;
    rep.trials = 0;
    rep.seed = 0;
    rep.exact_checked = true;

    // rhs series: start from 1 and multiply k truncated geometric series
    std::vector<vpoly> rhs(lambda_max + 1);
    rhs[0] = vpoly::one();
    for (int m = 0; m < k; ++m) {
        // series of 1/(1 - q^m z): z^d coefficient q^{m d}
        std::vector<vpoly> next(lambda_max + 1);
        for (int d = 0; d <= lambda_max; ++d)
            for (int e = 0; d + e <= lambda_max; ++e)
                next[d + e] += rhs[d] * vpoly::q_power(m * e);
        rhs = std::move(next);
    }

    bool ok = true;
    std::ostringstream note;
    for (int i = 0; i <= lambda_max; ++i) {
        if (gaussian_binomial(k, i) != rhs[i]) {
            ok = false;
            note << "mismatch at z^" << i << "; ";
        }
    }
    rep.pass = ok;
    rep.exact_pass = ok;
    rep.max_abs_diff = ok ? 0.0 : 1.0;
    rep.note = note.str();
    return rep;
}

}  // namespace qmac
