#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "qmac/errors.hpp"
#include "qmac/onerow.hpp"

namespace qmac {

/// Specification of the restricted q-Jordan-Pochhammer 1-form
///
///   x^lambda prod_j [ (y_j/x;q)_k (y_j^{-1}/x;q)_k ]^{-1} dx/x,
///
/// with its pole set {y_j q^m, y_j^{-1} q^m : 0 <= m < k} cached.
struct qjp_spec {
    int lambda;
    int n;
    int k;
    double q;
    std::vector<complex> y;
    std::vector<complex> poles;

    qjp_spec(int lambda_, int n_, int k_, double q_, std::vector<complex> y_)
        : lambda(lambda_), n(n_), k(k_), q(q_), y(std::move(y_)) {
        if (lambda < 0 || n < 1 || k < 1)
            throw std::invalid_argument("qjp_spec: need lambda >= 0, n >= 1, k >= 1");
        if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("qjp_spec: need 0 < q < 1");
        if (static_cast<int>(y.size()) != n) throw std::invalid_argument("qjp_spec: y size != n");
        for (const auto& yi : y)
            if (yi == complex(0.0, 0.0)) throw std::invalid_argument("qjp_spec: zero y value");
        double qm = 1.0;
        for (int m = 0; m < k; ++m) {
            for (const auto& yi : y) {
                poles.push_back(yi * qm);
                poles.push_back(qm / yi);
            }
            qm *= q;
        }
    }

    double max_pole_modulus() const {
        double r = 0.0;
        for (const auto& p : poles) r = std::max(r, std::abs(p));
        return r;
    }
    /// Smallest circle |x| = r with every pole strictly inside, 10% margin.
    double default_radius() const { return 1.1 * max_pole_modulus(); }
};

/// Integrand value x^(lambda-1) prod_j [ (y_j/x;q)_k (y_j^{-1}/x;q)_k ]^{-1};
/// refuses evaluation within 1e-9 of a pole.
inline complex qjp_integrand(const qjp_spec& spec, complex x) {
    for (const auto& p : spec.poles)
        if (std::abs(x - p) <= 1e-9) throw pole_proximity("qjp_integrand: x within 1e-9 of a pole");
    complex den(1.0, 0.0);
    for (const auto& yj : spec.y)
        den *= detail::poch_guarded(yj / x, spec.q, spec.k) *
               detail::poch_guarded(1.0 / (yj * x), spec.q, spec.k);
    return pow_int(x, spec.lambda - 1) / den;
}

/// Convergence trace of the adaptive quadrature: successive relative
/// differences, one per node-count doubling.
struct quad_stats {
    std::vector<double> diffs;
    int nodes_used = 0;
    double radius = 0.0;
};

namespace detail {

// Deterministic pairwise reduction; fixed association for a fixed length.
inline complex pairwise_sum(std::vector<complex>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return v[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

template <class F>
complex trapezoid_on_circle(F&& f, double radius, int nodes) {
    std::vector<complex> vals(nodes);
    const double step = 2.0 * std::numbers::pi / nodes;
    for (int j = 0; j < nodes; ++j) {
        const complex x = std::polar(radius, step * j);
        vals[j] = f(x) * x;
    }
    return pairwise_sum(vals, 0, vals.size()) / static_cast<double>(nodes);
}

}  // namespace detail

/// (1/2*pi*i) ∮ f(x) dx over |x| = radius by the trapezoid rule, doubling the
/// node count until two successive values agree to 1e-10 relative or the cap
/// 2^16 is hit (then no_convergence, carrying the last two differences).
/// Spectrally accurate for integrands analytic near the circle.
template <class F>
complex circle_integral(F&& f, double radius, int nodes = 64, quad_stats* stats = nullptr) {
    if (radius <= 0.0) throw std::invalid_argument("circle_integral: radius must be positive");
    if (nodes < 2) throw std::invalid_argument("circle_integral: need at least 2 nodes");
    constexpr int cap = 1 << 16;
    constexpr double tol = 1e-10;
    if (stats) stats->radius = radius;
    complex prev = detail::trapezoid_on_circle(f, radius, nodes);
    double prev_diff = -1.0;
    for (int m = 2 * nodes; m <= cap; m *= 2) {
        const complex cur = detail::trapezoid_on_circle(f, radius, m);
        const double diff = std::abs(cur - prev) / std::max(1.0, std::abs(cur));
        if (stats) {
            stats->diffs.push_back(diff);
            stats->nodes_used = m;
        }
        if (diff < tol) return cur;
        prev = cur;
        prev_diff = diff;
    }
    throw no_convergence("circle_integral: node cap reached", stats ? stats->diffs.back() : -1.0,
                         prev_diff);
}

/// Full-cycle integral of the 1-form.
inline complex contour_integral(const qjp_spec& spec, double radius, int nodes = 64,
                                quad_stats* stats = nullptr) {
    return circle_integral([&](complex x) { return qjp_integrand(spec, x); }, radius, nodes,
                           stats);
}
inline complex contour_integral(const qjp_spec& spec) {
    return contour_integral(spec, spec.default_radius());
}

/// Pointwise application of the q-difference operator to a numeric function
/// of y: sum over sign vectors of the coefficient at y times F at the
/// half-step-shifted y (positive real square root of q).
inline complex numeric_apply_operator(const std::function<complex(const std::vector<complex>&)>& F,
                                      int n, int k, double q,
                                      const std::vector<complex>& y, double guard = 1e-9) {
    if (static_cast<int>(y.size()) != n)
        throw std::invalid_argument("numeric_apply_operator: y size != n");
    const double sq = std::sqrt(q);
    const complex t = pow_int(complex(q, 0.0), k);
    complex total(0.0, 0.0);
    for (const auto& a : detail::sign_vectors(n)) {
        complex coeff(1.0, 0.0);
        std::vector<complex> ya(n);
        for (int i = 0; i < n; ++i) ya[i] = pow_int(y[i], a[i]);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const complex den = 1.0 - ya[i] * ya[j];
                if (std::abs(den) <= guard)
                    throw pole_proximity("numeric_apply_operator: pair denominator near zero");
                coeff *= (1.0 - t * ya[i] * ya[j]) / den;
            }
        for (int i = 0; i < n; ++i) {
            const complex den = 1.0 - ya[i] * ya[i];
            if (std::abs(den) <= guard)
                throw pole_proximity("numeric_apply_operator: square denominator near zero");
            coeff *= (1.0 - t * ya[i] * ya[i]) / den;
        }
        std::vector<complex> shifted(n);
        for (int i = 0; i < n; ++i) shifted[i] = y[i] * (a[i] == 1 ? sq : 1.0 / sq);
        total += coeff * F(shifted);
    }
    return total;
}

/// Report of the change-of-variable identity check
///   ∮ Phi = q^(-lambda) ∮ prod_i [(1-y_i/x)(1-y_i^{-1}/x)] /
///                               [(1-t y_i/x)(1-t y_i^{-1}/x)] Phi.
struct shift_identity_report {
    complex lhs;
    complex rhs;
    double rel_diff;
    bool pass;
};

inline shift_identity_report verify_shift_identity(const qjp_spec& spec, double radius,
                                                   int nodes = 64, double tol = 1e-8) {
    const complex t = pow_int(complex(spec.q, 0.0), spec.k);
    const complex lhs = contour_integral(spec, radius, nodes);
    auto deformed = [&](complex x) {
        complex extra(1.0, 0.0);
        for (const auto& yi : spec.y) {
            const complex d1 = 1.0 - t * yi / x;
            const complex d2 = 1.0 - t / (yi * x);
            if (std::abs(d1) <= 1e-9 || std::abs(d2) <= 1e-9)
                throw pole_proximity("verify_shift_identity: shifted factor near zero");
            extra *= (1.0 - yi / x) * (1.0 - 1.0 / (yi * x)) / (d1 * d2);
        }
        return extra * qjp_integrand(spec, x);
    };
    const complex rhs =
        std::pow(complex(spec.q, 0.0), -spec.lambda) * circle_integral(deformed, radius, nodes);
    const double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    return {lhs, rhs, rel, rel < tol};
}

}  // namespace qmac
