#pragma once

#include <complex>

#include "qmac/errors.hpp"
#include "qmac/vpoly.hpp"

namespace qmac {

inline vpoly one_like(const vpoly&) { return vpoly::one(); }
inline complex one_like(const complex&) { return complex(1.0, 0.0); }

/// Finite q-Pochhammer symbol (a;q)_m = prod_{i=0}^{m-1} (1 - a q^i) in any
/// commutative ring: the ring must supply one_like(a), a*b and a-b.
template <class Ring>
Ring q_pochhammer(const Ring& a, const Ring& q, int m) {
    if (m < 0) throw std::invalid_argument("q_pochhammer: negative length");
    Ring acc = one_like(a);
    Ring aq = a;
    for (int i = 0; i < m; ++i) {
        acc = acc * (one_like(a) - aq);
        aq = aq * q;
    }
    return acc;
}

/// (a;q)_m in the coefficient ring, with the canonical q = v^2.
inline vpoly q_pochhammer(const vpoly& a, int m) {
    return q_pochhammer(a, vpoly::q_power(1), m);
}

/// The Gaussian binomial (q^k;q)_i / (q;q)_i, a polynomial in q of degree
/// i(k-1). The division is exact by construction; a remainder would mean an
/// arithmetic bug, reported as internal_error.
inline vpoly gaussian_binomial(int k, int i) {
    if (k < 1 || i < 0) throw std::invalid_argument("gaussian_binomial: need k >= 1, i >= 0");
    const vpoly num = q_pochhammer(vpoly::t_power(k), i);
    const vpoly den = q_pochhammer(vpoly::q_power(1), i);
    try {
        return num.divide_exact(den);
    } catch (const not_divisible& e) {
        throw internal_error(std::string("gaussian_binomial: inexact division: ") + e.what());
    }
}

}  // namespace qmac
