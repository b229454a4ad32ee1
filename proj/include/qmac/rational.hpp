#pragma once

#include <gmpxx.h>

#include <string>

namespace qmac {

// Arbitrary-precision rational scalar. GMP keeps values canonical
// (reduced, denominator positive) through arithmetic.
using rational = mpq_class;

inline rational rational_from_string(const std::string& s) {
    rational r(s);
    r.canonicalize();
    return r;
}

// mpq_class(num, den) does not canonicalize on its own; always go through
// here when building a rational from a numerator/denominator pair.
inline rational make_rational(long num, long den) {
    rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "p/q" (or just "p" when the denominator is 1).
inline std::string to_string(const rational& r) { return r.get_str(); }

inline double to_double(const rational& r) { return r.get_d(); }

}  // namespace qmac
