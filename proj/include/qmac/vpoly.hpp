#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qmac/errors.hpp"
#include "qmac/rational.hpp"

namespace qmac {

using complex = std::complex<double>;

/// Integer power by repeated squaring; e may be negative.
inline complex pow_int(complex z, long e) {
    if (e < 0) return 1.0 / pow_int(z, -e);
    complex acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

/// Exact Laurent polynomial in the ground variable v = q^(1/2) over the
/// rationals. q = v^2 and t = q^k = v^(2k), so every half-integer power of q
/// the operator produces lands on an integer v-exponent. Zero coefficients
/// are never stored; equality is structural.
class vpoly {
  public:
    vpoly() = default;
    vpoly(int c) { set(0, rational(c)); }
    vpoly(const rational& c) { set(0, c); }

    static vpoly monomial(const rational& c, int vexp) {
        vpoly p;
        p.set(vexp, c);
        return p;
    }
    static vpoly v_power(int e) { return monomial(1, e); }
    static vpoly q_power(int e) { return monomial(1, 2 * e); }
    // t = q^k
    static vpoly t_power(int k, int e = 1) { return monomial(1, 2 * k * e); }
    static vpoly one() { return vpoly(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    bool is_monomial() const { return c_.size() == 1; }
    std::size_t term_count() const { return c_.size(); }

    // Exponent range; only meaningful on nonzero values.
    int min_exp() const { return c_.begin()->first; }
    int max_exp() const { return c_.rbegin()->first; }

    rational coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? rational(0) : it->second;
    }

    const std::map<int, rational>& terms() const { return c_; }

    vpoly& operator+=(const vpoly& o) {
        for (const auto& [e, c] : o.c_) add(e, c);
        return *this;
    }
    vpoly& operator-=(const vpoly& o) {
        for (const auto& [e, c] : o.c_) add(e, -c);
        return *this;
    }
    friend vpoly operator+(vpoly a, const vpoly& b) { return a += b; }
    friend vpoly operator-(vpoly a, const vpoly& b) { return a -= b; }
    vpoly operator-() const {
        vpoly r;
        for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
        return r;
    }

    friend vpoly operator*(const vpoly& a, const vpoly& b) {
        vpoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add(ea + eb, ca * cb);
        return r;
    }
    vpoly& operator*=(const vpoly& o) { return *this = *this * o; }

    vpoly scaled(const rational& s) const {
        vpoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : c_) r.c_.emplace(e, c * s);
        return r;
    }
    /// Multiply by v^e.
    vpoly shifted(int e) const {
        vpoly r;
        for (const auto& [ex, c] : c_) r.c_.emplace(ex + e, c);
        return r;
    }

    vpoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("vpoly::pow: negative exponent");
        vpoly acc = one(), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    bool operator==(const vpoly& o) const { return c_ == o.c_; }
    bool operator!=(const vpoly& o) const { return !(*this == o); }
    // Arbitrary total order so vpoly can key ordered containers.
    bool operator<(const vpoly& o) const { return c_ < o.c_; }

    /// Exact quotient in the Laurent ring; throws not_divisible when the
    /// remainder is nonzero.
    vpoly divide_exact(const vpoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("vpoly::divide_exact: zero divisor");
        if (is_zero()) return vpoly();
        // Shift both to ordinary polynomials and long-divide over Q.
        const int shift = min_exp() - d.min_exp();
        vpoly rem = shifted(-min_exp());
        const vpoly den = d.shifted(-d.min_exp());
        const int dd = den.max_exp();
        const rational dlead = den.coeff(dd);
        vpoly quot;
        while (!rem.is_zero() && rem.max_exp() >= dd) {
            const int e = rem.max_exp() - dd;
            const rational c = rem.coeff(rem.max_exp()) / dlead;
            quot.add(e, c);
            for (const auto& [de, dc] : den.c_) rem.add(de + e, -dc * c);
        }
        if (!rem.is_zero())
            throw not_divisible("vpoly::divide_exact: remainder " + rem.str() + " dividing by " + d.str());
        return quot.shifted(shift);
    }

    /// Monic gcd of the polynomial parts (valuation-0, leading coefficient 1).
    /// Units v^e are ignored, as they are invertible in the Laurent ring.
    static vpoly gcd(const vpoly& a, const vpoly& b) {
        if (a.is_zero()) return b.is_zero() ? vpoly() : b.normalized_poly();
        if (b.is_zero()) return a.normalized_poly();
        vpoly r0 = a.normalized_poly(), r1 = b.normalized_poly();
        while (!r1.is_zero()) {
            vpoly r2 = poly_mod(r0, r1);
            r0 = std::move(r1);
            r1 = r2.is_zero() ? r2 : r2.normalized_poly();
        }
        return r0;
    }

    /// Substitute a complex value for v.
    complex eval_v(complex v) const {
        complex acc(0.0, 0.0);
        for (const auto& [e, c] : c_) acc += to_double(c) * pow_int(v, e);
        return acc;
    }
    /// Substitute v = sqrt(q), principal branch (positive root for real q > 0).
    complex eval_q(complex q) const { return eval_v(std::sqrt(q)); }

    rational sum_of_coeffs() const {
        rational s(0);
        for (const auto& [e, c] : c_) s += c;
        return s;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : c_) {
            rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (e == 0) {
                os << a.get_str();
            } else {
                if (a != 1) os << a.get_str() << "*";
                os << "v^" << e;
            }
        }
        return os.str();
    }

  private:
    std::map<int, rational> c_;

    void set(int e, const rational& c) {
        if (c != 0) c_[e] = c;
    }
    void add(int e, const rational& c) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (c != 0) c_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    vpoly normalized_poly() const {
        vpoly p = shifted(-min_exp());
        const rational lead = p.coeff(p.max_exp());
        return p.scaled(1 / lead);
    }
    static vpoly poly_mod(const vpoly& a, const vpoly& b) {
        vpoly rem = a;
        const int dd = b.max_exp();
        const rational dlead = b.coeff(dd);
        while (!rem.is_zero() && rem.max_exp() >= dd) {
            const int e = rem.max_exp() - dd;
            const rational c = rem.coeff(rem.max_exp()) / dlead;
            for (const auto& [de, dc] : b.c_) rem.add(de + e, -dc * c);
        }
        return rem;
    }
};

}  // namespace qmac
