#pragma once

#include <string>
#include <utility>

#include "qmac/errors.hpp"
#include "qmac/vpoly.hpp"

namespace qmac {

/// Fraction of two vpoly values. Kept in a reduced canonical form: numerator
/// and denominator coprime, denominator with valuation 0 and leading
/// coefficient 1. Division by the eigenvalue gaps of the triangular solve and
/// the one-row prefactor land here; everything else stays in vpoly.
class vfrac {
  public:
    vfrac() : num_(), den_(1) {}
    vfrac(int c) : num_(c), den_(1) {}
    vfrac(const rational& c) : num_(c), den_(1) {}
    vfrac(vpoly n) : num_(std::move(n)), den_(1) {}
    vfrac(vpoly n, vpoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::invalid_argument("vfrac: zero denominator");
        reduce();
    }

    const vpoly& num() const { return num_; }
    const vpoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// The underlying vpoly; throws when the reduced denominator is nontrivial.
    const vpoly& poly() const {
        if (!is_polynomial())
            throw not_divisible("vfrac::poly: nontrivial denominator " + den_.str());
        return num_;
    }

    vfrac operator-() const {
        vfrac r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend vfrac operator+(const vfrac& a, const vfrac& b) {
        return vfrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend vfrac operator-(const vfrac& a, const vfrac& b) {
        return vfrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend vfrac operator*(const vfrac& a, const vfrac& b) {
        return vfrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend vfrac operator*(const vfrac& a, const vpoly& p) { return vfrac(a.num_ * p, a.den_); }
    friend vfrac operator*(const vpoly& p, const vfrac& a) { return a * p; }
    friend vfrac operator/(const vfrac& a, const vfrac& b) {
        if (b.is_zero()) throw std::invalid_argument("vfrac: division by zero");
        return vfrac(a.num_ * b.den_, a.den_ * b.num_);
    }

    vfrac& operator+=(const vfrac& o) { return *this = *this + o; }
    vfrac& operator-=(const vfrac& o) { return *this = *this - o; }
    vfrac& operator*=(const vfrac& o) { return *this = *this * o; }
    vfrac& operator*=(const vpoly& p) { return *this = *this * p; }
    vfrac& operator/=(const vfrac& o) { return *this = *this / o; }

    // Cross-multiplication; independent of normalization.
    bool operator==(const vfrac& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const vfrac& o) const { return !(*this == o); }
    bool operator<(const vfrac& o) const {
        return num_ != o.num_ ? num_ < o.num_ : den_ < o.den_;
    }

    complex eval_v(complex v) const { return num_.eval_v(v) / den_.eval_v(v); }
    complex eval_q(complex q) const { return eval_v(std::sqrt(q)); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    vpoly num_;
    vpoly den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = vpoly(1);
            return;
        }
        const vpoly g = vpoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
        // Push the denominator's unit v^e and leading coefficient into the
        // numerator so equal fractions are structurally equal.
        const int dv = den_.min_exp();
        num_ = num_.shifted(-dv);
        den_ = den_.shifted(-dv);
        const rational lead = den_.coeff(den_.max_exp());
        if (lead != 1) {
            num_ = num_.scaled(1 / lead);
            den_ = den_.scaled(1 / lead);
        }
    }
};

/// Least common multiple of denominators' polynomial parts.
inline vpoly lcm_poly(const vpoly& a, const vpoly& b) {
    const vpoly g = vpoly::gcd(a, b);
    return a.divide_exact(g) * b;
}

}  // namespace qmac
