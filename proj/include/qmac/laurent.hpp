#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qmac/errors.hpp"
#include "qmac/vfrac.hpp"
#include "qmac/vpoly.hpp"

namespace qmac {

/// Finitely supported Laurent polynomial in y_1..y_n with coefficients in C
/// (vpoly for the exact operator pipeline, vfrac once eigen-solve divisions
/// enter). Terms are kept in descending lexicographic order of the exponent
/// vector, which is also the serialization order.
template <class C>
class laurent {
  public:
    using exponents = std::vector<int>;
    using term_map = std::map<exponents, C, std::greater<exponents>>;

    explicit laurent(int nvars) : n_(nvars) {
        if (nvars < 1) throw std::invalid_argument("laurent: need at least one variable");
    }

    static laurent constant(int nvars, C c) {
        laurent p(nvars);
        p.add_term(exponents(nvars, 0), std::move(c));
        return p;
    }
    static laurent one(int nvars) { return constant(nvars, C(1)); }
    static laurent monomial(int nvars, exponents e, C c) {
        laurent p(nvars);
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("laurent::monomial: exponent length mismatch");
        p.add_term(std::move(e), std::move(c));
        return p;
    }
    /// y_i^power, i zero-based.
    static laurent variable(int nvars, int i, int power = 1) {
        exponents e(nvars, 0);
        e.at(i) = power;
        return monomial(nvars, std::move(e), C(1));
    }

    int nvars() const { return n_; }
    const term_map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    C coeff(const exponents& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? C(0) : it->second;
    }

    void add_term(exponents e, C c) {
        if (static_cast<int>(e.size()) != n_)
            throw std::invalid_argument("laurent::add_term: exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(std::move(e), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    laurent& operator+=(const laurent& o) {
        check_dim(o);
        for (const auto& [e, c] : o.t_) accumulate(e, c);
        return *this;
    }
    laurent& operator-=(const laurent& o) {
        check_dim(o);
        for (const auto& [e, c] : o.t_) accumulate(e, -c);
        return *this;
    }
    friend laurent operator+(laurent a, const laurent& b) { return a += b; }
    friend laurent operator-(laurent a, const laurent& b) { return a -= b; }
    laurent operator-() const {
        laurent r(n_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }

    friend laurent operator*(const laurent& a, const laurent& b) {
        a.check_dim(b);
        laurent r(a.n_);
        exponents e(a.n_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.accumulate(e, ca * cb);
            }
        return r;
    }
    laurent& operator*=(const laurent& o) { return *this = *this * o; }

    laurent scaled(const C& s) const {
        laurent r(n_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : t_) {
            C sc = c * s;
            if (!sc.is_zero()) r.t_.emplace(e, std::move(sc));
        }
        return r;
    }

    /// p * (1 - c y^alpha), one subtraction and one shifted merge.
    laurent times_binomial(const vpoly& c, const exponents& alpha) const {
        laurent r = *this;
        exponents e(n_);
        for (const auto& [ea, ca] : t_) {
            for (int i = 0; i < n_; ++i) e[i] = ea[i] + alpha[i];
            r.accumulate(e, -(ca * c));
        }
        return r;
    }

    /// y_i -> q^(sign/2) y_i: a term with y_i-exponent e picks up v^(sign*e).
    laurent half_shift(int i, int sign) const {
        check_var(i);
        laurent r(n_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, c * vpoly::v_power(sign * e[i]));
        r.strip_zeros();
        return r;
    }

    /// y_i -> y_i^(-1).
    laurent invert_variable(int i) const {
        check_var(i);
        laurent r(n_);
        for (const auto& [e, c] : t_) {
            exponents f = e;
            f[i] = -f[i];
            r.t_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Signed permutation w: y_i -> y_{perm[i]}^{signs[i]}; exponent vectors
    /// map by e'[perm[i]] = signs[i] * e[i].
    laurent signed_permute(const std::vector<int>& perm, const std::vector<int>& signs) const {
        laurent r(n_);
        exponents f(n_);
        for (const auto& [e, c] : t_) {
            for (int i = 0; i < n_; ++i) f[perm[i]] = signs[i] * e[i];
            r.t_.emplace(f, c);
        }
        return r;
    }

    laurent swap_variables(int i, int j) const {
        std::vector<int> perm(n_), signs(n_, 1);
        for (int v = 0; v < n_; ++v) perm[v] = v;
        std::swap(perm[i], perm[j]);
        return signed_permute(perm, signs);
    }

    bool operator==(const laurent& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const laurent& o) const { return !(*this == o); }

    /// Substitute v = sqrt(q_val) and the given nonzero y values.
    complex eval(complex q_val, const std::vector<complex>& y) const {
        if (static_cast<int>(y.size()) != n_)
            throw std::invalid_argument("laurent::eval: wrong number of values");
        for (const auto& yi : y)
            if (yi == complex(0.0, 0.0)) throw std::invalid_argument("laurent::eval: zero y value");
        const complex v = std::sqrt(q_val);
        complex acc(0.0, 0.0);
        for (const auto& [e, c] : t_) {
            complex m = c.eval_v(v);
            for (int i = 0; i < n_; ++i) m *= pow_int(y[i], e[i]);
            acc += m;
        }
        return acc;
    }

    std::string str(const std::string& var = "y") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (int i = 0; i < n_; ++i)
                if (e[i] != 0) os << "*" << var << i + 1 << "^" << e[i];
        }
        return os.str();
    }

  private:
    int n_;
    term_map t_;

    void check_dim(const laurent& o) const {
        if (n_ != o.n_) throw std::invalid_argument("laurent: variable count mismatch");
    }
    void check_var(int i) const {
        if (i < 0 || i >= n_) throw std::invalid_argument("laurent: variable index out of range");
    }
    void accumulate(const exponents& e, C c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    void strip_zeros() {
        for (auto it = t_.begin(); it != t_.end();)
            it = it->second.is_zero() ? t_.erase(it) : std::next(it);
    }
};

using laurent_p = laurent<vpoly>;
using laurent_f = laurent<vfrac>;

/// One factor (1 - c y^alpha) of a factored denominator; c is a vpoly
/// monomial (typically 1 or a power of t).
struct binomial_factor {
    vpoly c;
    std::vector<int> alpha;

    std::string str() const {
        std::ostringstream os;
        os << "1 - (" << c.str() << ")";
        for (std::size_t i = 0; i < alpha.size(); ++i)
            if (alpha[i] != 0) os << "*y" << i + 1 << "^" << alpha[i];
        return os.str();
    }
};

/// Multiset of binomial factors; the denominators of the operator terms and
/// of the partial-fraction identities all take this shape.
struct factored_denominator {
    std::vector<binomial_factor> factors;

    template <class C>
    laurent<C> expanded(int nvars) const {
        laurent<C> p = laurent<C>::one(nvars);
        for (const auto& f : factors) p = p.times_binomial(f.c, f.alpha);
        return p;
    }
};

namespace detail {

inline long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

inline std::string exp_str(const std::vector<int>& e) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

inline vpoly divide_coeff(const vpoly& c, const vpoly& d) { return c.divide_exact(d); }
inline vfrac divide_coeff(const vfrac& c, const vpoly& d) { return c / vfrac(d); }

// Total order in which multiplying by y^alpha strictly increases the key:
// first alpha-weight, then lexicographic.
struct alpha_order {
    const std::vector<int>* alpha;
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        const long long wa = dot(a, *alpha), wb = dot(b, *alpha);
        if (wa != wb) return wa < wb;
        return a < b;
    }
};

/// Synthetic division of p by a single factor (1 - c y^alpha). Writing
/// p = r (1 - c y^alpha), the alpha-minimal term of the remainder is always
/// the alpha-minimal unconsumed term of r, so the quotient emerges in
/// ascending alpha-order one term per step. Exactness bound: every quotient
/// term satisfies weight(e) <= max weight of p minus |alpha|^2; a minimal
/// term beyond that bound proves a nonzero remainder.
template <class C>
laurent<C> divide_binomial(const laurent<C>& p, const binomial_factor& f) {
    const int n = p.nvars();
    bool alpha_zero = true;
    for (int a : f.alpha) alpha_zero &= (a == 0);
    if (alpha_zero) {
        // Constant divisor 1 - c: per-coefficient exact division.
        const vpoly d = vpoly::one() - f.c;
        laurent<C> r(n);
        for (const auto& [e, c] : p.terms()) r.add_term(e, divide_coeff(c, d));
        return r;
    }
    if (p.is_zero()) return laurent<C>(n);

    alpha_order ord{&f.alpha};
    std::map<std::vector<int>, C, alpha_order> work(ord);
    long long max_weight = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        work.emplace(e, c);
        const long long w = dot(e, f.alpha);
        max_weight = first ? w : std::max(max_weight, w);
        first = false;
    }
    const long long bound = max_weight - dot(f.alpha, f.alpha);

    laurent<C> quot(n);
    std::vector<int> shifted(n);
    while (!work.empty()) {
        auto it = work.begin();
        const std::vector<int> e = it->first;
        const C c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        if (dot(e, f.alpha) > bound)
            throw not_divisible("exact_divide: remainder at y^" + exp_str(e) +
                                " dividing by " + f.str());
        quot.add_term(e, c);
        for (int i = 0; i < n; ++i) shifted[i] = e[i] + f.alpha[i];
        auto [jt, inserted] = work.try_emplace(shifted, c * f.c);
        if (!inserted) {
            jt->second += c * f.c;
            if (jt->second.is_zero()) work.erase(jt);
        }
    }
    return quot;
}

}  // namespace detail

/// Exact quotient p / prod(factors); throws not_divisible naming the
/// offending factor if any step leaves a remainder. This is the detector for
/// applying the operator to non-invariant input.
template <class C>
laurent<C> exact_divide(laurent<C> p, const factored_denominator& d) {
    for (const auto& f : d.factors) p = detail::divide_binomial(p, f);
    return p;
}

/// Per-coefficient exact division by a v-constant.
inline laurent_p divide_coeffs_exact(const laurent_p& p, const vpoly& d) {
    laurent_p r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.divide_exact(d));
    return r;
}

/// Promote polynomial coefficients to fractions.
inline laurent_f to_fractions(const laurent_p& p) {
    laurent_f r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, vfrac(c));
    return r;
}

/// Clear denominators: returns (N, d) with p = N / d and N over vpoly.
inline std::pair<laurent_p, vpoly> clear_denominators(const laurent_f& p) {
    vpoly d = vpoly::one();
    for (const auto& [e, c] : p.terms()) d = lcm_poly(d, c.den());
    laurent_p num(p.nvars());
    for (const auto& [e, c] : p.terms()) num.add_term(e, (c * d).poly());
    return {std::move(num), std::move(d)};
}

/// Divide every coefficient by a v-constant, producing reduced fractions.
inline laurent_f divide_coeffs(const laurent_p& p, const vpoly& d) {
    laurent_f r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, vfrac(c, d));
    return r;
}

}  // namespace qmac
