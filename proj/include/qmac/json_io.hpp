#pragma once

#include <json.hpp>

#include "qmac/identities.hpp"
#include "qmac/laurent.hpp"
#include "qmac/partition.hpp"

namespace qmac {

using json = nlohmann::ordered_json;

/// Coefficient-ring element as an ordered [v_exponent, "p/q"] list,
/// ascending exponent. This layout is the wire format; keep it bit-stable.
inline json to_json(const vpoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(json::array({e, c.get_str()}));
    return arr;
}

inline json to_json(const partition& mu) {
    json arr = json::array();
    for (int part : mu.parts()) arr.push_back(part);
    return arr;
}

namespace detail {

inline void put_coeff(json& term, const vpoly& c) { term["coeff"] = to_json(c); }
inline void put_coeff(json& term, const vfrac& c) {
    term["coeff"] = to_json(c.num());
    if (!c.is_polynomial()) term["coeff_den"] = to_json(c.den());
}

}  // namespace detail

/// Term list {"y_exp": [...], "coeff": [[v_exp, "p/q"], ...]} in descending
/// lexicographic order of y_exp. Fraction coefficients add a "coeff_den"
/// field holding the reduced denominator.
template <class C>
json to_json(const laurent<C>& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["y_exp"] = e;
        detail::put_coeff(term, c);
        arr.push_back(std::move(term));
    }
    return arr;
}

inline json to_json(const identity_report& rep) {
    json j;
    j["identity"] = rep.identity;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["max_abs_diff"] = rep.max_abs_diff;
    j["pass"] = rep.pass;
    j["exact_checked"] = rep.exact_checked;
    j["exact_pass"] = rep.exact_pass;
    j["note"] = rep.note;
    return j;
}

/// Human-readable term list: one `(coeff) * y1^a1 ... yn^an` per line,
/// descending lex, coefficients in v = q^(1/2) notation.
template <class C>
std::string to_pretty(const laurent<C>& p) {
    std::ostringstream os;
    for (const auto& [e, c] : p.terms()) {
        os << "(" << c.str() << ")";
        for (int i = 0; i < p.nvars(); ++i) os << " * y" << i + 1 << "^" << e[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace qmac
