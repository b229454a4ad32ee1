#pragma once

#include <algorithm>
#include <vector>

#include "qmac/laurent.hpp"
#include "qmac/partition.hpp"

namespace qmac {

/// Monomial symmetric function m_mu for the hyperoctahedral group: the sum
/// of y^nu over the signed-permutation orbit of mu, each orbit point once.
/// Distinct permutations of the padded parts, crossed with independent sign
/// choices on the nonzero entries, enumerate the orbit without repeats.
template <class C = vpoly>
laurent<C> monomial_symmetric(const partition& mu, int n) {
    auto base = mu.padded(n);
    std::sort(base.begin(), base.end());
    laurent<C> out(n);
    std::vector<int> nz;
    do {
        nz.clear();
        for (int i = 0; i < n; ++i)
            if (base[i] != 0) nz.push_back(i);
        const int r = static_cast<int>(nz.size());
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            std::vector<int> e = base;
            for (int b = 0; b < r; ++b)
                if (mask & (1u << b)) e[nz[b]] = -e[nz[b]];
            out.add_term(std::move(e), C(1));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

/// Invariance under the generators s_i (adjacent swaps) and the last-variable
/// inversion, which generate the full signed-permutation group.
template <class C>
bool is_hyperoctahedral_invariant(const laurent<C>& f) {
    const int n = f.nvars();
    for (int i = 0; i + 1 < n; ++i)
        if (f.swap_variables(i, i + 1) != f) return false;
    return f.invert_variable(n - 1) == f;
}

/// All n! * 2^n signed permutations as (perm, signs) pairs, fixed order.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> signed_permutations(int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> signs(n, 1);
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) signs[b] = -1;
            out.emplace_back(perm, signs);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace qmac
