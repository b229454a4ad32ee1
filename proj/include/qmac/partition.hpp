#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmac {

/// Weakly decreasing sequence of non-negative integers. Stored with trailing
/// zeros trimmed, so (2,0) and (2) are the same partition.
class partition {
  public:
    partition() = default;
    partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}
    explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    /// Partition from an arbitrary exponent vector: sorted absolute values.
    /// This is the unique dominant representative of a signed-permutation orbit.
    static partition orbit_representative(const std::vector<int>& exp) {
        std::vector<int> a(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i) a[i] = std::abs(exp[i]);
        std::sort(a.rbegin(), a.rend());
        return partition(std::move(a));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool is_zero() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    std::vector<int> padded(int n) const {
        if (length() > n) throw std::invalid_argument("partition: more parts than variables");
        std::vector<int> p(parts_);
        p.resize(n, 0);
        return p;
    }

    bool operator==(const partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const partition& o) const { return !(*this == o); }
    // Container ordering only; dominance is a separate, partial order.
    bool operator<(const partition& o) const { return parts_ < o.parts_; }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        return os.str();
    }

  private:
    std::vector<int> parts_;
};

/// Dominance order for the C_n root lattice: nu <= mu iff mu - nu is a
/// non-negative integer combination of the simple roots e_i - e_{i+1}
/// (i < n) and 2 e_n. Writing d = mu - nu and solving for the coefficients
/// gives c_i = sum_{j<=i} d_j for i < n and c_n = (sum_j d_j)/2, so the test
/// is: every proper partial sum of d non-negative, total non-negative and even.
inline bool dominance_leq(const partition& nu, const partition& mu, int n) {
    const auto a = nu.padded(n), b = mu.padded(n);
    int partial = 0;
    for (int i = 0; i + 1 < n; ++i) {
        partial += b[i] - a[i];
        if (partial < 0) return false;
    }
    const int total = partial + (b[n - 1] - a[n - 1]);
    return total >= 0 && total % 2 == 0;
}

namespace detail {
inline void enumerate_partitions(int max_part, int max_len, int max_weight,
                                 std::vector<int>& stack, std::vector<partition>& out) {
    out.emplace_back(stack);
    if (static_cast<int>(stack.size()) >= max_len) return;
    const int cap = stack.empty() ? max_part : std::min(max_part, stack.back());
    for (int p = 1; p <= std::min(cap, max_weight); ++p) {
        stack.push_back(p);
        enumerate_partitions(max_part, max_len, max_weight - p, stack, out);
        stack.pop_back();
    }
}
}  // namespace detail

/// All partitions with at most max_len parts, each part <= max_part, and
/// weight <= max_weight.
inline std::vector<partition> all_partitions(int max_part, int max_len, int max_weight) {
    std::vector<int> stack;
    std::vector<partition> out;
    detail::enumerate_partitions(max_part, max_len, max_weight, stack, out);
    return out;
}

/// Partitions nu with nu < mu strictly in C_n dominance, at most n parts.
/// Deterministic order: weight descending, then lexicographically descending.
/// That order is a linear extension of reverse dominance, which is what the
/// triangular eigen-solve consumes.
inline std::vector<partition> lower_partitions(const partition& mu, int n) {
    std::vector<partition> out;
    for (const auto& nu : all_partitions(mu.part(0), n, mu.weight())) {
        if (nu != mu && dominance_leq(nu, mu, n)) out.push_back(nu);
    }
    std::sort(out.begin(), out.end(), [](const partition& a, const partition& b) {
        if (a.weight() != b.weight()) return a.weight() > b.weight();
        return b < a;
    });
    return out;
}

}  // namespace qmac
