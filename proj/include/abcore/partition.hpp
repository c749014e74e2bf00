#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace abcore {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is a valid value (size 0).
class partition {
public:
    partition() = default;

    explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    long long size() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    partition conjugate() const {
        std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
        for (int part : parts_)
            for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
        partition p;
        p.parts_ = std::move(out);
        return p;
    }

    friend bool operator==(const partition&, const partition&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

/// Canonical order: ascending size, then lexicographically descending parts.
inline bool canonical_less(const partition& x, const partition& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(y.parts().begin(), y.parts().end(), x.parts().begin(),
                                        x.parts().end());
}

/// Ragged row-major matrix; row i has one entry per cell of row i.
using hook_matrix = std::vector<std::vector<int>>;

inline hook_matrix hook_lengths(const partition& lambda) {
    const auto& rows = lambda.parts();
    const partition conj = lambda.conjugate();
    hook_matrix h(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        h[i].resize(static_cast<std::size_t>(rows[i]));
        for (int j = 0; j < rows[i]; ++j) {
            const int arm = rows[i] - j - 1;
            const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            h[i][static_cast<std::size_t>(j)] = arm + leg + 1;
        }
    }
    return h;
}

inline bool is_core(const partition& lambda, std::span<const int> forbidden) {
    const auto& rows = lambda.parts();
    const partition conj = lambda.conjugate();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) {
            const int h = rows[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            if (std::find(forbidden.begin(), forbidden.end(), h) != forbidden.end()) return false;
        }
    return true;
}

inline bool is_core(const partition& lambda, std::initializer_list<int> forbidden) {
    return is_core(lambda, std::span<const int>(forbidden.begin(), forbidden.size()));
}

namespace detail {

template <class Visit>
void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, Visit& visit) {
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of n, lexicographically descending.
inline std::vector<partition> partitions_of(int n) {
    std::vector<partition> out;
    if (n < 0) return out;
    std::vector<int> prefix;
    auto visit = [&](const std::vector<int>& parts) { out.emplace_back(parts); };
    detail::partitions_rec(n, n, prefix, visit);
    return out;
}

/// Exhaustive search: every core of size <= max_size, in canonical order.
inline std::vector<partition> enumerate_cores_bounded(std::span<const int> forbidden,
                                                      int max_size) {
    std::vector<partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (auto& p : partitions_of(n))
            if (is_core(p, forbidden)) out.push_back(std::move(p));
    return out;
}

inline std::vector<partition> enumerate_cores_bounded(std::initializer_list<int> forbidden,
                                                      int max_size) {
    return enumerate_cores_bounded(std::span<const int>(forbidden.begin(), forbidden.size()),
                                   max_size);
}

}  // namespace abcore
