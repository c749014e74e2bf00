#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "abcore/anderson.hpp"
#include "abcore/errors.hpp"
#include "abcore/gap_poset.hpp"
#include "abcore/numeric.hpp"
#include "abcore/partition.hpp"

namespace abcore {

inline constexpr std::size_t default_element_limit = 60;

/// Exact sums over all order ideals I of one family poset:
///   A = #ideals, T = sum |I|, R = sum of rho over members,
///   G = sum (sigma(I) - C(|I|, 2)).
struct stat_record {
    family_id id;
    big_int A;
    big_int T;
    big_int R;
    big_int G;
};

inline void check_limit(const gap_poset& poset, std::size_t limit) {
    if (poset.size() > limit) throw enumeration_too_large(poset.size(), limit);
}

inline stat_record compute_stats(const family_id& id,
                                 std::size_t element_limit = default_element_limit) {
    const auto poset = family_poset(id);
    check_limit(poset, element_limit);
    const int width = id.layer_width();
    std::int64_t a = 0, t = 0, r = 0, g = 0;
    for_each_order_ideal(poset, [&](std::span<const int> ideal) {
        std::int64_t sigma = 0, layers = 0;
        for (int p : ideal) {
            sigma += p;
            layers += p / width;
        }
        const auto k = static_cast<std::int64_t>(ideal.size());
        ++a;
        t += k;
        r += layers;
        g += sigma - k * (k - 1) / 2;
    });
    return {id, a, t, r, g};
}

/// binom(a+b, a) / (a+b); the number of (a, b)-cores.
inline big_int anderson_count(int a, int b) {
    require_coprime(a, b);
    const big_int num = binomial(a + b, a);
    const big_int q = num / (a + b);
    if (q * (a + b) != num) throw error("anderson_count: inexact division");
    return q;
}

/// binom((m+1)n+1, n) / ((m+1)n+1) = |J(P_{n, mn+1})|.
inline big_int fuss_catalan(int m, int n) {
    const long long top = static_cast<long long>(m + 1) * n + 1;
    return binomial(top, n) / top;
}

/// Cores obtained from the order ideals of P_{a,b}, in canonical order.
inline std::vector<partition> cores_via_bijection(int a, int b,
                                                  std::size_t element_limit = default_element_limit) {
    const auto poset = gap_poset::of(a, b);
    check_limit(poset, element_limit);
    std::vector<partition> out;
    for_each_order_ideal(poset, [&](std::span<const int> ideal) {
        out.push_back(ideal_to_partition(ideal));
    });
    std::sort(out.begin(), out.end(),
              [](const partition& x, const partition& y) { return canonical_less(x, y); });
    return out;
}

/// Pairs (k, mk+1) with k, m >= 1 (in either order), the family the
/// average-size formula is proved for.
inline bool is_proved_pair(int a, int b) {
    auto fits = [](int k, int bb) { return k >= 1 && bb > 1 && (bb - 1) % k == 0; };
    return fits(a, b) || fits(b, a);
}

struct armstrong_result {
    int a = 0;
    int b = 0;
    big_int count;
    big_int total;
    rational rhs;
    rational average;
    bool matches = false;
};

/// Sums |lambda| over all (a, b)-cores and compares with
/// (a-1)(b-1)(a+b+1) / (24(a+b)) * binom(a+b, a).
inline armstrong_result armstrong_check(int a, int b,
                                        std::size_t element_limit = default_element_limit) {
    require_coprime(a, b);
    const auto poset = gap_poset::of(a, b);
    check_limit(poset, element_limit);
    armstrong_result res;
    res.a = a;
    res.b = b;
    std::int64_t count = 0, total = 0;
    for_each_order_ideal(poset, [&](std::span<const int> ideal) {
        ++count;
        total += size_via_ideal(ideal);
    });
    res.count = count;
    res.total = total;
    res.rhs = rational(big_int(a - 1) * (b - 1) * (a + b + 1) * binomial(a + b, a),
                       big_int(24) * (a + b));
    res.average = rational(res.total, res.count);
    res.matches = rational(res.total) == res.rhs;
    return res;
}

/// Closed form for sum |lambda| over (k, mk+1)-cores.
inline rational proved_total(int k, int m) {
    const big_int mk = big_int(m) * k;
    return rational(mk * (k - 1) * ((m + 1) * k + 2) * binomial((m + 1) * k, k),
                    big_int(24) * (mk + 1));
}

/// All records for j in [0, m-1], n in [0, n_max]; indexed [j][n].
class stat_table {
public:
    stat_table(int m, int n_max, std::size_t element_limit = default_element_limit)
        : m_(m), n_max_(n_max) {
        if (m < 1) throw invalid_family("m must be >= 1");
        rows_.resize(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j)
            for (int n = 0; n <= n_max; ++n)
                rows_[static_cast<std::size_t>(j)].push_back(compute_stats({m, j, n}, element_limit));
    }

    int m() const noexcept { return m_; }
    int n_max() const noexcept { return n_max_; }

    const stat_record& at(int j, int n) const {
        return rows_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(n));
    }

    // Negative n reads as zero so convolution sums can run off the end.
    big_int A(int j, int n) const { return n < 0 ? big_int(0) : at(j, n).A; }
    big_int T(int j, int n) const { return n < 0 ? big_int(0) : at(j, n).T; }
    big_int R(int j, int n) const { return n < 0 ? big_int(0) : at(j, n).R; }
    big_int G(int j, int n) const { return n < 0 ? big_int(0) : at(j, n).G; }

    const std::vector<std::vector<stat_record>>& rows() const noexcept { return rows_; }

private:
    int m_;
    int n_max_;
    std::vector<std::vector<stat_record>> rows_;
};

}  // namespace abcore
