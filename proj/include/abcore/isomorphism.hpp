#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "abcore/gap_poset.hpp"

namespace abcore {

/// Outcome of an isomorphism check. On failure `witness` names the first
/// offending element or cover pair.
struct iso_result {
    bool ok = true;
    std::string witness;

    explicit operator bool() const noexcept { return ok; }
};

/// True iff f is a bijection from.elements() -> to.elements() that carries
/// covers onto covers in both directions.
template <class Map>
iso_result check_isomorphism(const gap_poset& from, const gap_poset& to, Map&& f) {
    if (from.size() != to.size())
        return {false, "size mismatch: " + std::to_string(from.size()) + " vs " +
                           std::to_string(to.size())};
    std::vector<int> image;
    image.reserve(from.size());
    for (int p : from.elements()) {
        const int q = f(p);
        if (!to.contains(q))
            return {false, "map not total: " + std::to_string(p) + " -> " + std::to_string(q) +
                               " is not in the target"};
        image.push_back(q);
    }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        return {false, "not injective: " + std::to_string(*dup) + " is hit twice"};

    for (const auto& c : from.covers())
        if (!to.has_cover(f(c.upper), f(c.lower)))
            return {false, "cover (" + std::to_string(c.upper) + "," + std::to_string(c.lower) +
                               ") maps to non-cover (" + std::to_string(f(c.upper)) + "," +
                               std::to_string(f(c.lower)) + ")"};
    // Injective and cover-preserving with equal cover counts gives the converse.
    if (from.covers().size() != to.covers().size())
        return {false, "target has " + std::to_string(to.covers().size()) + " covers, source " +
                           std::to_string(from.covers().size())};
    return {};
}

/// The m = 2 posets and their sub-posets used in the recursive decomposition
/// of J(P_n) and J(Q_n). Labels are never changed.
namespace m2 {

inline gap_poset P(int n) { return family_poset({2, 0, n}); }
inline gap_poset Q(int n) { return family_poset({2, 1, n}); }

/// P_n(i), 1 <= i <= n: elements above some integer in [1, i-1] and
/// incomparable to every integer in [i, n-1].
inline gap_poset P_upper(int n, int i) {
    const auto p = P(n);
    return p.induced([&](int x) {
        bool above = false;
        for (int k = 1; k <= i - 1; ++k)
            if (p.contains(k) && p.less(k, x)) above = true;
        if (!above) return false;
        for (int k = i; k <= n - 1; ++k)
            if (p.contains(k) && p.comparable(k, x)) return false;
        return true;
    });
}

/// P_n(-i): elements incomparable to every integer in [1, i].
inline gap_poset P_lower(int n, int i) {
    const auto p = P(n);
    return p.induced([&](int x) {
        for (int k = 1; k <= i; ++k)
            if (p.contains(k) && p.comparable(k, x)) return false;
        return true;
    });
}

/// Q_n(i), 1 <= i <= n: elements above some integer in [n+2, n+i] and
/// incomparable to every integer in [n+i+1, 2n+1].
inline gap_poset Q_upper(int n, int i) {
    const auto q = Q(n);
    return q.induced([&](int x) {
        bool above = false;
        for (int k = n + 2; k <= n + i; ++k)
            if (q.contains(k) && q.less(k, x)) above = true;
        if (!above) return false;
        for (int k = n + i + 1; k <= 2 * n + 1; ++k)
            if (q.contains(k) && q.comparable(k, x)) return false;
        return true;
    });
}

/// Q_n(-i): elements incomparable to every integer in [n+2, n+i+1].
inline gap_poset Q_lower(int n, int i) {
    const auto q = Q(n);
    return q.induced([&](int x) {
        for (int k = n + 2; k <= n + i + 1; ++k)
            if (q.contains(k) && q.comparable(k, x)) return false;
        return true;
    });
}

}  // namespace m2

/// One instance of a named isomorphism: source, target and the explicit map.
struct iso_instance {
    std::string family;
    std::string label;
    gap_poset source;
    gap_poset target;
    std::function<int(int)> map;

    iso_result verify() const { return check_isomorphism(source, target, map); }
};

inline int floor_div(int p, int d) { return d == 0 ? 0 : p / d; }

/// Q_n ~ P_{n+1,2n+1} via q -> (2n+2) floor(q/(n+1)) - q.
inline iso_instance q_to_gap_poset(int n) {
    return {"Q_n ~ P_{n+1,2n+1}", "n=" + std::to_string(n), m2::Q(n),
            gap_poset::of(n + 1, 2 * n + 1),
            [n](int q) { return (2 * n + 2) * (q / (n + 1)) - q; }};
}

/// Q_{i-1} ~ P_n(i) via q -> q + (n-i) rho_{Q_{i-1}}(q).
inline iso_instance p_upper_iso(int n, int i) {
    return {"Q_{i-1} ~ P_n(i)", "n=" + std::to_string(n) + ",i=" + std::to_string(i),
            m2::Q(i - 1), m2::P_upper(n, i),
            [n, i](int q) { return q + (n - i) * floor_div(q, i); }};
}

/// P_{n-i} ~ P_n(-i) via p -> p + i + i rho_{P_{n-i}}(p).
inline iso_instance p_lower_iso(int n, int i) {
    return {"P_{n-i} ~ P_n(-i)", "n=" + std::to_string(n) + ",i=" + std::to_string(i),
            m2::P(n - i), m2::P_lower(n, i),
            [n, i](int p) { return p + i + i * floor_div(p, n - i); }};
}

/// P_{i-1} ~ Q_n(i) via p -> p + 2n + 3 + (n+2-i) rho_{P_{i-1}}(p).
inline iso_instance q_upper_iso(int n, int i) {
    return {"P_{i-1} ~ Q_n(i)", "n=" + std::to_string(n) + ",i=" + std::to_string(i),
            m2::P(i - 1), m2::Q_upper(n, i),
            [n, i](int p) { return p + 2 * n + 3 + (n + 2 - i) * floor_div(p, i - 1); }};
}

/// P_{n-i+1} ~ Q_n(-i) via p -> p + n + 1 + i + i rho_{P_{n-i+1}}(p).
inline iso_instance q_lower_iso(int n, int i) {
    return {"P_{n-i+1} ~ Q_n(-i)", "n=" + std::to_string(n) + ",i=" + std::to_string(i),
            m2::P(n - i + 1), m2::Q_lower(n, i),
            [n, i](int p) { return p + n + 1 + i + i * floor_div(p, n - i + 1); }};
}

/// Every catalogued isomorphism for 1 <= i <= n <= n_max.
inline std::vector<iso_instance> isomorphism_catalog(int n_max) {
    std::vector<iso_instance> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(q_to_gap_poset(n));
    for (int n = 1; n <= n_max; ++n)
        for (int i = 1; i <= n; ++i) {
            out.push_back(p_upper_iso(n, i));
            out.push_back(p_lower_iso(n, i));
            out.push_back(q_upper_iso(n, i));
            out.push_back(q_lower_iso(n, i));
        }
    return out;
}

}  // namespace abcore
