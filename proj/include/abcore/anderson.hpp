#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "abcore/errors.hpp"
#include "abcore/partition.hpp"

namespace abcore {

// Anderson's correspondence between (a, b)-cores and order ideals of P_{a,b}.
// Both directions are purely set-theoretic; whether the set is an ideal of a
// particular poset is for the caller to check.

/// First-column hook lengths {lambda_i + r - i}, ascending.
inline std::vector<int> partition_to_ideal(const partition& lambda) {
    const int r = static_cast<int>(lambda.length());
    std::vector<int> out;
    out.reserve(lambda.length());
    for (int i = 0; i < r; ++i) out.push_back(lambda[static_cast<std::size_t>(i)] + r - 1 - i);
    std::reverse(out.begin(), out.end());
    return out;
}

/// Inverse of partition_to_ideal on sets of distinct positive integers.
/// Throws not_beta_set when the decoded parts are not a partition.
inline partition ideal_to_partition(std::span<const int> members) {
    std::vector<int> h(members.begin(), members.end());
    std::sort(h.begin(), h.end(), std::greater<>());
    if (std::adjacent_find(h.begin(), h.end()) != h.end())
        throw not_beta_set("repeated element in beta-set");
    const int r = static_cast<int>(h.size());
    std::vector<int> parts(h.size());
    for (int i = 0; i < r; ++i) {
        parts[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] - (r - 1 - i);
        if (parts[static_cast<std::size_t>(i)] <= 0)
            throw not_beta_set("element " + std::to_string(h[static_cast<std::size_t>(i)]) +
                               " decodes to a non-positive part");
    }
    return partition(std::move(parts));
}

inline partition ideal_to_partition(std::initializer_list<int> members) {
    return ideal_to_partition(std::span<const int>(members.begin(), members.size()));
}

/// sigma(I) - C(|I|, 2), the size of the corresponding partition.
inline long long size_via_ideal(std::span<const int> members) {
    // Validates the beta-set even though only the sum is needed.
    (void)ideal_to_partition(members);
    long long sigma = 0;
    for (int p : members) sigma += p;
    const long long k = static_cast<long long>(members.size());
    return sigma - k * (k - 1) / 2;
}

inline long long size_via_ideal(std::initializer_list<int> members) {
    return size_via_ideal(std::span<const int>(members.begin(), members.size()));
}

}  // namespace abcore
