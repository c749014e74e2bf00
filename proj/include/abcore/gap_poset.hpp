#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "abcore/errors.hpp"
#include "abcore/numeric.hpp"

namespace abcore {

struct cover {
    int upper;
    int lower;
    friend auto operator<=>(const cover&, const cover&) = default;
};

/// A finite poset on positive integers drawn from the gaps of the numerical
/// semigroup <a, b>. Elements are kept in ascending numeric order, which is a
/// linear extension (an upper cover is always numerically larger).
///
/// Sub-posets keep the parent's labels and its (a, b); their covers are the
/// covers of the induced order.
class gap_poset {
public:
    gap_poset() = default;

    /// P_{a,b}: gaps of <a, b>, with p covering q iff p - q is a or b.
    static gap_poset of(int a, int b) {
        require_coprime(a, b);
        std::vector<int> gaps;
        if (a > 1 && b > 1) {
            const long long frobenius = static_cast<long long>(a) * b - a - b;
            std::vector<char> representable(static_cast<std::size_t>(frobenius) + 1, 0);
            for (long long x = 0; x <= frobenius; x += a)
                for (long long y = x; y <= frobenius; y += b)
                    representable[static_cast<std::size_t>(y)] = 1;
            for (long long p = 1; p <= frobenius; ++p)
                if (!representable[static_cast<std::size_t>(p)]) gaps.push_back(static_cast<int>(p));
        }
        std::vector<cover> covers;
        for (int p : gaps)
            for (int d : {a, b})
                if (std::binary_search(gaps.begin(), gaps.end(), p - d)) covers.push_back({p, p - d});
        return gap_poset(a, b, std::move(gaps), std::move(covers));
    }

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    std::span<const int> elements() const noexcept { return elements_; }
    const std::vector<cover>& covers() const noexcept { return covers_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    std::optional<std::size_t> index_of(int p) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        if (it == elements_.end() || *it != p) return std::nullopt;
        return static_cast<std::size_t>(it - elements_.begin());
    }

    bool contains(int p) const { return index_of(p).has_value(); }

    /// Indices of the elements covered by elements()[i]; all smaller than i.
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }

    /// q <= p in the poset order. Both must be elements.
    bool leq(int q, int p) const {
        const auto iq = index_of(q);
        const auto ip = index_of(p);
        if (!iq) throw element_not_in_poset(q);
        if (!ip) throw element_not_in_poset(p);
        return below(*ip, *iq);
    }

    bool less(int q, int p) const { return q != p && leq(q, p); }
    bool comparable(int p, int q) const { return leq(p, q) || leq(q, p); }

    bool has_cover(int upper, int lower) const {
        return std::binary_search(covers_.begin(), covers_.end(), cover{upper, lower});
    }

    /// Induced sub-poset on the elements satisfying keep(p).
    template <class Pred>
    gap_poset induced(Pred keep) const {
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (keep(elements_[i])) kept.push_back(i);
        std::vector<int> elems;
        elems.reserve(kept.size());
        for (auto i : kept) elems.push_back(elements_[i]);
        std::vector<cover> covers;
        for (std::size_t x = 0; x < kept.size(); ++x)
            for (std::size_t y = 0; y < x; ++y) {
                const auto hi = kept[x], lo = kept[y];
                if (!below(hi, lo)) continue;
                bool direct = true;
                for (std::size_t z = y + 1; z < x && direct; ++z)
                    if (below(hi, kept[z]) && below(kept[z], lo)) direct = false;
                if (direct) covers.push_back({elements_[hi], elements_[lo]});
            }
        return gap_poset(a_, b_, std::move(elems), std::move(covers));
    }

private:
    gap_poset(int a, int b, std::vector<int> elements, std::vector<cover> covers)
        : a_(a), b_(b), elements_(std::move(elements)), covers_(std::move(covers)) {
        std::sort(covers_.begin(), covers_.end());
        const std::size_t n = elements_.size();
        lower_.assign(n, {});
        for (const auto& c : covers_) lower_[*index_of(c.upper)].push_back(*index_of(c.lower));
        words_ = (n + 63) / 64;
        closure_.assign(n * words_, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t* row = &closure_[i * words_];
            row[i / 64] |= std::uint64_t{1} << (i % 64);
            for (auto l : lower_[i]) {
                const std::uint64_t* sub = &closure_[l * words_];
                for (std::size_t w = 0; w < words_; ++w) row[w] |= sub[w];
            }
        }
    }

    // element index lo <= element index hi
    bool below(std::size_t hi, std::size_t lo) const {
        return (closure_[hi * words_ + lo / 64] >> (lo % 64)) & 1U;
    }

    int a_ = 1;
    int b_ = 1;
    std::vector<int> elements_;
    std::vector<cover> covers_;
    std::vector<std::vector<std::size_t>> lower_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> closure_;
};

inline gap_poset make_gap_poset(int a, int b) { return gap_poset::of(a, b); }

/// Names a member of the family P_n^{(j)} for fixed m.
///   j = 0:  P_{n, mn+1}
///   j >= 1: P_{n+1, m(n+1)+1} with the layers floor(p/(n+1)) < j removed.
struct family_id {
    int m = 1;
    int j = 0;
    int n = 0;

    void validate() const {
        if (m < 1) throw invalid_family("m must be >= 1");
        if (n < 0) throw invalid_family("n must be >= 0");
        if (j < 0 || j > m - 1)
            throw invalid_family("j = " + std::to_string(j) + " outside [0, " +
                                 std::to_string(m - 1) + "]");
    }

    /// The divisor used by the layer statistic rho.
    int layer_width() const { return j == 0 ? n : n + 1; }

    friend auto operator<=>(const family_id&, const family_id&) = default;
};

inline gap_poset family_poset(const family_id& id) {
    id.validate();
    if (id.j == 0) {
        if (id.n == 0) return gap_poset{};
        return gap_poset::of(id.n, id.m * id.n + 1);
    }
    const int width = id.n + 1;
    const auto parent = gap_poset::of(width, id.m * width + 1);
    return parent.induced([&](int p) { return p / width >= id.j; });
}

/// Layer index of p within the family poset: floor(p/n) for j = 0 and
/// floor(p/(n+1)) for j >= 1.
inline int rho(const family_id& id, int p, const gap_poset& poset) {
    if (!poset.contains(p)) throw element_not_in_poset(p);
    return p / id.layer_width();
}

inline int rho(const family_id& id, int p) { return rho(id, p, family_poset(id)); }

/// A downward-closed subset, members sorted ascending.
struct order_ideal {
    std::vector<int> members;

    std::size_t size() const noexcept { return members.size(); }
    friend bool operator==(const order_ideal&, const order_ideal&) = default;
};

/// Canonical order: by cardinality, then lexicographically on sorted members.
inline bool canonical_less(const order_ideal& x, const order_ideal& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members < y.members;
}

namespace detail {

template <class Visit>
void ideals_rec(const gap_poset& poset, std::size_t i, std::vector<char>& in,
                std::vector<int>& members, Visit& visit) {
    if (i == poset.size()) {
        visit(std::span<const int>(members));
        return;
    }
    in[i] = 0;
    ideals_rec(poset, i + 1, in, members, visit);
    const auto& lows = poset.lower_covers(i);
    if (std::all_of(lows.begin(), lows.end(), [&](std::size_t l) { return in[l] != 0; })) {
        in[i] = 1;
        members.push_back(poset.elements()[i]);
        ideals_rec(poset, i + 1, in, members, visit);
        members.pop_back();
        in[i] = 0;
    }
}

}  // namespace detail

/// Calls visit(std::span<const int>) once per order ideal, members ascending.
/// Traversal order is depth-first, not canonical.
template <class Visit>
void for_each_order_ideal(const gap_poset& poset, Visit&& visit) {
    std::vector<char> in(poset.size(), 0);
    std::vector<int> members;
    members.reserve(poset.size());
    detail::ideals_rec(poset, 0, in, members, visit);
}

inline std::uint64_t count_order_ideals(const gap_poset& poset) {
    std::uint64_t count = 0;
    for_each_order_ideal(poset, [&](std::span<const int>) { ++count; });
    return count;
}

inline std::vector<order_ideal> order_ideals(const gap_poset& poset) {
    std::vector<order_ideal> out;
    for_each_order_ideal(poset, [&](std::span<const int> m) {
        out.push_back(order_ideal{std::vector<int>(m.begin(), m.end())});
    });
    std::sort(out.begin(), out.end(),
              [](const order_ideal& x, const order_ideal& y) { return canonical_less(x, y); });
    return out;
}

/// Membership and downward closure, checked against the cover list only.
inline bool is_order_ideal(const gap_poset& poset, std::span<const int> members) {
    for (int p : members)
        if (!poset.contains(p)) return false;
    for (const auto& c : poset.covers()) {
        const bool has_upper = std::find(members.begin(), members.end(), c.upper) != members.end();
        const bool has_lower = std::find(members.begin(), members.end(), c.lower) != members.end();
        if (has_upper && !has_lower) return false;
    }
    return true;
}

/// Hasse diagram in DOT: one node per element, one edge upper -> lower per cover.
inline std::string to_dot(const gap_poset& poset, const std::string& name = "hasse") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=TB;\n";
    for (int p : poset.elements()) os << "  " << p << " [label=\"" << p << "\"];\n";
    for (const auto& c : poset.covers()) os << "  " << c.upper << " -> " << c.lower << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace abcore
