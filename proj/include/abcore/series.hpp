#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "abcore/errors.hpp"
#include "abcore/numeric.hpp"

namespace abcore {

/// A formal power series known modulo x^{order+1}.
///
/// The order travels with the value: binary operations keep the smaller
/// order, differentiation lowers it by one and multiplying by x^k raises it by
/// k. An order of -1 means no coefficient is known.
template <class Coeff = rational>
class truncated_series {
public:
    using coeff_type = Coeff;

    explicit truncated_series(int order = 0) : order_(std::max(order, -1)) {
        coeffs_.assign(static_cast<std::size_t>(order_ + 1), Coeff(0));
    }

    truncated_series(std::vector<Coeff> coeffs, int order) : truncated_series(order) {
        const auto n = std::min(coeffs.size(), coeffs_.size());
        std::move(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
    }

    static truncated_series constant(const Coeff& c, int order) {
        truncated_series s(order);
        if (order >= 0) s.coeffs_[0] = c;
        return s;
    }

    static truncated_series one(int order) { return constant(Coeff(1), order); }

    /// x^k at the given order.
    static truncated_series monomial(int k, int order) {
        truncated_series s(order);
        if (k >= 0 && k <= order) s.coeffs_[static_cast<std::size_t>(k)] = Coeff(1);
        return s;
    }

    int order() const noexcept { return order_; }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^k; zero past the stored range.
    Coeff operator[](int k) const {
        if (k < 0 || k > order_) return Coeff(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Coeff& at(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    truncated_series truncated(int order) const {
        return truncated_series(coeffs_, std::min(order, order_));
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c == 0; });
    }

    truncated_series& operator+=(const truncated_series& o) {
        shrink(o.order_);
        for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }

    truncated_series& operator-=(const truncated_series& o) {
        shrink(o.order_);
        for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }

    truncated_series& operator*=(const Coeff& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend truncated_series operator+(truncated_series a, const truncated_series& b) { return a += b; }
    friend truncated_series operator-(truncated_series a, const truncated_series& b) { return a -= b; }
    friend truncated_series operator-(truncated_series a) {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }

    friend truncated_series operator*(truncated_series a, const Coeff& c) { return a *= c; }
    friend truncated_series operator*(const Coeff& c, truncated_series a) { return a *= c; }
    friend truncated_series operator*(truncated_series a, long long c) { return a *= Coeff(c); }
    friend truncated_series operator*(long long c, truncated_series a) { return a *= Coeff(c); }

    friend truncated_series operator+(truncated_series a, const Coeff& c) {
        if (a.order_ >= 0) a.coeffs_[0] += c;
        return a;
    }
    friend truncated_series operator+(const Coeff& c, truncated_series a) { return std::move(a) + c; }
    friend truncated_series operator+(truncated_series a, long long c) { return std::move(a) + Coeff(c); }
    friend truncated_series operator+(long long c, truncated_series a) { return std::move(a) + Coeff(c); }
    friend truncated_series operator-(long long c, truncated_series a) { return (-std::move(a)) + Coeff(c); }
    friend truncated_series operator-(truncated_series a, long long c) { return std::move(a) + Coeff(-c); }

    friend truncated_series operator*(const truncated_series& a, const truncated_series& b) {
        const int order = std::min(a.order_, b.order_);
        truncated_series r(order);
        for (int i = 0; i <= order; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (int j = 0; i + j <= order; ++j)
                if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    truncated_series& operator*=(const truncated_series& o) { return *this = *this * o; }

    /// Requires a unit constant term in the divisor.
    friend truncated_series operator/(const truncated_series& a, const truncated_series& b) {
        const int order = std::min(a.order_, b.order_);
        if (order < 0) return truncated_series(order);
        if (b.coeffs_[0] == 0) throw division_by_non_unit();
        truncated_series q(order);
        for (int k = 0; k <= order; ++k) {
            Coeff v = a.coeffs_[k];
            for (int i = 0; i < k; ++i)
                if (b.coeffs_[k - i] != 0) v -= q.coeffs_[i] * b.coeffs_[k - i];
            q.coeffs_[k] = v / b.coeffs_[0];
        }
        return q;
    }

    friend truncated_series operator/(truncated_series a, const Coeff& c) {
        for (auto& x : a.coeffs_) x /= c;
        return a;
    }

    truncated_series pow(unsigned e) const {
        truncated_series result = one(order_);
        truncated_series base = *this;
        while (e) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e) base = base * base;
        }
        return result;
    }

    /// sum k c_k x^{k-1}, known through order - 1.
    truncated_series derivative() const {
        truncated_series d(order_ - 1);
        for (int k = 1; k <= order_; ++k) d.coeffs_[k - 1] = coeffs_[k] * Coeff(k);
        return d;
    }

    /// Multiplication by x^k; known through order + k.
    truncated_series shifted(int k) const {
        truncated_series s(order_ + k);
        for (int i = 0; i <= order_; ++i) s.coeffs_[i + k] = coeffs_[i];
        return s;
    }

    friend bool operator==(const truncated_series&, const truncated_series&) = default;

private:
    void shrink(int order) {
        if (order < order_) {
            order_ = std::max(order, -1);
            coeffs_.resize(static_cast<std::size_t>(order_ + 1));
        }
    }

    int order_;
    std::vector<Coeff> coeffs_;
};

using series = truncated_series<rational>;

/// Multiply by x^k.
template <class Coeff>
truncated_series<Coeff> times_x(const truncated_series<Coeff>& s, int k = 1) {
    return s.shifted(k);
}

template <class Coeff>
std::string to_string(const truncated_series<Coeff>& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) {
        if (s[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(s[k]) + ")";
        if (k == 1) out += "x";
        if (k > 1) out += "x^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out + " + O(x^" + std::to_string(s.order() + 1) + ")";
}

}  // namespace abcore
