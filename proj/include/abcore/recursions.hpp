#pragma once

#include <string>
#include <vector>

#include "abcore/numeric.hpp"
#include "abcore/statistics.hpp"

namespace abcore {

/// One evaluation of a convolution recursion at a fixed n.
struct recursion_check {
    std::string name;
    int m = 0;
    int n = 0;
    big_int lhs;
    big_int rhs;
    bool pass = false;
    // Errata entries reproduce a display exactly as printed; they are
    // reported but do not count towards overall success.
    bool asserted = true;
};

using recursion_report = std::vector<recursion_check>;

inline bool all_pass(const recursion_report& report) {
    for (const auto& e : report)
        if (e.asserted && !e.pass) return false;
    return true;
}

namespace detail {

// Each recursion is evaluated from a stat_table; the "corrected" forms differ
// from the printed ones only where the printed form is provably wrong.
class recursion_checker {
public:
    recursion_checker(const stat_table& table, recursion_report& out) : s_(table), out_(out) {}

    void run() {
        const int m = s_.m();
        for (int n = 0; n <= s_.n_max(); ++n) {
            if (m == 2) section_two(n);
            general(n);
        }
    }

private:
    // P^{(j)} with j taken modulo m.
    int wrap(int j) const { return j % s_.m(); }
    big_int A(int n) const { return s_.A(0, n); }
    big_int Aj(int j, int n) const { return s_.A(wrap(j), n); }
    big_int T(int j, int n) const { return s_.T(wrap(j), n); }
    big_int R(int j, int n) const { return s_.R(wrap(j), n); }
    big_int G(int j, int n) const { return s_.G(wrap(j), n); }

    void record(std::string name, int n, big_int lhs, big_int rhs, bool asserted = true) {
        const bool pass = lhs == rhs;
        out_.push_back({std::move(name), s_.m(), n, std::move(lhs), std::move(rhs), pass, asserted});
    }

    // m = 2, with Q = P^{(1)} and B = A^{(1)}.
    void section_two(int n) {
        big_int rhs = 0;
        for (int i = 0; i <= n - 1; ++i)
            rhs += A(n - i - 1) * T(1, i) + big_int(i) * Aj(1, i) * A(n - i - 1) +
                   Aj(1, i) * T(0, n - i - 1);
        record("T_P", n, T(0, n), rhs);

        rhs = 0;
        for (int i = 0; i <= n; ++i)
            rhs += A(n - i) * T(0, i) + big_int(i) * A(i) * A(n - i) + A(i) * T(0, n - i);
        record("T_Q", n, T(1, n), rhs);

        rhs = 0;
        for (int i = 0; i <= n - 1; ++i)
            rhs += A(n - i - 1) * R(1, i) + Aj(1, i) * R(0, n - i - 1);
        record("R_P", n, R(0, n), rhs);

        rhs = 0;
        for (int i = 0; i <= n; ++i)
            rhs += A(n - i) * (R(0, i) + 2 * T(0, i)) + big_int(i) * A(i) * A(n - i) +
                   A(i) * (R(0, n - i) + T(0, n - i));
        record("R_Q", n, R(1, n), rhs);

        rhs = 0;
        for (int i = 0; i <= n - 1; ++i)
            rhs += A(n - i - 1) * (G(1, i) + big_int(n - i - 1) * R(1, i) - big_int(i) * T(1, i)) +
                   Aj(1, i) * (G(0, n - i - 1) + big_int(i + 1) * R(0, n - i - 1) + T(0, n - i - 1)) +
                   big_int(i) * Aj(1, i) * A(n - i - 1) - T(1, i) * T(0, n - i - 1);
        record("G_P", n, G(0, n), rhs);

        rhs = 0;
        for (int i = 0; i <= n; ++i)
            rhs += A(n - i) * (G(0, i) + big_int(n - i + 1) * R(0, i) + big_int(2 * n + 3 - i) * T(0, i)) +
                   A(i) * (G(0, n - i) + big_int(i + 1) * R(0, n - i) + big_int(n + 2) * T(0, n - i)) +
                   big_int(n + 2) * i * A(i) * A(n - i) - T(0, i) * T(0, n - i);
        record("G_Q", n, G(1, n), rhs);
    }

    void general(int n) {
        const int m = s_.m();

        // A^{(h)} = A A^{(h+1)} and A = 1 + x A^{(1)} A
        for (int h = 1; h <= m - 1; ++h) {
            big_int rhs = 0;
            for (int i = 0; i <= n; ++i) rhs += Aj(h + 1, i) * A(n - i);
            record("A^(" + std::to_string(h) + ")", n, Aj(h, n), rhs);
        }
        {
            big_int rhs = n == 0 ? 1 : 0;
            for (int i = 0; i <= n - 1; ++i) rhs += Aj(1, i) * A(n - 1 - i);
            record("A^(0)", n, A(n), rhs);
        }

        // T^{(0)}: the printed middle term i*A_i*A_{n-i-1} should read i*A_i^{(1)}*A_{n-i-1}.
        {
            big_int rhs = 0, printed = 0;
            for (int i = 0; i <= n - 1; ++i) {
                const big_int common = T(1, i) * A(n - i - 1) + Aj(1, i) * T(0, n - i - 1);
                rhs += common + big_int(i) * Aj(1, i) * A(n - i - 1);
                printed += common + big_int(i) * A(i) * A(n - i - 1);
            }
            record("T^(0)", n, T(0, n), rhs);
            if (m >= 2) record("T^(0) as printed", n, T(0, n), printed, false);
        }

        // The remaining recursions need a genuine P^{(1)}; for m = 1 they are vacuous.
        if (m < 2) return;

        for (int j = 1; j <= m - 2; ++j) {
            const std::string tag = "(" + std::to_string(j) + ")";
            big_int t = 0, r = 0, g = 0;
            const big_int shift = big_int(j) * (n + 1) + 1;
            for (int i = 0; i <= n; ++i) {
                t += T(j + 1, i) * A(n - i) + big_int(i) * Aj(j + 1, i) * A(n - i) +
                     Aj(j + 1, i) * T(0, n - i);
                r += A(n - i) * R(j + 1, i) + big_int(i) * j * Aj(j + 1, i) * A(n - i) +
                     Aj(j + 1, i) * (R(0, n - i) + big_int(j) * T(0, n - i));
                g += A(n - i) * (G(j + 1, i) + big_int(n - i) * R(j + 1, i) - big_int(i) * T(j + 1, i)) +
                     Aj(j + 1, i) * (G(0, n - i) + big_int(i + 1) * R(0, n - i) + shift * T(0, n - i)) +
                     shift * i * Aj(j + 1, i) * A(n - i) - T(j + 1, i) * T(0, n - i);
            }
            record("T^" + tag, n, T(j, n), t);
            record("R^" + tag, n, R(j, n), r);
            record("G^" + tag, n, G(j, n), g);
        }

        const int top = m - 1;
        {
            big_int rhs = 0;
            for (int i = 0; i <= n; ++i)
                rhs += T(0, i) * A(n - i) + big_int(i) * A(i) * A(n - i) + A(i) * T(0, n - i);
            record("T^(m-1)", n, T(top, n), rhs);
        }
        {
            big_int rhs = 0;
            for (int i = 0; i <= n - 1; ++i)
                rhs += A(n - i - 1) * R(1, i) + Aj(1, i) * R(0, n - i - 1);
            record("R^(0)", n, R(0, n), rhs);
        }
        // R^{(m-1)}: printed with upper limit n-1; the sum must run to n.
        {
            big_int rhs = 0, printed = 0;
            for (int i = 0; i <= n; ++i) {
                const big_int term = A(n - i) * (R(0, i) + big_int(m) * T(0, i)) +
                                     big_int(i) * (m - 1) * A(i) * A(n - i) +
                                     A(i) * (R(0, n - i) + big_int(m - 1) * T(0, n - i));
                rhs += term;
                if (i <= n - 1) printed += term;
            }
            record("R^(m-1)", n, R(top, n), rhs);
            record("R^(m-1) as printed", n, R(top, n), printed, false);
        }
        {
            big_int rhs = 0;
            for (int i = 0; i <= n; ++i)
                rhs += A(n - i - 1) * (G(1, i) + big_int(n - i - 1) * R(1, i) - big_int(i) * T(1, i)) +
                       Aj(1, i) * (G(0, n - i - 1) + big_int(i + 1) * R(0, n - i - 1) + T(0, n - i - 1)) +
                       big_int(i) * Aj(1, i) * A(n - i - 1) - T(1, i) * T(0, n - i - 1);
            record("G^(0)", n, G(0, n), rhs);
        }
        {
            const big_int lift = big_int(m - 1) * (n + 1) + 1;
            big_int rhs = 0;
            for (int i = 0; i <= n; ++i)
                rhs += A(n - i) * (G(0, i) + big_int(n - i + 1) * R(0, i) +
                                   (big_int(m) * (n + 1) + 1 - i) * T(0, i)) +
                       A(i) * (G(0, n - i) + big_int(i + 1) * R(0, n - i) + lift * T(0, n - i)) +
                       lift * i * A(i) * A(n - i) - T(0, i) * T(0, n - i);
            record("G^(m-1)", n, G(top, n), rhs);
        }
    }

    const stat_table& s_;
    recursion_report& out_;
};

}  // namespace detail

/// Evaluates every decomposition recursion for n = 0..n_max against
/// brute-force statistics. For m = 2 the P/Q forms are included as well.
inline recursion_report verify_proof_recursions(const stat_table& table) {
    recursion_report report;
    detail::recursion_checker(table, report).run();
    return report;
}

inline recursion_report verify_proof_recursions(int m, int n_max,
                                                std::size_t element_limit = default_element_limit) {
    return verify_proof_recursions(stat_table(m, n_max, element_limit));
}

}  // namespace abcore
