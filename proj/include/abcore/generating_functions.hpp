#pragma once

#include <string>
#include <vector>

#include "abcore/errors.hpp"
#include "abcore/numeric.hpp"
#include "abcore/series.hpp"
#include "abcore/statistics.hpp"

namespace abcore {

inline constexpr int default_series_order = 12;

/// The series A with A(0) = 1 and x A^{m+1} - A + 1 = 0, through x^order.
/// Fixed-point iteration A <- 1 + x A^{m+1}; each pass fixes one more
/// coefficient.
inline series solve_A(int m, int order) {
    if (m < 1) throw invalid_family("m must be >= 1");
    series A = series::one(order);
    for (int pass = 0; pass <= order; ++pass) {
        series next = (times_x(A.pow(static_cast<unsigned>(m + 1))) + 1).truncated(order);
        if (next == A) break;
        A = std::move(next);
    }
    return A;
}

/// sum_n binom((m+1)n+1, n)/((m+1)n+1) x^n.
inline series fuss_catalan_series(int m, int order) {
    series s(order);
    for (int n = 0; n <= order; ++n) s.at(n) = rational(fuss_catalan(m, n));
    return s;
}

/// Closed form of the total size of all (k, mk+1)-cores, as a series in k.
inline series proved_total_series(int m, int order) {
    series s(order);
    for (int k = 0; k <= order; ++k) s.at(k) = k == 0 ? rational(0) : proved_total(k, m);
    return s;
}

/// Generating functions of the ideal statistics of P_n^{(j)}, each built from
/// A by its closed form. Vectors are indexed by j, entry 0 being the j = 0
/// series. G[j] for j >= 1 is derived from the G relations (G_{m-1} from the
/// top relation, then downwards), since no closed form exists for it.
struct series_bundle {
    int m = 1;
    int order = 0;
    series A, dA, d2A, d3A;
    series denom;  // 1 - (m+1) x A^m
    std::vector<series> Aj;
    std::vector<series> T;
    std::vector<series> R;
    std::vector<series> G;
};

namespace detail {

inline rational q(long long num, long long den = 1) { return rational(num, den); }
inline rational qb(const big_int& z) { return rational(z); }

inline void require_integral(const series& s, const std::string& what) {
    for (int k = 0; k <= s.order(); ++k)
        if (!is_integral(s[k]))
            throw integrality_violation(what + ": coefficient of x^" + std::to_string(k) + " is " +
                                        to_string(s[k]));
}

}  // namespace detail

/// Builds every series at working order `order`. Derived series carry their
/// own validity order (at least order - 3 for anything using A''').
inline series_bundle stat_series(int m, int order) {
    using detail::q;
    using detail::qb;
    if (m < 1) throw invalid_family("m must be >= 1");
    series_bundle b;
    b.m = m;
    b.order = order;
    const series A = solve_A(m, order);
    b.A = A;
    b.dA = A.derivative();
    b.d2A = b.dA.derivative();
    b.d3A = b.d2A.derivative();
    const series& A1 = b.dA;
    const series& A2 = b.d2A;
    auto Ap = [&](int k) { return A.pow(static_cast<unsigned>(k)); };
    b.denom = 1 - (m + 1) * times_x(Ap(m));

    b.Aj.resize(static_cast<std::size_t>(m));
    b.Aj[0] = A;
    for (int j = 1; j < m; ++j) b.Aj[j] = Ap(m - j + 1);

    const series T0 = qb(binomial(m + 1, 2)) * times_x(A1 * A1, 2) / A;
    const series R0 =
        (qb(binomial(m + 1, 2)) * times_x(A1 * T0) + qb(binomial(m + 1, 3)) * times_x(A1 * A1, 2)) / A;
    const series G0 =
        ((m + 1) * times_x(Ap(m) * R0) + (m * m + m) * times_x(A1 * Ap(m - 1) * R0, 2) +
         qb(binomial(m + 2, 2)) * times_x(Ap(m) * T0) +
         qb(binomial(m + 1, 2)) * times_x(A1 * Ap(m - 1) * T0, 2) +
         qb(binomial(m + 2, 3)) * times_x(A1 * Ap(m), 2) +
         qb(binomial(m + 2, 4)) * times_x(A1 * A1 * Ap(m - 1), 3) -
         qb(binomial(m + 1, 2)) * times_x(Ap(m - 1) * T0 * T0)) /
        b.denom;

    b.T.assign(static_cast<std::size_t>(m), series{});
    b.R.assign(static_cast<std::size_t>(m), series{});
    b.G.assign(static_cast<std::size_t>(m), series{});
    b.T[0] = T0;
    b.R[0] = R0;
    b.G[0] = G0;
    for (int j = 1; j < m; ++j) {
        b.T[j] = (m + 1 - j) * Ap(m - j) * T0 + qb(binomial(m + 1 - j, 2)) * times_x(A1 * Ap(m - j));
        b.R[j] = (m - j + 1) * Ap(m - j) * R0 + q((m - j + 1) * (m + j), 2) * Ap(m - j) * T0 +
                 q(m + 2 * j - 1, 3) * qb(binomial(m - j + 1, 2)) * times_x(A1 * Ap(m - j));
    }
    if (m >= 2) {
        const series dT0 = T0.derivative();
        b.G[m - 1] = 2 * A * G0 + 2 * times_x(A1 * R0) + 2 * A * R0 + (2 * m + 1) * A * T0 +
                     (2 * m - 1) * times_x(A1 * T0) + (2 * m - 2) * times_x(A * dT0) +
                     (2 * m - 1) * times_x(A1 * A) + (m - 1) * times_x(A2 * A, 2) +
                     (m - 1) * times_x(A1 * A1, 2) - T0 * T0;
        for (int i = m - 2; i >= 1; --i) {
            const int k = m - i;
            b.G[i] = A * b.G[i + 1] + times_x(A1 * b.R[i + 1]) - times_x(A * b.T[i + 1].derivative()) +
                     Ap(k) * G0 + Ap(k) * R0 + k * times_x(A1 * Ap(k - 1) * R0) +
                     (i + 1) * Ap(k) * T0 + i * k * times_x(A1 * Ap(k - 1) * T0) +
                     i * times_x(Ap(k) * dT0) + (2 * i + 1) * k * times_x(A1 * Ap(k)) +
                     i * k * times_x(A2 * Ap(k), 2) + i * k * k * times_x(A1 * A1 * Ap(k - 1), 2) -
                     T0 * b.T[i + 1];
        }
    }

    for (int j = 0; j < m; ++j) {
        const std::string tag = "(" + std::to_string(j) + ")";
        detail::require_integral(b.Aj[j], "A^" + tag);
        detail::require_integral(b.T[j], "T_" + tag);
        detail::require_integral(b.R[j], "R_" + tag);
        detail::require_integral(b.G[j], "G_" + tag);
    }
    return b;
}

/// Residual of one generating-function identity, expected to vanish.
struct identity_check {
    std::string name;
    int m = 0;
    int effective_order = 0;
    rational residual_max_abs;
    int first_nonzero = -1;
    bool pass = false;
};

using identity_report = std::vector<identity_check>;

inline bool all_pass(const identity_report& report) {
    for (const auto& e : report)
        if (!e.pass) return false;
    return true;
}

inline identity_check make_identity_check(std::string name, int m, const series& residual,
                                          int target_order) {
    identity_check c;
    c.name = std::move(name);
    c.m = m;
    c.effective_order = std::min(target_order, residual.order());
    c.residual_max_abs = 0;
    for (int k = 0; k <= c.effective_order; ++k) {
        const rational v = abs(residual[k]);
        if (v != 0 && c.first_nonzero < 0) c.first_nonzero = k;
        if (v > c.residual_max_abs) c.residual_max_abs = v;
    }
    c.pass = c.first_nonzero < 0 && c.effective_order >= 0;
    return c;
}

namespace detail {

inline void general_identities(const series_bundle& b, int N, identity_report& out) {
    using detail::q;
    using detail::qb;
    const int m = b.m;
    const series& A = b.A;
    const series& A1 = b.dA;
    const series& A2 = b.d2A;
    const series& A3 = b.d3A;
    const series& D = b.denom;
    const series& T0 = b.T[0];
    const series& R0 = b.R[0];
    const series& G0 = b.G[0];
    auto Ap = [&](int k) { return A.pow(static_cast<unsigned>(k)); };
    auto add = [&](const std::string& name, const series& r) {
        out.push_back(make_identity_check(name, m, r, N));
    };

    add("functional_equation", times_x(Ap(m + 1)) - A + 1);
    add("fuss_catalan_count", A - fuss_catalan_series(m, b.order));
    add("first_derivative", A1 * D - Ap(m + 1));
    add("second_derivative", A2 * D * D - (m + 1) * Ap(m) * (A1 + Ap(m + 1) - times_x(Ap(m) * A1)));
    add("third_derivative",
        A3 * D.pow(3) -
            (m + 1) * Ap(m - 1) *
                (A * A2 + (m - 1) * m * times_x(Ap(m) * A1 * A1) + (4 * m + 2) * Ap(m + 1) * A1 +
                 m * A1 * A1 - (m + 2) * times_x(Ap(m + 1) * A2) +
                 (m + 1) * times_x(Ap(2 * m + 1) * A2, 2) - 2 * (m + 1) * times_x(A1 * Ap(2 * m + 1)) +
                 2 * (m + 1) * Ap(2 * m + 2)));
    add("T0_rational_form", T0 * D - qb(binomial(m + 1, 2)) * times_x(A1 * Ap(m), 2));
    add("R0_rational_form", R0 * D - qb(binomial(m + 1, 2)) * times_x(Ap(m) * T0) -
                                qb(binomial(m + 1, 3)) * times_x(A1 * Ap(m), 2));
    add("G0_coefficients_closed_form", G0 - proved_total_series(m, b.order));
    add("main_identity",
        m * (m + 1) * times_x(A3, 3) + m * (2 * m + 4) * times_x(A2, 2) - 24 * G0);

    if (m < 2) return;
    const auto& T = b.T;
    const auto& R = b.R;
    const auto& G = b.G;
    const series dT0 = T0.derivative();

    for (int j = 1; j <= m - 2; ++j) {
        const std::string tag = "(" + std::to_string(j) + ")";
        add("T_j_relation" + tag,
            T[j] - (A * T[j + 1] + (m - j) * times_x(A1 * Ap(m - j)) + Ap(m - j) * T0));
        add("R_j_relation" + tag, R[j] - (A * R[j + 1] + j * Ap(m - j) * T0 +
                                          j * (m - j) * times_x(A1 * Ap(m - j)) + Ap(m - j) * R0));
    }
    add("T_0_relation", T0 - (times_x(A * T[1]) + m * times_x(A1 * Ap(m), 2) + times_x(Ap(m) * T0)));
    add("T_top_relation", T[m - 1] - (2 * A * T0 + times_x(A1 * A)));
    add("R_0_relation", R0 - (times_x(A * R[1]) + times_x(Ap(m) * R0)));
    add("R_top_relation",
        R[m - 1] - (2 * A * R0 + (2 * m - 1) * A * T0 + (m - 1) * times_x(A1 * A)));

    series tsum(b.order), tdsum(b.order), rsum(b.order);
    for (int j = 1; j <= m - 1; ++j) {
        tsum += Ap(j - 1) * T[j];
        tdsum += Ap(j) * T[j].derivative();
        rsum += Ap(j - 1) * R[j];
    }
    add("T_sum", tsum - Ap(m - 1) * (q(m * m + m - 2, 2) * T0 + qb(binomial(m + 1, 3)) * times_x(A1)));
    add("T_derivative_sum",
        tdsum - Ap(m - 1) * (q(m * m + m - 2, 2) * A * dT0 + q((m - 1) * m * (m + 1), 3) * A1 * T0 +
                             qb(binomial(m + 1, 3)) * A1 * A + qb(binomial(m + 1, 3)) * times_x(A2 * A) +
                             q((m - 1) * m * (m + 1) * (3 * m - 2), 24) * times_x(A1 * A1)));
    add("R_sum", rsum - Ap(m - 1) * (q(m * m + m - 2, 2) * R0 + q(m * (2 * m * m + 3 * m - 5), 6) * T0 +
                                     q((m - 1) * m * m * (m + 1), 12) * times_x(A1)));

    const series expanded =
        ((m + 1) * times_x(Ap(m) * R0) + q(m * m + m + 2, 2) * times_x(A1 * Ap(m - 1) * R0, 2) +
         times_x(A1 * rsum, 2) - times_x(tdsum, 2) + qb(binomial(m + 2, 2)) * times_x(Ap(m) * T0) +
         q(m * (m * m + 5), 6) * times_x(A1 * Ap(m - 1) * T0, 2) +
         q((m + 2) * (m - 1), 2) * times_x(Ap(m) * dT0, 2) +
         q(m * (2 * m + 1) * (m + 1), 6) * times_x(A1 * Ap(m), 2) +
         qb(binomial(m + 1, 3)) * times_x(A2 * Ap(m), 3) +
         q((m - 1) * m * m * (m + 1), 12) * times_x(A1 * A1 * Ap(m - 1), 3) -
         times_x(Ap(m - 1) * T0 * T0) - times_x(T0 * tsum)) /
        D;
    add("G0_expanded_form", G0 - expanded);
    add("G_0_relation",
        G0 - (times_x(A * G[1]) + times_x(A1 * R[1], 2) - times_x(A * T[1].derivative(), 2) +
              times_x(Ap(m) * G0) + times_x(Ap(m) * R0) + m * times_x(A1 * Ap(m - 1) * R0, 2) +
              times_x(Ap(m) * T0) + m * times_x(A1 * Ap(m), 2) - times_x(T0 * T[1])));
}

// The m = 2 forms, rebuilt from their own displays rather than the general ones.
inline void m2_identities(const series_bundle& b, int N, identity_report& out) {
    using detail::q;
    const series& A = b.A;
    const series& A1 = b.dA;
    const series& A2 = b.d2A;
    const series& A3 = b.d3A;
    auto add = [&](const std::string& name, const series& r) {
        out.push_back(make_identity_check(name, 2, r, N));
    };

    series B(b.order);
    for (int n = 0; n <= b.order; ++n) B.at(n) = rational(binomial(3 * n + 2, n + 1), 3 * n + 2);
    const series dB = B.derivative();
    const series D = 1 - 3 * times_x(A * A);

    const series TP = 3 * times_x(A1 * A1, 2) / A;
    const series TQ = 2 * A * TP + times_x(A1 * A);
    const series dTP = TP.derivative();
    const series dTQ = TQ.derivative();
    const series RP = (3 * times_x(A1 * TP) + times_x(A1 * A1, 2)) / A;
    const series RQ = 2 * A * RP + 3 * A * TP + times_x(A1 * A);
    const series GP = (3 * times_x(A * A * RP) + 6 * times_x(A1 * A * RP, 2) + 6 * times_x(A * A * TP) +
                       3 * times_x(A1 * A * TP, 2) + 4 * times_x(A1 * A * A, 2) +
                       times_x(A1 * A1 * A, 3) - 3 * times_x(A * TP * TP)) /
                      D;
    const series GQ = 2 * A * GP + 2 * A * RP + 2 * times_x(A1 * RP) + 5 * A * TP + 3 * times_x(A1 * TP) +
                      2 * times_x(A * dTP) + 3 * times_x(A1 * A) + times_x(A1 * A1, 2) +
                      times_x(A2 * A, 2) - TP * TP;

    add("m2_B_equals_A_squared", B - A * A);
    add("m2_cubic_relation", times_x(A.pow(3)) - A + 1);
    add("m2_first_derivative", A1 * D - A.pow(3));
    add("m2_second_derivative", A2 * D * D - 3 * A * A * (A1 + A.pow(3) - times_x(A * A * A1)));
    add("m2_third_derivative",
        A3 * D.pow(3) -
            3 * A *
                (3 * times_x(A.pow(5) * A2, 2) - 4 * times_x(A.pow(3) * A2) + A * A2 -
                 6 * times_x(A.pow(5) * A1) + 10 * A.pow(3) * A1 + 2 * times_x(A * A * A1 * A1) +
                 2 * A1 * A1 + 6 * A.pow(6)));
    add("m2_T_P_rational_form", TP * D - 3 * times_x(A1 * A * A, 2));
    add("m2_T_P_relation", TP - (times_x(A * TQ) + times_x(dB * A, 2) + times_x(B * TP)));
    add("m2_T_Q_derivative",
        dTQ - (2 * A1 * TP + 2 * A * dTP + A1 * A + times_x(A2 * A) + times_x(A1 * A1)));
    add("m2_R_P_rational_form", RP * D - (3 * times_x(A * A * TP) + times_x(A1 * A * A, 2)));
    add("m2_R_P_relation", RP - (times_x(A * RQ) + times_x(B * RP)));
    add("m2_G_P_relation",
        GP - (times_x(A * GQ) + times_x(A1 * RQ, 2) - times_x(A * dTQ, 2) + times_x(B * GP) +
              times_x(B * RP) + times_x(dB * RP, 2) + times_x(B * TP) + times_x(dB * A, 2) -
              times_x(TP * TQ)));
    add("m2_G_P_substituted",
        GP - (3 * times_x(A * A * GP) + 3 * times_x(A * A * RP) + 4 * times_x(A1 * A * RP, 2) +
              times_x(A1 * RQ, 2) + 6 * times_x(A * A * TP) + 3 * times_x(A1 * A * TP, 2) +
              2 * times_x(A * A * dTP, 2) - times_x(A * dTQ, 2) + 5 * times_x(A1 * A * A, 2) +
              times_x(A1 * A1 * A, 3) + times_x(A2 * A * A, 3) - times_x(A * TP * TP) -
              times_x(TP * TQ)));
    add("m2_target_identity", GP - q(1, 12) * (3 * times_x(A3, 3) + 8 * times_x(A2, 2)));
    add("m2_T_P_matches_general", TP - b.T[0]);
    add("m2_T_Q_matches_general", TQ - b.T[1]);
    add("m2_R_P_matches_general", RP - b.R[0]);
    add("m2_R_Q_matches_general", RQ - b.R[1]);
    add("m2_G_P_matches_general", GP - b.G[0]);
    add("m2_G_Q_matches_derived", GQ - b.G[1]);
}

}  // namespace detail

/// Every generating-function identity for one m, each checked through x^N.
/// Series are built three orders deeper so third derivatives stay valid.
inline identity_report check_identities(int m, int N = default_series_order) {
    const series_bundle b = stat_series(m, N + 3);
    identity_report report;
    detail::general_identities(b, N, report);
    if (m == 2) detail::m2_identities(b, N, report);
    return report;
}

/// Series coefficient against the brute-force statistic for one (m, j, n).
struct cross_check_entry {
    int m = 0;
    int j = 0;
    int n = 0;
    std::string statistic;
    rational series_value;
    big_int enumerated;
    bool pass = false;
};

using cross_check_report = std::vector<cross_check_entry>;

inline bool all_pass(const cross_check_report& report) {
    for (const auto& e : report)
        if (!e.pass) return false;
    return true;
}

inline cross_check_report cross_check(const series_bundle& b, const stat_table& table, int j,
                                      int n_max) {
    cross_check_report out;
    const int m = b.m;
    auto push = [&](const char* stat, int n, const rational& s, const big_int& e) {
        out.push_back({m, j, n, stat, s, e, s == rational(e)});
    };
    for (int n = 0; n <= n_max; ++n) {
        const auto& rec = table.at(j, n);
        push("A", n, b.Aj[j][n], rec.A);
        push("T", n, b.T[j][n], rec.T);
        push("R", n, b.R[j][n], rec.R);
        push("G", n, b.G[j][n], rec.G);
    }
    return out;
}

/// Compares [x^n] of A^{(j)}, T_j, R_j, G_j with enumeration for all
/// j in [0, m-1] and n <= n_max.
inline cross_check_report cross_check(int m, int n_max,
                                      std::size_t element_limit = default_element_limit) {
    const series_bundle b = stat_series(m, n_max + 3);
    const stat_table table(m, n_max, element_limit);
    cross_check_report out;
    for (int j = 0; j < m; ++j) {
        auto part = cross_check(b, table, j, n_max);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline cross_check_report cross_check(int m, int j, int n_max,
                                      std::size_t element_limit = default_element_limit) {
    family_id{m, j, 0}.validate();
    const series_bundle b = stat_series(m, n_max + 3);
    const stat_table table(m, n_max, element_limit);
    return cross_check(b, table, j, n_max);
}

}  // namespace abcore
