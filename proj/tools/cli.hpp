#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abcore/abcore.hpp"

namespace abcore::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int max_order = 24;

enum class format { plain, json, csv, dot };

struct command_config {
    std::string subcommand;
    int a = 0;
    int b = 0;
    int m = 0;
    int j = -1;
    int n = -1;
    int order = default_series_order;
    int max_n = 0;
    format fmt = format::plain;
    bool assert_general = false;
    bool as_printed = false;
    bool unsafe_limits = false;

    std::size_t element_limit() const {
        return unsafe_limits ? std::numeric_limits<std::size_t>::max() : default_element_limit;
    }
};

class usage_error : public error {
public:
    using error::error;
};

namespace detail {

using nlohmann::ordered_json;

// Integers that fit in 64 bits are emitted as JSON numbers, anything larger as a string.
inline ordered_json big(const big_int& z) {
    if (z <= std::numeric_limits<long long>::max() && z >= std::numeric_limits<long long>::min())
        return static_cast<long long>(z);
    return z.str();
}

inline std::string csv_field(const big_int& z) { return z.str(); }

inline const char* bool_str(bool v) { return v ? "true" : "false"; }

struct outcome {
    std::string payload;
    int code = exit_ok;
};

inline void require_format(const command_config& cfg, std::initializer_list<format> allowed) {
    for (auto f : allowed)
        if (f == cfg.fmt) return;
    throw usage_error("--format not supported by '" + cfg.subcommand + "'");
}

inline outcome run_cores(const command_config& cfg) {
    require_format(cfg, {format::plain, format::json, format::csv});
    const auto res = armstrong_check(cfg.a, cfg.b, cfg.element_limit());
    const auto cores = cores_via_bijection(cfg.a, cfg.b, cfg.element_limit());
    const bool proved = is_proved_pair(cfg.a, cfg.b);
    const bool asserted = proved || cfg.assert_general;
    std::ostringstream os;
    if (cfg.fmt == format::json) {
        ordered_json j;
        j["a"] = cfg.a;
        j["b"] = cfg.b;
        j["count"] = big(res.count);
        j["total"] = big(res.total);
        j["average"] = to_string(res.average);
        j["rhs"] = to_string(res.rhs);
        j["matches"] = res.matches;
        j["proved_family"] = proved;
        j["asserted"] = asserted;
        ordered_json list = ordered_json::array();
        for (const auto& c : cores) list.push_back(c.parts());
        j["cores"] = std::move(list);
        os << j.dump(2) << "\n";
    } else if (cfg.fmt == format::csv) {
        os << "index,size,parts\n";
        for (std::size_t i = 0; i < cores.size(); ++i) {
            std::string parts;
            for (std::size_t k = 0; k < cores[i].length(); ++k) {
                if (k) parts += ' ';
                parts += std::to_string(cores[i][k]);
            }
            os << i << "," << cores[i].size() << "," << parts << "\n";
        }
    } else {
        os << "(" << cfg.a << "," << cfg.b << ")-cores\n";
        for (const auto& c : cores) os << "  " << c.to_string() << "  size " << c.size() << "\n";
        os << "count    " << res.count << "\n"
           << "total    " << res.total << "\n"
           << "average  " << to_string(res.average) << "\n"
           << "formula  " << to_string(res.rhs) << "\n"
           << "matches  " << bool_str(res.matches) << (asserted ? "" : " (report only)") << "\n";
    }
    return {os.str(), (asserted && !res.matches) ? exit_failed : exit_ok};
}

inline gap_poset poset_for(const command_config& cfg) {
    if (cfg.m > 0) {
        if (cfg.n < 0) throw usage_error("poset: --n is required with --m");
        return family_poset({cfg.m, cfg.j < 0 ? 0 : cfg.j, cfg.n});
    }
    if (cfg.a <= 0 || cfg.b <= 0) throw usage_error("poset: give --a and --b, or --m/--j/--n");
    return gap_poset::of(cfg.a, cfg.b);
}

inline outcome run_poset(const command_config& cfg) {
    require_format(cfg, {format::dot, format::json, format::plain});
    const auto poset = poset_for(cfg);
    if (poset.size() > cfg.element_limit())
        throw enumeration_too_large(poset.size(), cfg.element_limit());
    std::ostringstream os;
    if (cfg.fmt == format::dot) {
        os << to_dot(poset);
    } else if (cfg.fmt == format::json) {
        ordered_json j;
        j["elements"] = std::vector<int>(poset.elements().begin(), poset.elements().end());
        ordered_json covers = ordered_json::array();
        for (const auto& c : poset.covers()) covers.push_back({c.upper, c.lower});
        j["covers"] = std::move(covers);
        os << j.dump(2) << "\n";
    } else {
        os << "elements:";
        for (int p : poset.elements()) os << " " << p;
        os << "\ncovers:";
        for (const auto& c : poset.covers()) os << " " << c.upper << ">" << c.lower;
        os << "\n";
    }
    return {os.str(), exit_ok};
}

inline outcome run_stats(const command_config& cfg) {
    require_format(cfg, {format::plain, format::json, format::csv});
    const stat_table table(cfg.m, cfg.max_n, cfg.element_limit());
    std::ostringstream os;
    if (cfg.fmt == format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& row : table.rows())
            for (const auto& r : row)
                arr.push_back({{"m", r.id.m}, {"j", r.id.j}, {"n", r.id.n}, {"A", big(r.A)},
                               {"T", big(r.T)}, {"R", big(r.R)}, {"G", big(r.G)}});
        os << arr.dump(2) << "\n";
    } else if (cfg.fmt == format::csv) {
        os << "m,j,n,A,T,R,G\n";
        for (const auto& row : table.rows())
            for (const auto& r : row)
                os << r.id.m << "," << r.id.j << "," << r.id.n << "," << csv_field(r.A) << ","
                   << csv_field(r.T) << "," << csv_field(r.R) << "," << csv_field(r.G) << "\n";
    } else {
        for (const auto& row : table.rows())
            for (const auto& r : row)
                os << "m=" << r.id.m << " j=" << r.id.j << " n=" << r.id.n << "  A=" << r.A
                   << " T=" << r.T << " R=" << r.R << " G=" << r.G << "\n";
    }
    return {os.str(), exit_ok};
}

inline outcome run_recursions(const command_config& cfg) {
    require_format(cfg, {format::plain, format::json, format::csv});
    auto report = verify_proof_recursions(cfg.m, cfg.max_n, cfg.element_limit());
    if (!cfg.as_printed)
        std::erase_if(report, [](const recursion_check& e) { return !e.asserted; });
    bool ok = true;
    for (const auto& e : report) ok = ok && e.pass;
    std::ostringstream os;
    if (cfg.fmt == format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& e : report)
            arr.push_back({{"recursion", e.name}, {"m", e.m}, {"n", e.n}, {"lhs", big(e.lhs)},
                           {"rhs", big(e.rhs)}, {"as_printed", !e.asserted}, {"pass", e.pass}});
        os << arr.dump(2) << "\n";
    } else if (cfg.fmt == format::csv) {
        os << "recursion,m,n,lhs,rhs,as_printed,pass\n";
        for (const auto& e : report)
            os << e.name << "," << e.m << "," << e.n << "," << e.lhs << "," << e.rhs << ","
               << bool_str(!e.asserted) << "," << bool_str(e.pass) << "\n";
    } else {
        for (const auto& e : report)
            os << (e.pass ? "PASS " : "FAIL ") << e.name << "  m=" << e.m << " n=" << e.n
               << "  lhs=" << e.lhs << " rhs=" << e.rhs << "\n";
    }
    return {os.str(), ok ? exit_ok : exit_failed};
}

inline outcome run_series_verify(const command_config& cfg) {
    require_format(cfg, {format::plain, format::json, format::csv});
    if (cfg.order < 2) throw usage_error("series-verify: --order must be >= 2");
    if (cfg.order > max_order && !cfg.unsafe_limits)
        throw usage_error("series-verify: --order " + std::to_string(cfg.order) + " exceeds " +
                          std::to_string(max_order) + " (use --unsafe-limits)");
    const auto report = check_identities(cfg.m, cfg.order);
    std::ostringstream os;
    if (cfg.fmt == format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& e : report)
            arr.push_back({{"identity_name", e.name},
                           {"m", e.m},
                           {"effective_order", e.effective_order},
                           {"residual_max_abs", to_string(e.residual_max_abs)},
                           {"pass", e.pass}});
        os << arr.dump(2) << "\n";
    } else if (cfg.fmt == format::csv) {
        os << "identity_name,m,effective_order,residual_max_abs,pass\n";
        for (const auto& e : report)
            os << e.name << "," << e.m << "," << e.effective_order << ","
               << to_string(e.residual_max_abs) << "," << bool_str(e.pass) << "\n";
    } else {
        for (const auto& e : report) {
            os << (e.pass ? "PASS " : "FAIL ") << e.name << "  m=" << e.m
               << " order=" << e.effective_order << " max|residual|=" << to_string(e.residual_max_abs);
            if (e.first_nonzero >= 0) os << " first nonzero at x^" << e.first_nonzero;
            os << "\n";
        }
    }
    return {os.str(), all_pass(report) ? exit_ok : exit_failed};
}

inline outcome run_cross_check(const command_config& cfg) {
    require_format(cfg, {format::plain, format::json, format::csv});
    if (cfg.max_n + 3 > max_order && !cfg.unsafe_limits)
        throw usage_error("cross-check: --max-n too large (use --unsafe-limits)");
    const auto report = cfg.j >= 0 ? cross_check(cfg.m, cfg.j, cfg.max_n, cfg.element_limit())
                                   : cross_check(cfg.m, cfg.max_n, cfg.element_limit());
    std::ostringstream os;
    if (cfg.fmt == format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& e : report)
            arr.push_back({{"m", e.m}, {"j", e.j}, {"n", e.n}, {"statistic", e.statistic},
                           {"series", to_string(e.series_value)}, {"enumerated", big(e.enumerated)},
                           {"pass", e.pass}});
        os << arr.dump(2) << "\n";
    } else if (cfg.fmt == format::csv) {
        os << "m,j,n,statistic,series,enumerated,pass\n";
        for (const auto& e : report)
            os << e.m << "," << e.j << "," << e.n << "," << e.statistic << ","
               << to_string(e.series_value) << "," << e.enumerated << "," << bool_str(e.pass) << "\n";
    } else {
        for (const auto& e : report)
            os << (e.pass ? "PASS " : "FAIL ") << "m=" << e.m << " j=" << e.j << " n=" << e.n << " "
               << e.statistic << "  series=" << to_string(e.series_value)
               << " enumerated=" << e.enumerated << "\n";
    }
    return {os.str(), all_pass(report) ? exit_ok : exit_failed};
}

inline const char* extension(format f) {
    switch (f) {
        case format::json: return "json";
        case format::csv: return "csv";
        case format::dot: return "dot";
        default: return "txt";
    }
}

}  // namespace detail

/// Runs one subcommand. The payload goes to `out`; diagnostics to `err`.
/// When ABCORE_OUTPUT_DIR is set the payload is also written to
/// $ABCORE_OUTPUT_DIR/<subcommand>.<ext>.
inline int run(const command_config& cfg, std::ostream& out, std::ostream& err) {
    try {
        detail::outcome res;
        if (cfg.subcommand == "cores") res = detail::run_cores(cfg);
        else if (cfg.subcommand == "poset") res = detail::run_poset(cfg);
        else if (cfg.subcommand == "stats") res = detail::run_stats(cfg);
        else if (cfg.subcommand == "recursions") res = detail::run_recursions(cfg);
        else if (cfg.subcommand == "series-verify") res = detail::run_series_verify(cfg);
        else if (cfg.subcommand == "cross-check") res = detail::run_cross_check(cfg);
        else throw usage_error("unknown subcommand '" + cfg.subcommand + "'");
        out << res.payload;
        if (const char* dir = std::getenv("ABCORE_OUTPUT_DIR"); dir && *dir) {
            const auto path = std::filesystem::path(dir) /
                              (cfg.subcommand + "." + detail::extension(cfg.fmt));
            std::ofstream file(path);
            if (!file) {
                err << "error: cannot write " << path.string() << "\n";
                return exit_usage;
            }
            file << res.payload;
        }
        return res.code;
    } catch (const non_coprime& e) {
        err << "error: NonCoprime: " << e.what() << "\n";
    } catch (const enumeration_too_large& e) {
        err << "error: EnumerationTooLarge: " << e.what() << " (use --unsafe-limits)\n";
    } catch (const invalid_family& e) {
        err << "error: InvalidFamily: " << e.what() << "\n";
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_usage;
}

/// Parses argv and runs. Exit codes: 0 all checks pass, 1 a check failed,
/// 2 usage or guard error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simultaneous core partitions: enumeration and exact identity checks", "abcore"};
    app.require_subcommand(1);
    command_config cfg;

    const std::map<std::string, format> formats{
        {"plain", format::plain}, {"json", format::json}, {"csv", format::csv}, {"dot", format::dot}};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.fmt, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_flag("--unsafe-limits", cfg.unsafe_limits, "Lift the element and order guards");
    };
    auto positive = CLI::PositiveNumber;

    auto* cores = app.add_subcommand("cores", "List (a,b)-cores and check the average size");
    cores->add_option("--a", cfg.a, "First generator")->required()->check(positive);
    cores->add_option("--b", cfg.b, "Second generator")->required()->check(positive);
    cores->add_flag("--assert-general", cfg.assert_general,
                    "Fail on a mismatch even outside the (k, mk+1) family");

    auto* poset = app.add_subcommand("poset", "Hasse diagram of P_{a,b} or a family poset");
    poset->add_option("--a", cfg.a, "First generator")->check(positive);
    poset->add_option("--b", cfg.b, "Second generator")->check(positive);
    poset->add_option("--m", cfg.m, "Family parameter m")->check(positive);
    poset->add_option("--j", cfg.j, "Family layer index j")->check(CLI::NonNegativeNumber);
    poset->add_option("--n", cfg.n, "Family index n")->check(CLI::NonNegativeNumber);

    auto* stats = app.add_subcommand("stats", "Ideal statistics A, T, R, G over the family grid");
    auto* recursions = app.add_subcommand("recursions", "Check the decomposition recursions");
    recursions->add_flag("--as-printed", cfg.as_printed,
                         "Also evaluate the two displays known to be misprinted");
    auto* cross = app.add_subcommand("cross-check", "Series coefficients against enumeration");
    cross->add_option("--j", cfg.j, "Restrict to one j")->check(CLI::NonNegativeNumber);
    for (auto* sub : {stats, recursions, cross}) {
        sub->add_option("--m", cfg.m, "Family parameter m")->required()->check(positive);
        sub->add_option("--max-n", cfg.max_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
    }

    auto* verify = app.add_subcommand("series-verify", "Generating-function identities");
    verify->add_option("--m", cfg.m, "Family parameter m")->required()->check(positive);
    verify->add_option("--order", cfg.order, "Truncation order N")->check(CLI::NonNegativeNumber);

    for (auto* sub : {cores, poset, stats, recursions, cross, verify}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }
    for (auto* sub : app.get_subcommands()) {
        cfg.subcommand = sub->get_name();
        if (sub->get_option("--format")->count() == 0)
            cfg.fmt = sub == poset ? format::dot : format::plain;
    }
    return run(cfg, out, err);
}

}  // namespace abcore::cli
