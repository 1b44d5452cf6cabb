#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "specloss/distributions.hpp"
#include "specloss/error.hpp"
#include "specloss/table_data.hpp"

namespace specloss {

/// Deterministic terms in a Dickey-Fuller type regression.
enum class Deterministics { none, constant, constant_trend };

enum class SignificanceLevel { one, five, ten };

inline constexpr std::array kSignificanceLevels = {SignificanceLevel::one, SignificanceLevel::five,
                                                   SignificanceLevel::ten};

inline double fraction(SignificanceLevel level) {
    switch (level) {
        case SignificanceLevel::one: return 0.01;
        case SignificanceLevel::five: return 0.05;
        case SignificanceLevel::ten: return 0.10;
    }
    return 0.0;
}

inline std::string label(SignificanceLevel level) {
    switch (level) {
        case SignificanceLevel::one: return "1%";
        case SignificanceLevel::five: return "5%";
        case SignificanceLevel::ten: return "10%";
    }
    return "?";
}

struct CriticalValues {
    double one = 0.0;
    double five = 0.0;
    double ten = 0.0;

    double at(SignificanceLevel level) const {
        switch (level) {
            case SignificanceLevel::one: return one;
            case SignificanceLevel::five: return five;
            case SignificanceLevel::ten: return ten;
        }
        return 0.0;
    }
};

namespace tables {

/// Whitespace-separated rows of a `specloss-table v1` file; '#' starts a comment line.
struct Row {
    std::string key;
    std::vector<double> fields;
};

inline constexpr std::string_view kTableFormatLine = "# format: specloss-table v1";

inline std::vector<Row> parse_table(std::string_view text) {
    if (!text.starts_with(kTableFormatLine))
        throw ParseError(1, "coefficient table lacks the '" + std::string(kTableFormatLine) + "' line");
    std::vector<Row> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;

        Row row;
        bool first = true;
        while (!line.empty()) {
            auto start = line.find_first_not_of(" \t\r");
            if (start == std::string_view::npos) break;
            line.remove_prefix(start);
            auto end = std::min(line.find_first_of(" \t\r"), line.size());
            auto tok = line.substr(0, end);
            line.remove_prefix(end);
            if (first) {
                row.key = std::string(tok);
                first = false;
                continue;
            }
            double v = 0.0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                throw ParseError(line_no, "bad number '" + std::string(tok) + "' in coefficient table");
            row.fields.push_back(v);
        }
        if (!first) rows.push_back(std::move(row));
    }
    return rows;
}

struct TauSurface {
    int n_variables;
    double level;
    std::array<double, 4> beta;
};

struct TauPvalueSurface {
    int n_variables;
    double tau_min, tau_star, tau_max;
    std::array<double, 3> small;
    std::array<double, 4> large;
};

struct CointRow {
    int n_variables;
    CriticalValues cv;
};

inline const std::vector<TauSurface>& tau_critical_surfaces() {
    static const std::vector<TauSurface> surfaces = [] {
        std::vector<TauSurface> out;
        for (const auto& r : parse_table(kTauCriticalTable)) {
            if (r.key != "c" || r.fields.size() != 6)
                throw ParseError(0, "malformed tau critical-value row");
            out.push_back({static_cast<int>(r.fields[0]), r.fields[1],
                           {r.fields[2], r.fields[3], r.fields[4], r.fields[5]}});
        }
        return out;
    }();
    return surfaces;
}

inline const std::vector<TauPvalueSurface>& tau_pvalue_surfaces() {
    static const std::vector<TauPvalueSurface> surfaces = [] {
        std::vector<TauPvalueSurface> out;
        for (const auto& r : parse_table(kTauPvalueTable)) {
            if (r.key != "c" || r.fields.size() != 11)
                throw ParseError(0, "malformed tau p-value row");
            const auto& f = r.fields;
            out.push_back({static_cast<int>(f[0]), f[1], f[2], f[3], {f[4], f[5], f[6]},
                           {f[7], f[8], f[9], f[10]}});
        }
        return out;
    }();
    return surfaces;
}

inline const std::vector<CointRow>& coint_critical_rows() {
    static const std::vector<CointRow> rows = [] {
        std::vector<CointRow> out;
        for (const auto& r : parse_table(kCointCriticalTable)) {
            if (r.key != "c" || r.fields.size() != 4)
                throw ParseError(0, "malformed cointegration critical-value row");
            out.push_back({static_cast<int>(r.fields[0]), {r.fields[1], r.fields[2], r.fields[3]}});
        }
        return out;
    }();
    return rows;
}

}  // namespace tables

namespace detail {
inline void require_constant_case(Deterministics det) {
    if (det != Deterministics::constant)
        throw UnsupportedConfiguration("only the constant-only Dickey-Fuller case is tabulated");
}
}  // namespace detail

/// Finite-sample MacKinnon critical value for `t_eff` regression observations.
inline double mackinnon_critical_value(SignificanceLevel level, int n_variables, Deterministics det,
                                       double t_eff) {
    detail::require_constant_case(det);
    if (!(t_eff > 0.0)) throw InvalidArgument("effective sample size must be positive");
    for (const auto& s : tables::tau_critical_surfaces()) {
        if (s.n_variables == n_variables && s.level == fraction(level)) {
            const double inv = 1.0 / t_eff;
            return s.beta[0] + inv * (s.beta[1] + inv * (s.beta[2] + inv * s.beta[3]));
        }
    }
    throw UnsupportedConfiguration("no critical-value surface for " + std::to_string(n_variables) +
                                   " variables");
}

inline CriticalValues mackinnon_critical_values(int n_variables, Deterministics det, double t_eff) {
    return {mackinnon_critical_value(SignificanceLevel::one, n_variables, det, t_eff),
            mackinnon_critical_value(SignificanceLevel::five, n_variables, det, t_eff),
            mackinnon_critical_value(SignificanceLevel::ten, n_variables, det, t_eff)};
}

inline constexpr double kMinPvalue = 1e-6;
inline constexpr double kMaxPvalue = 0.9999;

/// One-sided MacKinnon p-value of a tau statistic, clamped to [1e-6, 0.9999].
inline double mackinnon_pvalue(double t_stat, int n_variables, Deterministics det) {
    detail::require_constant_case(det);
    const auto& surfaces = tables::tau_pvalue_surfaces();
    auto it = std::find_if(surfaces.begin(), surfaces.end(),
                           [&](const auto& s) { return s.n_variables == n_variables; });
    if (it == surfaces.end())
        throw UnsupportedConfiguration("no p-value surface for " + std::to_string(n_variables) +
                                       " variables");
    double p = 0.0;
    if (std::isnan(t_stat)) return t_stat;
    if (t_stat > it->tau_max) {
        p = 1.0;
    } else if (t_stat < it->tau_min) {
        p = 0.0;
    } else if (t_stat <= it->tau_star) {
        const auto& g = it->small;
        p = normal_cdf(g[0] + t_stat * (g[1] + t_stat * g[2]));
    } else {
        const auto& g = it->large;
        p = normal_cdf(g[0] + t_stat * (g[1] + t_stat * (g[2] + t_stat * g[3])));
    }
    return std::clamp(p, kMinPvalue, kMaxPvalue);
}

/// Davidson-MacKinnon asymptotic residual-test critical value, constant term.
inline double dm_critical_value(int n_variables, SignificanceLevel level) {
    for (const auto& r : tables::coint_critical_rows())
        if (r.n_variables == n_variables) return r.cv.at(level);
    throw UnsupportedConfiguration("cointegration critical values cover 2..6 variables, got " +
                                   std::to_string(n_variables));
}

inline CriticalValues dm_critical_values(int n_variables) {
    return {dm_critical_value(n_variables, SignificanceLevel::one),
            dm_critical_value(n_variables, SignificanceLevel::five),
            dm_critical_value(n_variables, SignificanceLevel::ten)};
}

}  // namespace specloss
