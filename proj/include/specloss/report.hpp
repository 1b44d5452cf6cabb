#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "specloss/analysis.hpp"
#include "specloss/cointegration.hpp"
#include "specloss/dataio.hpp"
#include "specloss/ols.hpp"
#include "specloss/unit_root.hpp"

namespace specloss {

/// Table number format: scientific with two decimals below 1e-4, otherwise
/// seven significant digits capped at six decimals. NaN prints as "NA".
inline std::string format_stat(double x) {
    if (std::isnan(x)) return "NA";
    if (std::isinf(x)) return x > 0 ? "Inf" : "-Inf";
    char buf[64];
    const double a = std::fabs(x);
    if (a != 0.0 && a < 1e-4) {
        std::snprintf(buf, sizeof buf, "%.2E", x);
    } else if (a >= 1e7) {
        std::snprintf(buf, sizeof buf, "%.6E", x);
    } else {
        int int_digits = a < 1.0 ? 1 : static_cast<int>(std::floor(std::log10(a))) + 1;
        int decimals = std::min(6, std::max(0, 7 - int_digits));
        std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    }
    return buf;
}

inline std::string format_fixed(double x, int decimals) {
    if (std::isnan(x)) return "NA";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

namespace detail {

inline std::string pad_right(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

inline std::string pad_left(std::string s, std::size_t w) {
    if (s.size() < w) s.insert(0, w - s.size(), ' ');
    return s;
}

inline std::string verdict_text(AdfVerdict v) {
    switch (v) {
        case AdfVerdict::reject_at_1: return "unit root rejected at 1%";
        case AdfVerdict::reject_at_5: return "unit root rejected at 5%";
        case AdfVerdict::reject_at_10: return "unit root rejected at 10%";
        case AdfVerdict::no_reject: return "unit root not rejected";
    }
    return {};
}

inline std::string verdict_key(AdfVerdict v) {
    switch (v) {
        case AdfVerdict::reject_at_1: return "reject_at_1";
        case AdfVerdict::reject_at_5: return "reject_at_5";
        case AdfVerdict::reject_at_10: return "reject_at_10";
        case AdfVerdict::no_reject: return "no_reject";
    }
    return {};
}

inline std::string verdict_key(CointVerdict v) {
    switch (v) {
        case CointVerdict::cointegrated_at_1: return "cointegrated_at_1";
        case CointVerdict::cointegrated_at_5: return "cointegrated_at_5";
        case CointVerdict::cointegrated_at_10: return "cointegrated_at_10";
        case CointVerdict::not_cointegrated: return "not_cointegrated";
    }
    return {};
}

inline std::string verdict_text(CointVerdict v) {
    switch (v) {
        case CointVerdict::cointegrated_at_1: return "cointegrated at the 1% level";
        case CointVerdict::cointegrated_at_5: return "cointegrated at the 5% level";
        case CointVerdict::cointegrated_at_10: return "cointegrated at the 10% level";
        case CointVerdict::not_cointegrated: return "not cointegrated";
    }
    return {};
}

inline void render_adf_body(std::ostream& out, const AdfResult& r, const CriticalValues& cv,
                            bool dm_constants, bool show_prob) {
    out << "Null Hypothesis: " << r.variable << " has a unit root\n";
    out << "Exogenous: Constant\n";
    out << "Lag Length: " << r.chosen_lag;
    if (r.criterion == LagCriterion::fixed)
        out << " (Fixed)\n";
    else
        out << " (Automatic - based on " << criterion_label(r.criterion) << ", maxlag=" << r.max_lag << ")\n";
    out << "Included observations: " << r.effective_obs << "\n\n";
    out << pad_right("", 40) << pad_left("t-Statistic", 12) << pad_left("Prob.*", 10) << '\n';
    out << pad_right("Augmented Dickey-Fuller test statistic", 40) << pad_left(format_stat(r.t_statistic), 12)
        << pad_left(show_prob ? format_fixed(r.p_value, 4) : "", 10) << '\n';
    out << "Test critical values:\n";
    for (auto level : kSignificanceLevels) {
        const double v = cv.at(level);
        out << pad_left(label(level) + " level", 20) << pad_right("", 20)
            << pad_left(dm_constants ? format_fixed(v, 2) : format_stat(v), 12) << '\n';
    }
    out << '\n';
    if (dm_constants)
        out << "Critical values: Davidson-MacKinnon asymptotic residual-test constants (constant term).\n";
    out << "*MacKinnon one-sided p-values.\n";
}

}  // namespace detail

inline void render_adf(std::ostream& out, const AdfResult& r) {
    detail::render_adf_body(out, r, r.critical_values, false, true);
    out << "Verdict: " << detail::verdict_text(r.verdict) << '\n';
}

inline void render_ols(std::ostream& out, const OlsFit& f) {
    using detail::pad_left;
    using detail::pad_right;
    out << "Dependent Variable: " << f.dependent_name << '\n';
    out << "Method: Least Squares\n";
    const auto dates = f.residuals.dates();
    if (!dates.empty()) out << "Sample: " << format_date(dates.front()) << ' ' << format_date(dates.back()) << '\n';
    out << "Included observations: " << f.n_obs << "\n\n";
    out << pad_right("Variable", 20) << pad_left("Coefficient", 14) << pad_left("Std. Error", 14)
        << pad_left("t-Statistic", 14) << pad_left("Prob.", 10) << "\n\n";
    for (const auto& r : f.rows) {
        out << pad_right(r.name, 20) << pad_left(format_stat(r.coefficient), 14)
            << pad_left(format_stat(r.std_error), 14) << pad_left(format_stat(r.t_statistic), 14)
            << pad_left(format_fixed(r.p_value, 4), 10) << '\n';
    }
    out << '\n';
    auto line = [&](const char* l, double lv, const char* r, double rv) {
        out << pad_right(l, 22) << pad_left(format_stat(lv), 12) << "    " << pad_right(r, 24)
            << pad_left(format_stat(rv), 12) << '\n';
    };
    line("R-squared", f.r_squared, "Mean dependent var", f.mean_dep);
    line("Adjusted R-squared", f.adj_r_squared, "S.D. dependent var", f.sd_dep);
    line("S.E. of regression", f.se_of_regression, "Akaike info criterion", f.aic);
    line("Sum squared resid", f.sum_squared_resid, "Schwarz criterion", f.schwarz);
    line("Log likelihood", f.log_likelihood, "Hannan-Quinn criter.", f.hannan_quinn);
    line("F-statistic", f.f_statistic, "Durbin-Watson stat", f.durbin_watson);
    out << pad_right("Prob(F-statistic)", 22) << pad_left(format_fixed(f.f_prob, 6), 12) << '\n';
}

inline void render_coint(std::ostream& out, const CointResult& c) {
    render_ols(out, c.stage1);
    out << "\nADF test results for residuals:\n\n";
    detail::render_adf_body(out, c.residual_test, c.critical_values_dm, true, true);
    out << "Verdict: " << detail::verdict_text(c.verdict) << '\n';
}

inline std::string ladder_summary_name(const std::string& name) { return detail::lower(name); }

/// Pure function of the report: equal reports give byte-identical text.
inline std::string render_text(const AnalysisReport& rep) {
    std::ostringstream out;
    const std::string rule(78, '=');
    out << "Speculative loss analysis\n";
    out << "Data: " << rep.source << ", " << rep.n_obs << " trading days, " << format_date(rep.first_date)
        << " to " << format_date(rep.last_date) << "\n\n";

    out << rule << "\nUnit root testing\n" << rule << "\n\n";
    for (const auto& l : rep.ladders) {
        out << "ADF test results (level):\n\n";
        render_adf(out, l.level);
        out << '\n';
        if (l.difference) {
            out << "ADF test results (first differences):\n\n";
            render_adf(out, *l.difference);
            out << '\n';
        }
    }
    out << "ADF test results - summary:\n\n";
    for (const auto& l : rep.ladders)
        out << detail::pad_right(ladder_summary_name(l.level.variable), 14) << l.classification.describe() << '\n';
    out << '\n';

    out << rule << "\nTesting for cointegration and linear regressions\n" << rule << "\n\n";
    for (const auto& r : rep.regressions) {
        out << r.title << "\n\n";
        render_coint(out, r.coint);
        out << '\n';
        for (const auto& s : r.signs) {
            out << s.variable << ": " << (s.coefficient > 0 ? "positive" : s.coefficient < 0 ? "negative" : "zero")
                << " coefficient ("
                << (s.expected_sign > 0 ? "direct relationship with the dependent variable u"
                                        : "inverse relationship with the dependent variable u")
                << " expected; " << (s.matches() ? "matches" : "does not match") << ")\n";
        }
        out << '\n';
    }

    out << rule << "\nu parameter calculations\n" << rule << "\n\n";
    for (const auto& b : rep.u_blocks) {
        out << (b.variant == UVariant::by_volume ? "U = quantity of stocks involved in trade\n"
                                                 : "U = total amount of deposited stocks\n");
        out << "  Arithmetic mean, kopecks      " << format_stat(b.mean.value) << '\n';
        out << "  Volatility, kopecks           " << format_stat(b.stddev.value) << '\n';
        if (b.constancy) {
            out << "  Constancy threshold, kopecks  " << format_stat(b.constancy->threshold.value) << '\n';
            out << "  Constancy check               " << (b.constancy->passes ? "passes" : "fails") << '\n';
        }
        if (b.break_result) {
            out << "  Mean before " << format_date(rep.break_date) << "       "
                << format_stat(b.break_result->mean_before) << '\n';
            out << "  Mean from " << format_date(rep.break_date) << "         "
                << format_stat(b.break_result->mean_after) << '\n';
            out << "  Ratio after/before            " << format_stat(b.break_result->ratio) << '\n';
        } else {
            out << "  Break analysis skipped: " << b.break_note << '\n';
        }
        out << '\n';
    }
    if (rep.mean_price) out << "Mean price of one stock, rubles  " << format_stat(rep.mean_price->value) << '\n';
    if (rep.coverage) {
        out << "Stocks traded per stock deposited  " << format_stat(rep.coverage->stock_utilization) << '\n';
        out << "Money deposited per ruble of deposited stock value  "
            << format_stat(rep.coverage->money_coverage) << '\n';
    }
    out << '\n' << rule << "\nConclusion\n" << rule << '\n' << rep.verdict << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Machine output: flat (table, field, value) CSV.

class TripleWriter {
public:
    explicit TripleWriter(std::ostream& out) : out_(out) { out_ << "table,field,value\n"; }

    void number(const std::string& table, const std::string& field, double v) {
        out_ << table << ',' << field << ',' << (std::isnan(v) ? std::string("NA") : format_shortest(v)) << '\n';
    }
    void text(const std::string& table, const std::string& field, const std::string& v) {
        out_ << table << ',' << field << ',' << quoted(v) << '\n';
    }

private:
    static std::string quoted(const std::string& v) {
        if (v.find_first_of(",\"\n") == std::string::npos) return v;
        std::string q = "\"";
        for (char c : v) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + '"';
    }

    std::ostream& out_;
};

inline void emit_adf(TripleWriter& w, const std::string& table, const AdfResult& r) {
    w.number(table, "t_statistic", r.t_statistic);
    w.number(table, "p_value", r.p_value);
    w.number(table, "lag", r.chosen_lag);
    w.number(table, "max_lag", r.max_lag);
    w.number(table, "included_observations", static_cast<double>(r.effective_obs));
    w.number(table, "cv_1", r.critical_values.one);
    w.number(table, "cv_5", r.critical_values.five);
    w.number(table, "cv_10", r.critical_values.ten);
    w.text(table, "verdict", detail::verdict_key(r.verdict));
}

inline void emit_ols(TripleWriter& w, const std::string& table, const OlsFit& f) {
    w.text(table, "dependent", f.dependent_name);
    for (const auto& r : f.rows) {
        w.number(table, "coef:" + r.name, r.coefficient);
        w.number(table, "se:" + r.name, r.std_error);
        w.number(table, "t:" + r.name, r.t_statistic);
        w.number(table, "p:" + r.name, r.p_value);
    }
    w.number(table, "r_squared", f.r_squared);
    w.number(table, "adj_r_squared", f.adj_r_squared);
    w.number(table, "se_of_regression", f.se_of_regression);
    w.number(table, "sum_squared_resid", f.sum_squared_resid);
    w.number(table, "log_likelihood", f.log_likelihood);
    w.number(table, "f_statistic", f.f_statistic);
    w.number(table, "f_prob", f.f_prob);
    w.number(table, "mean_dep", f.mean_dep);
    w.number(table, "sd_dep", f.sd_dep);
    w.number(table, "aic", f.aic);
    w.number(table, "schwarz", f.schwarz);
    w.number(table, "hannan_quinn", f.hannan_quinn);
    w.number(table, "durbin_watson", f.durbin_watson);
    w.number(table, "n_obs", static_cast<double>(f.n_obs));
}

inline void emit_coint(TripleWriter& w, const std::string& table, const CointResult& c) {
    emit_ols(w, "ols:" + table, c.stage1);
    emit_adf(w, "resid_adf:" + table, c.residual_test);
    w.number("coint:" + table, "dm_cv_1", c.critical_values_dm.one);
    w.number("coint:" + table, "dm_cv_5", c.critical_values_dm.five);
    w.number("coint:" + table, "dm_cv_10", c.critical_values_dm.ten);
    w.text("coint:" + table, "verdict", detail::verdict_key(c.verdict));
}

inline std::string render_csv(const AnalysisReport& rep) {
    std::ostringstream out;
    TripleWriter w(out);
    w.text("data", "source", rep.source);
    w.number("data", "n_obs", static_cast<double>(rep.n_obs));
    for (const auto& l : rep.ladders) {
        emit_adf(w, "adf:" + l.level.variable, l.level);
        if (l.difference) emit_adf(w, "adf:" + l.difference->variable, *l.difference);
        w.text("ladder:" + l.level.variable, "classification", l.classification.describe());
    }
    for (std::size_t i = 0; i < rep.regressions.size(); ++i) {
        const auto& r = rep.regressions[i];
        const auto name = "regression" + std::to_string(i + 1);
        emit_coint(w, name, r.coint);
        for (const auto& s : r.signs) w.text("signs:" + name, s.variable, s.matches() ? "matches" : "mismatch");
    }
    for (const auto& b : rep.u_blocks) {
        const std::string t = b.variant == UVariant::by_volume ? "u:by_volume" : "u:by_deposit";
        w.number(t, "mean_kopecks", b.mean.value);
        w.number(t, "stddev_kopecks", b.stddev.value);
        if (b.constancy) {
            w.number(t, "threshold_kopecks", b.constancy->threshold.value);
            w.text(t, "constancy", b.constancy->passes ? "passes" : "fails");
        }
        if (b.break_result) {
            w.number(t, "mean_before_break", b.break_result->mean_before);
            w.number(t, "mean_after_break", b.break_result->mean_after);
            w.number(t, "break_ratio", b.break_result->ratio);
        }
    }
    if (rep.mean_price) w.number("market", "mean_price_rub", rep.mean_price->value);
    if (rep.coverage) {
        w.number("market", "stock_utilization", rep.coverage->stock_utilization);
        w.number("market", "money_coverage", rep.coverage->money_coverage);
    }
    return out.str();
}

inline std::string render(const AnalysisReport& rep, OutputFormat fmt) {
    return fmt == OutputFormat::csv ? render_csv(rep) : render_text(rep);
}

}  // namespace specloss
