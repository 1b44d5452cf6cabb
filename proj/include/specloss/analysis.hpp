#pragma once

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "specloss/cointegration.hpp"
#include "specloss/dataio.hpp"
#include "specloss/market_model.hpp"
#include "specloss/synth.hpp"
#include "specloss/unit_root.hpp"

namespace specloss {

/// Variable names of the six analysed series, in report order.
inline constexpr std::string_view kUSmallVol = "U_SMALL_VOL";
inline constexpr std::string_view kUSmallDep = "U_SMALL_DEP";
inline constexpr std::string_view kInvest = "I";
inline constexpr std::string_view kRate = "R";
inline constexpr std::string_view kUBigVol = "U_BIG_VOL";
inline constexpr std::string_view kUBigDep = "U_BIG_DEP";

/// Builds the six model variables from market days. u is converted from
/// kopecks with cfg.u_scale; I and R are multiplied by their scalings.
inline std::vector<NamedSeries> model_variables(std::span<const MarketDay> days, const RunConfig& cfg) {
    const auto u_vol = u_series(days, UVariant::by_volume);
    const auto u_dep = u_series(days, UVariant::by_deposit);
    std::vector<Date> dates(u_vol.dates().begin(), u_vol.dates().end());
    auto column = [&](auto member, double scale) {
        std::vector<double> v;
        v.reserve(days.size());
        for (const auto& d : days) v.push_back(d.*member * scale);
        return TimeSeries(dates, std::move(v));
    };
    const double u = cfg.u_scale;
    return {
        {std::string(kUSmallVol), u_vol.transform([u](double x) { return x * u; }, "")},
        {std::string(kUSmallDep), u_dep.transform([u](double x) { return x * u; }, "")},
        {std::string(kInvest), column(&MarketDay::invest_mrub, cfg.i_scale)},
        {std::string(kRate), column(&MarketDay::rate_pct, cfg.r_scale)},
        {std::string(kUBigVol), column(&MarketDay::u_big_vol, 1.0)},
        {std::string(kUBigDep), column(&MarketDay::u_big_dep, 1.0)},
    };
}

inline const NamedSeries& find_variable(std::span<const NamedSeries> vars, std::string_view name) {
    for (const auto& v : vars)
        if (detail::lower(v.name) == detail::lower(name)) return v;
    throw InvalidArgument("unknown variable '" + std::string(name) + "'");
}

/// Regression of u on (C, U, R, I) in the given variant.
inline RegressionSpec model_regression(std::span<const NamedSeries> vars, UVariant variant) {
    const bool vol = variant == UVariant::by_volume;
    RegressionSpec spec;
    spec.dependent = find_variable(vars, vol ? kUSmallVol : kUSmallDep);
    spec.regressors = {find_variable(vars, vol ? kUBigVol : kUBigDep), find_variable(vars, kRate),
                       find_variable(vars, kInvest)};
    return spec;
}

struct SignCheck {
    std::string variable;
    double coefficient = 0.0;
    int expected_sign = 0;
    bool matches() const { return (coefficient > 0.0 ? 1 : coefficient < 0.0 ? -1 : 0) == expected_sign; }
};

struct RegressionBlock {
    std::string title;
    std::string residual_name;
    CointResult coint;
    std::vector<SignCheck> signs;

    bool signs_match() const {
        return std::ranges::all_of(signs, [](const auto& s) { return s.matches(); });
    }
};

struct UBlock {
    UVariant variant = UVariant::by_volume;
    Kopecks mean;
    Kopecks stddev;
    std::optional<ConstancyCheck> constancy;
    std::optional<BreakAnalysis> break_result;
    /// Why break_result is absent.
    std::string break_note;
};

struct AnalysisReport {
    std::string source;
    std::size_t n_obs = 0;
    Date first_date;
    Date last_date;
    Date break_date;
    int max_lag = 5;
    std::vector<StationarityLadder> ladders;
    std::vector<RegressionBlock> regressions;
    std::vector<UBlock> u_blocks;
    std::optional<Rubles> mean_price;
    std::optional<CoverageRatios> coverage;
    std::string verdict;
};

inline std::vector<SignCheck> expected_signs(const OlsFit& f, const std::string& u_big) {
    return {{std::string(kRate), f.row(std::string(kRate)).coefficient, +1},
            {std::string(kInvest), f.row(std::string(kInvest)).coefficient, +1},
            {u_big, f.row(u_big).coefficient, -1}};
}

/// Full analysis of a validated dataset: unit-root ladders on all six
/// variables, both cointegrating regressions, and the descriptive u block.
inline AnalysisReport analyze_days(std::span<const MarketDay> days, const RunConfig& cfg, std::string source) {
    if (days.empty()) throw InvalidArgument("dataset is empty");
    AnalysisReport rep;
    rep.source = std::move(source);
    rep.n_obs = days.size();
    rep.first_date = days.front().date;
    rep.last_date = days.back().date;
    rep.break_date = cfg.break_date;
    rep.max_lag = cfg.max_lag;

    const auto vars = model_variables(days, cfg);
    AdfSpec adf;
    adf.max_lag = cfg.max_lag;
    adf.criterion = cfg.criterion;

    // The six ladders are independent; results are joined in variable order.
    std::vector<std::future<StationarityLadder>> pending;
    for (const auto& v : vars)
        pending.push_back(std::async(std::launch::async, [&v, adf] {
            return stationarity_ladder(v.series, adf, v.name);
        }));
    for (auto& f : pending) rep.ladders.push_back(f.get());

    const struct {
        UVariant variant;
        const char* title;
        const char* resid;
    } regs[] = {{UVariant::by_volume, "Regression 1: U is the quantity of stocks involved in deals", "RESID1"},
                {UVariant::by_deposit, "Regression 2: U is the quantity of all deposited stocks", "RESID2"}};
    for (const auto& r : regs) {
        RegressionBlock block;
        block.title = r.title;
        block.residual_name = r.resid;
        const auto spec = model_regression(vars, r.variant);
        block.coint = engle_granger(spec, adf, r.resid);
        block.signs = expected_signs(block.coint.stage1, spec.regressors.front().name);
        rep.regressions.push_back(std::move(block));
    }

    rep.mean_price = average_mean_price(days);
    for (auto variant : {UVariant::by_volume, UVariant::by_deposit}) {
        const auto u = u_series(days, variant);
        UBlock b;
        b.variant = variant;
        b.mean = {mean(u)};
        b.stddev = {stddev(u)};
        if (rep.mean_price && rep.mean_price->value > 0.0) b.constancy = constancy_check(u, *rep.mean_price);
        try {
            b.break_result = break_analysis(u, cfg.break_date);
        } catch (const InvalidArgument& e) {
            b.break_note = e.what();
        }
        rep.u_blocks.push_back(std::move(b));
    }
    if (rep.mean_price) rep.coverage = coverage_ratios(days);

    const bool all_coint = std::ranges::all_of(rep.regressions, [](const auto& r) {
        return r.coint.verdict != CointVerdict::not_cointegrated;
    });
    const bool all_signs = std::ranges::all_of(rep.regressions, [](const auto& r) { return r.signs_match(); });
    if (all_coint && all_signs)
        rep.verdict = "Both regressions are cointegrated and their coefficient signs agree with u = I*R/(365*U).";
    else if (!all_coint)
        rep.verdict = "At least one regression is not cointegrated; its coefficients are not interpretable.";
    else
        rep.verdict = "Both regressions are cointegrated but the coefficient signs contradict u = I*R/(365*U).";
    return rep;
}

inline std::vector<MarketDay> load_days(const RunConfig& cfg, std::string* source = nullptr) {
    if (cfg.input_path) {
        if (source) *source = "file " + *cfg.input_path;
        return load_market_csv(*cfg.input_path);
    }
    SynthConfig sc;
    sc.seed = *cfg.synth_seed;
    sc.n_days = cfg.synth_days;
    if (source) *source = "synthetic seed " + std::to_string(sc.seed);
    return gen_market_days(sc);
}

inline AnalysisReport analyze(const RunConfig& cfg) {
    cfg.validate();
    std::string source;
    const auto days = load_days(cfg, &source);
    return analyze_days(days, cfg, std::move(source));
}

}  // namespace specloss
