#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "specloss/critical_values.hpp"
#include "specloss/error.hpp"
#include "specloss/ols.hpp"
#include "specloss/series.hpp"

namespace specloss {

enum class LagCriterion { schwarz, akaike, hannan_quinn, fixed };

inline std::string criterion_label(LagCriterion c) {
    switch (c) {
        case LagCriterion::schwarz: return "SIC";
        case LagCriterion::akaike: return "AIC";
        case LagCriterion::hannan_quinn: return "HQ";
        case LagCriterion::fixed: return "fixed";
    }
    return "?";
}

struct AdfSpec {
    Deterministics deterministics = Deterministics::constant;
    int max_lag = 5;
    LagCriterion criterion = LagCriterion::schwarz;
    /// Used only when criterion == fixed.
    int fixed_lag = 0;

    static AdfSpec fixed(int lag) { return {Deterministics::constant, lag, LagCriterion::fixed, lag}; }

    void validate() const {
        if (max_lag < 0) throw InvalidArgument("max_lag must be nonnegative");
        if (criterion == LagCriterion::fixed && (fixed_lag < 0 || fixed_lag > max_lag))
            throw InvalidArgument("fixed lag must lie in 0..max_lag");
        detail::require_constant_case(deterministics);
    }
};

enum class AdfVerdict { reject_at_1, reject_at_5, reject_at_10, no_reject };

/// Strongest level at which `t_stat` falls below the critical value.
inline AdfVerdict classify(double t_stat, const CriticalValues& cv) {
    if (t_stat < cv.one) return AdfVerdict::reject_at_1;
    if (t_stat < cv.five) return AdfVerdict::reject_at_5;
    if (t_stat < cv.ten) return AdfVerdict::reject_at_10;
    return AdfVerdict::no_reject;
}

/// True when the verdict rejects at `level` or at any stricter level.
inline bool rejects_at(AdfVerdict v, SignificanceLevel level) {
    switch (level) {
        case SignificanceLevel::one: return v == AdfVerdict::reject_at_1;
        case SignificanceLevel::five:
            return v == AdfVerdict::reject_at_1 || v == AdfVerdict::reject_at_5;
        case SignificanceLevel::ten: return v != AdfVerdict::no_reject;
    }
    return false;
}

inline std::optional<SignificanceLevel> strongest_level(AdfVerdict v) {
    switch (v) {
        case AdfVerdict::reject_at_1: return SignificanceLevel::one;
        case AdfVerdict::reject_at_5: return SignificanceLevel::five;
        case AdfVerdict::reject_at_10: return SignificanceLevel::ten;
        case AdfVerdict::no_reject: return std::nullopt;
    }
    return std::nullopt;
}

struct AdfResult {
    std::string variable;
    double t_statistic = 0.0;
    int chosen_lag = 0;
    int max_lag = 0;
    LagCriterion criterion = LagCriterion::schwarz;
    std::size_t effective_obs = 0;
    CriticalValues critical_values;
    double p_value = 0.0;
    AdfVerdict verdict = AdfVerdict::no_reject;
    OlsFit regression;
};

namespace detail {

/// Test regression on observations t = first..N-1 (0-based levels index).
inline OlsFit adf_regression_from(const TimeSeries& y, const std::string& name, int lag,
                                  std::size_t first) {
    const auto v = y.values();
    const std::size_t n = v.size();
    const std::size_t params = static_cast<std::size_t>(lag) + 2;
    if (n < first + params + 1)
        throw InsufficientData("ADF regression with lag " + std::to_string(lag) + " needs more than " +
                               std::to_string(n) + " observations of '" + name + "'");

    const std::size_t obs = n - first;
    const auto all_dates = y.dates();
    std::vector<Date> dates(all_dates.begin() + static_cast<std::ptrdiff_t>(first), all_dates.end());
    std::vector<double> dy(obs), ylag(obs);
    std::vector<std::vector<double>> dlags(static_cast<std::size_t>(lag), std::vector<double>(obs));
    for (std::size_t i = 0; i < obs; ++i) {
        const std::size_t t = first + i;
        dy[i] = v[t] - v[t - 1];
        ylag[i] = v[t - 1];
        for (int j = 1; j <= lag; ++j) dlags[j - 1][i] = v[t - j] - v[t - j - 1];
    }

    RegressionSpec spec;
    spec.dependent = {"D(" + name + ")", TimeSeries(dates, std::move(dy))};
    spec.regressors.push_back({name + "(-1)", TimeSeries(dates, std::move(ylag))});
    for (int j = 1; j <= lag; ++j)
        spec.regressors.push_back({"D(" + name + "(-" + std::to_string(j) + "))",
                                   TimeSeries(dates, std::move(dlags[j - 1]))});
    spec.include_constant = true;
    spec.constant_position = RegressionSpec::ConstantPosition::last;
    return fit(spec);
}

inline double criterion_value(const OlsFit& f, LagCriterion c) {
    switch (c) {
        case LagCriterion::akaike: return f.aic;
        case LagCriterion::hannan_quinn: return f.hannan_quinn;
        default: return f.schwarz;
    }
}

}  // namespace detail

/// Fits D(y)_t = gamma * y_{t-1} + sum_i phi_i D(y)_{t-i} + c on the longest
/// sample the lag allows (N - 1 - lag observations). The ADF statistic is the
/// t-statistic of the first row.
inline OlsFit adf_regression(const TimeSeries& y, int lag, const std::string& name = "Y") {
    if (lag < 0) throw InvalidArgument("ADF lag must be nonnegative");
    return detail::adf_regression_from(y, name, lag, static_cast<std::size_t>(lag) + 1);
}

/// Lag in 0..max_lag minimising the information criterion, every candidate
/// fitted on the sample trimmed for max_lag. Ties go to the smaller lag.
inline int select_lag(const TimeSeries& y, int max_lag, LagCriterion criterion = LagCriterion::schwarz,
                      const std::string& name = "Y") {
    if (max_lag < 0) throw InvalidArgument("max_lag must be nonnegative");
    if (criterion == LagCriterion::fixed) throw InvalidArgument("fixed lag needs no selection");
    const std::size_t first = static_cast<std::size_t>(max_lag) + 1;
    // Insufficient data for the largest candidate surfaces before any fitting.
    if (y.size() < first + static_cast<std::size_t>(max_lag) + 3)
        throw InsufficientData("series '" + name + "' too short for max_lag " + std::to_string(max_lag));
    int best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (int lag = 0; lag <= max_lag; ++lag) {
        const double value =
            detail::criterion_value(detail::adf_regression_from(y, name, lag, first), criterion);
        if (value < best_value) {
            best_value = value;
            best = lag;
        }
    }
    return best;
}

/// Augmented Dickey-Fuller test with MacKinnon critical values and p-value.
inline AdfResult adf_test(const TimeSeries& y, const AdfSpec& spec = {}, const std::string& name = "Y") {
    spec.validate();
    AdfResult out;
    out.variable = name;
    out.max_lag = spec.max_lag;
    out.criterion = spec.criterion;
    out.chosen_lag = spec.criterion == LagCriterion::fixed ? spec.fixed_lag
                                                           : select_lag(y, spec.max_lag, spec.criterion, name);
    out.regression = adf_regression(y, out.chosen_lag, name);
    out.t_statistic = out.regression.rows.front().t_statistic;
    out.effective_obs = out.regression.n_obs;
    out.critical_values = mackinnon_critical_values(1, spec.deterministics,
                                                    static_cast<double>(out.effective_obs));
    out.p_value = mackinnon_pvalue(out.t_statistic, 1, spec.deterministics);
    out.verdict = classify(out.t_statistic, out.critical_values);
    return out;
}

/// How far the series had to be differenced before the test rejected at 5%.
struct Classification {
    enum class Order { level, first_difference, neither } order = Order::neither;
    /// Strongest rejection level; for `neither` the 5% level that failed.
    SignificanceLevel level = SignificanceLevel::five;

    std::string describe() const {
        switch (order) {
            case Order::level:
                return "Variable is stationary at the " + label(level) + " level of significance";
            case Order::first_difference:
                return "Variable is stationary in first differences at the " + label(level) +
                       " level of significance";
            case Order::neither:
                return "Variable is not stationary in levels or first differences at the 5% level of "
                       "significance";
        }
        return {};
    }

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// Level verdict first; differences are consulted only when the level fails at 5%.
inline Classification classify_ladder(AdfVerdict level, std::optional<AdfVerdict> difference) {
    if (rejects_at(level, SignificanceLevel::five))
        return {Classification::Order::level, *strongest_level(level)};
    if (difference && rejects_at(*difference, SignificanceLevel::five))
        return {Classification::Order::first_difference, *strongest_level(*difference)};
    return {};
}

struct StationarityLadder {
    AdfResult level;
    std::optional<AdfResult> difference;
    Classification classification;
};

inline StationarityLadder stationarity_ladder(const TimeSeries& y, const AdfSpec& spec = {},
                                              const std::string& name = "Y") {
    StationarityLadder out;
    out.level = adf_test(y, spec, name);
    if (!rejects_at(out.level.verdict, SignificanceLevel::five))
        out.difference = adf_test(diff(y, 1), spec, "D(" + name + ")");
    out.classification = classify_ladder(
        out.level.verdict, out.difference ? std::optional(out.difference->verdict) : std::nullopt);
    return out;
}

}  // namespace specloss
