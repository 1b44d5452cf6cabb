#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specloss/error.hpp"
#include "specloss/series.hpp"

namespace specloss {

/// Money amount in rubles.
struct Rubles {
    double value = 0.0;
};

/// Money amount in kopecks (1/100 ruble).
struct Kopecks {
    double value = 0.0;
};

inline constexpr double kKopecksPerRuble = 100.0;
inline constexpr double kRublesPerMillion = 1e6;
/// Million rubles -> kopecks.
inline constexpr double kKopecksPerMillionRubles = kRublesPerMillion * kKopecksPerRuble;
inline constexpr double kDaysPerYear = 365.0;

inline Kopecks to_kopecks(Rubles r) { return {r.value * kKopecksPerRuble}; }
inline Rubles to_rubles(Kopecks k) { return {k.value / kKopecksPerRuble}; }

/// One trading day. Money in million rubles, rate in percent per annum,
/// stock counts in pieces.
struct MarketDay {
    Date date;
    double invest_mrub = 0.0;
    double rate_pct = 0.0;
    double u_big_vol = 0.0;
    double u_big_dep = 0.0;
    std::optional<double> mean_price_rub;

    void validate() const {
        const auto when = format_date(date);
        if (!(invest_mrub >= 0.0)) throw ValidationError(when + ": deposited money must be nonnegative");
        if (!(rate_pct >= 0.0)) throw ValidationError(when + ": interbank rate must be nonnegative");
        if (!(u_big_vol >= 0.0)) throw ValidationError(when + ": traded stock count must be nonnegative");
        if (!(u_big_dep >= u_big_vol))
            throw ValidationError(when + ": traded stocks exceed deposited stocks");
        if (mean_price_rub && !(*mean_price_rub >= 0.0))
            throw ValidationError(when + ": mean stock price must be nonnegative");
    }

    friend bool operator==(const MarketDay&, const MarketDay&) = default;
};

/// Which stock count stands in for U.
enum class UVariant { by_volume, by_deposit };

inline double stock_count(const MarketDay& d, UVariant v) {
    return v == UVariant::by_volume ? d.u_big_vol : d.u_big_dep;
}

/// Largest daily loss a dealer accepts: I * R / 365, R as a fraction.
inline double daily_loss_limit(double invest, double rate_fraction) {
    if (!(invest >= 0.0) || !(rate_fraction >= 0.0))
        throw InvalidArgument("investment and rate must be nonnegative");
    return invest * rate_fraction / kDaysPerYear;
}

/// Mean loss per deal per stock: daily_loss_limit(I, R) / U.
inline double mean_loss_per_stock(double invest, double rate_fraction, double u_big) {
    if (!(u_big >= 0.0)) throw InvalidArgument("stock count must be nonnegative");
    if (u_big == 0.0) throw DivisionDomainError("stock count is zero");
    return daily_loss_limit(invest, rate_fraction) / u_big;
}

struct LossFigures {
    Rubles l_daily;
    Kopecks u_small;
    UVariant variant = UVariant::by_volume;
};

/// Every unit conversion between raw market records and u lives here.
inline LossFigures loss_figures(const MarketDay& day, UVariant variant) {
    const double u_big = stock_count(day, variant);
    if (u_big == 0.0)
        throw DivisionDomainError(format_date(day.date) + ": stock count U is zero");
    const double rate_fraction = day.rate_pct / 100.0;
    const double l_rub = daily_loss_limit(day.invest_mrub * kRublesPerMillion, rate_fraction);
    const double u_kop =
        mean_loss_per_stock(day.invest_mrub * kKopecksPerMillionRubles, rate_fraction, u_big);
    return {{l_rub}, {u_kop}, variant};
}

/// Daily u in kopecks per stock.
inline TimeSeries u_series(std::span<const MarketDay> days, UVariant variant) {
    std::vector<Date> dates;
    std::vector<double> values;
    dates.reserve(days.size());
    values.reserve(days.size());
    for (const auto& d : days) {
        d.validate();
        dates.push_back(d.date);
        values.push_back(loss_figures(d, variant).u_small.value);
    }
    return {std::move(dates), std::move(values), "kopecks"};
}

struct ConstancyCheck {
    Kopecks mean;
    Kopecks stddev;
    Kopecks threshold;
    bool passes = false;
};

/// u counts as constant when its sample standard deviation is below one
/// hundredth of the mean stock price.
inline ConstancyCheck constancy_check(const TimeSeries& u_kopecks, Rubles mean_price) {
    if (!(mean_price.value > 0.0)) throw InvalidArgument("mean stock price must be positive");
    ConstancyCheck out;
    out.mean = {mean(u_kopecks)};
    out.stddev = {stddev(u_kopecks)};
    out.threshold = {to_kopecks(mean_price).value / 100.0};
    out.passes = out.stddev.value < out.threshold.value;
    return out;
}

struct BreakAnalysis {
    double mean_before = 0.0;
    double mean_after = 0.0;
    double ratio = 0.0;
    std::size_t n_before = 0;
    std::size_t n_after = 0;
};

/// Compares sub-period means; the break date itself opens the "after" segment.
inline BreakAnalysis break_analysis(const TimeSeries& u, const Date& break_date) {
    const auto dates = u.dates();
    const auto split = static_cast<std::size_t>(
        std::lower_bound(dates.begin(), dates.end(), break_date) - dates.begin());
    if (split < 2 || u.size() - split < 2)
        throw InvalidArgument("break date " + format_date(break_date) +
                              " leaves fewer than two observations on one side");
    const auto v = u.values();
    BreakAnalysis out;
    out.n_before = split;
    out.n_after = v.size() - split;
    out.mean_before = mean(v.first(split));
    out.mean_after = mean(v.subspan(split));
    if (out.mean_before == 0.0) throw DivisionDomainError("mean before the break is zero");
    out.ratio = out.mean_after / out.mean_before;
    return out;
}

struct CoverageRatios {
    /// Mean share of deposited stocks that were traded.
    double stock_utilization = 0.0;
    /// Mean deposited money per ruble of deposited stock value.
    double money_coverage = 0.0;
};

inline CoverageRatios coverage_ratios(std::span<const MarketDay> days) {
    if (days.empty()) throw InvalidArgument("coverage ratios need at least one day");
    double util = 0.0, cover = 0.0;
    for (const auto& d : days) {
        const auto when = format_date(d.date);
        if (!d.mean_price_rub) throw InvalidArgument(when + ": mean stock price missing");
        if (d.u_big_dep == 0.0) throw DivisionDomainError(when + ": deposited stock count is zero");
        if (*d.mean_price_rub == 0.0) throw DivisionDomainError(when + ": mean stock price is zero");
        util += d.u_big_vol / d.u_big_dep;
        cover += d.invest_mrub * kRublesPerMillion / (d.u_big_dep * *d.mean_price_rub);
    }
    const double n = static_cast<double>(days.size());
    return {util / n, cover / n};
}

/// Average of the per-day mean prices, or nothing if any day lacks one.
inline std::optional<Rubles> average_mean_price(std::span<const MarketDay> days) {
    if (days.empty()) return std::nullopt;
    double sum = 0.0;
    for (const auto& d : days) {
        if (!d.mean_price_rub) return std::nullopt;
        sum += *d.mean_price_rub;
    }
    return Rubles{sum / static_cast<double>(days.size())};
}

}  // namespace specloss
