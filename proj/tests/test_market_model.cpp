#include <gtest/gtest.h>

#include "specloss/market_model.hpp"
#include "specloss/synth.hpp"
#include "support/oracles.hpp"

using namespace specloss;

namespace {

MarketDay day(const char* date, double invest, double rate_pct, double u_vol, double u_dep,
              std::optional<double> price = std::nullopt) {
    return {parse_date(date), invest, rate_pct, u_vol, u_dep, price};
}

std::vector<MarketDay> random_days(std::uint64_t seed, std::size_t n) {
    NormalStream g(seed, 5);
    const auto dates = weekday_calendar(kDefaultSynthStart, n);
    std::vector<MarketDay> out;
    for (std::size_t t = 0; t < n; ++t) {
        const double u_vol = 1.0 + std::floor(1e7 * g.uniform());
        out.push_back({dates[t], 1e5 * g.uniform(), 20.0 * g.uniform(), u_vol, u_vol * (1.0 + 10.0 * g.uniform()),
                       1.0 + 1e4 * g.uniform()});
    }
    return out;
}

}  // namespace

TEST(DailyLossLimit, HandExamples) {
    EXPECT_DOUBLE_EQ(daily_loss_limit(365, 0.05), 0.05);
    EXPECT_DOUBLE_EQ(daily_loss_limit(1000, 0.0365), 0.1);
    EXPECT_EQ(daily_loss_limit(1234, 0.0), 0.0);
    EXPECT_THROW(daily_loss_limit(-1, 0.05), InvalidArgument);
    EXPECT_THROW(daily_loss_limit(1, -0.05), InvalidArgument);
}

TEST(MeanLossPerStock, HandExampleAndZeroStocks) {
    EXPECT_DOUBLE_EQ(mean_loss_per_stock(365, 1.0, 1), 1.0);
    EXPECT_THROW(mean_loss_per_stock(365, 1.0, 0), DivisionDomainError);
    EXPECT_THROW(mean_loss_per_stock(365, 1.0, -2), InvalidArgument);
    // The division error is its own category.
    try {
        mean_loss_per_stock(1, 1, 0);
    } catch (const InvalidArgument&) {
        FAIL() << "zero U must not be reported as an invalid argument";
    } catch (const DivisionDomainError&) {
    }
}

TEST(MeanLossPerStock, IdentityOnRandomInputs) {
    NormalStream g(42, 1);
    for (int i = 0; i < 10000; ++i) {
        const double invest = 1e6 * g.uniform();
        const double rate = g.uniform();
        const double u_big = 1.0 + 1e8 * g.uniform();
        const double u = mean_loss_per_stock(invest, rate, u_big);
        EXPECT_TRUE(testutil::rel_close(u * u_big, daily_loss_limit(invest, rate), 1e-9));
        EXPECT_GE(u, 0.0);
    }
}

TEST(USeries, UnitConversionChain) {
    const MarketDay d = day("2012-03-01", 3.65, 10.0, 100000, 200000);
    const auto f = loss_figures(d, UVariant::by_volume);
    EXPECT_NEAR(f.u_small.value, 1.0, 1e-12);                 // kopecks
    EXPECT_NEAR(f.l_daily.value, 3.65e6 * 0.10 / 365, 1e-9);  // rubles
    EXPECT_NEAR(to_kopecks(f.l_daily).value, f.u_small.value * 100000, 1e-6);
    const MarketDay days[] = {d};
    EXPECT_NEAR(u_series(days, UVariant::by_volume)[0], 1.0, 1e-12);
    EXPECT_NEAR(u_series(days, UVariant::by_deposit)[0], 0.5, 1e-12);
    EXPECT_EQ(u_series(days, UVariant::by_volume).unit_label(), "kopecks");
}

TEST(USeries, IdenticalDaysGiveConstantSeries) {
    const MarketDay days[] = {day("2012-03-01", 100, 5, 1e6, 1e7), day("2012-03-02", 100, 5, 1e6, 1e7)};
    EXPECT_EQ(stddev(u_series(days, UVariant::by_volume)), 0.0);
}

TEST(USeries, DoublingInvestmentDoublesU) {
    const MarketDay days[] = {day("2012-03-01", 100, 5, 1e6, 1e7), day("2012-03-02", 200, 5, 1e6, 1e7)};
    const auto u = u_series(days, UVariant::by_volume);
    EXPECT_DOUBLE_EQ(u[1], 2.0 * u[0]);
}

TEST(USeries, ZeroStockCountNamesTheDate) {
    const MarketDay days[] = {day("2012-03-01", 100, 5, 1e6, 1e7), day("2012-03-02", 100, 5, 0, 1e7)};
    try {
        (void)u_series(days, UVariant::by_volume);
        FAIL() << "expected DivisionDomainError";
    } catch (const DivisionDomainError& e) {
        EXPECT_NE(std::string(e.what()).find("2012-03-02"), std::string::npos);
    }
    EXPECT_NO_THROW((void)u_series(days, UVariant::by_deposit));
}

TEST(USeries, HomogeneityUnderScaling) {
    auto days = random_days(3, 50);
    NormalStream g(9, 1);
    for (int rep = 0; rep < 20; ++rep) {
        const double a = 0.1 + 10.0 * g.uniform(), b = 0.1 + 10.0 * g.uniform(), c = 0.1 + 10.0 * g.uniform();
        auto scaled = days;
        for (auto& d : scaled) {
            d.invest_mrub *= a;
            d.rate_pct *= b;
            d.u_big_vol *= c;
            d.u_big_dep *= c;
        }
        for (auto variant : {UVariant::by_volume, UVariant::by_deposit}) {
            const auto base = u_series(days, variant);
            const auto s = u_series(scaled, variant);
            for (std::size_t t = 0; t < base.size(); ++t)
                EXPECT_TRUE(testutil::rel_close(s[t], base[t] * a * b / c, 1e-12));
        }
    }
}

TEST(MarketDay, InvariantViolationsNameTheDate) {
    EXPECT_THROW(day("2012-01-05", -1, 5, 1, 2).validate(), ValidationError);
    EXPECT_THROW(day("2012-01-05", 1, -5, 1, 2).validate(), ValidationError);
    try {
        day("2012-01-05", 1, 5, 3, 2).validate();
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("2012-01-05"), std::string::npos);
    }
}

TEST(Constancy, PublishedFigurePasses) {
    // Sample stddev of {0, 80} is 40*sqrt(2); scale to exactly 40.
    const auto u = testutil::series({51.0 - 40.0 / std::sqrt(2.0), 51.0 + 40.0 / std::sqrt(2.0)});
    const auto c = constancy_check(u, Rubles{5320});
    EXPECT_NEAR(c.stddev.value, 40.0, 1e-9);
    EXPECT_DOUBLE_EQ(c.threshold.value, 5320.0);
    EXPECT_TRUE(c.passes);
    EXPECT_NEAR(c.mean.value, 51.0, 1e-12);
}

TEST(Constancy, BoundaryIsStrict) {
    const auto u = testutil::series({0.0, 2.0});  // stddev sqrt(2)
    const double sd = std::sqrt(2.0);
    EXPECT_FALSE(constancy_check(u, Rubles{sd}).passes);
    EXPECT_TRUE(constancy_check(u, Rubles{sd * 1.0000001}).passes);
}

TEST(Constancy, ConstantSeriesAlwaysPasses) {
    const auto u = testutil::series({5, 5, 5});
    for (double p : {1e-6, 1.0, 5320.0}) EXPECT_TRUE(constancy_check(u, Rubles{p}).passes);
    EXPECT_THROW(constancy_check(u, Rubles{0.0}), InvalidArgument);
}

TEST(Break, StepDoubles) {
    const auto u = testutil::series({1, 1, 1, 1, 2, 2, 2, 2, 2});
    const auto b = break_analysis(u, u.dates()[4]);
    EXPECT_DOUBLE_EQ(b.ratio, 2.0);
    EXPECT_EQ(b.n_before, 4u);
    EXPECT_EQ(b.n_after, 5u);
}

TEST(Break, ConstantRatioOne) {
    const auto u = testutil::series({3, 3, 3, 3, 3, 3});
    EXPECT_DOUBLE_EQ(break_analysis(u, u.dates()[3]).ratio, 1.0);
}

TEST(Break, DegenerateSplitsRejected) {
    const auto u = testutil::series({1, 2, 3, 4, 5});
    EXPECT_THROW(break_analysis(u, u.dates()[1]), InvalidArgument);
    EXPECT_THROW(break_analysis(u, u.dates()[4]), InvalidArgument);
    EXPECT_THROW(break_analysis(u, parse_date("2030-01-01")), InvalidArgument);
    EXPECT_THROW(break_analysis(u, parse_date("2000-01-01")), InvalidArgument);
}

TEST(Break, DateBetweenTradingDaysOpensNextSegment) {
    const auto u = testutil::series({1, 1, 1, 2, 2, 2});  // 2012-01-03 .. 2012-01-10
    const auto b = break_analysis(u, parse_date("2012-01-07"));  // Saturday
    EXPECT_EQ(b.n_before, 4u);
}

TEST(Coverage, TenPercentUtilization) {
    std::vector<MarketDay> days;
    for (const auto& d : weekday_calendar(kDefaultSynthStart, 5)) days.push_back({d, 100, 5, 1e6, 1e7, 10.0});
    EXPECT_DOUBLE_EQ(coverage_ratios(days).stock_utilization, 0.10);
}

TEST(Coverage, MoneyEqualToDepositedValue) {
    // 2 million rubles vs 1e5 stocks at 20 rubles.
    const MarketDay days[] = {day("2012-06-01", 2.0, 5, 1e4, 1e5, 20.0)};
    EXPECT_DOUBLE_EQ(coverage_ratios(days).money_coverage, 1.0);
}

TEST(Coverage, DenominatorErrorsNameTheDate) {
    const MarketDay zero_price[] = {day("2012-06-01", 2.0, 5, 0, 1e5, 0.0)};
    const MarketDay zero_dep[] = {day("2012-06-04", 2.0, 5, 0, 0, 10.0)};
    const MarketDay no_price[] = {day("2012-06-05", 2.0, 5, 0, 1e5)};
    for (auto [span, date] : {std::pair{std::span<const MarketDay>(zero_price), "2012-06-01"},
                              {std::span<const MarketDay>(zero_dep), "2012-06-04"}}) {
        try {
            (void)coverage_ratios(span);
            FAIL();
        } catch (const DivisionDomainError& e) {
            EXPECT_NE(std::string(e.what()).find(date), std::string::npos);
        }
    }
    EXPECT_THROW((void)coverage_ratios(no_price), InvalidArgument);
}

TEST(Relabeling, SummariesInvariantUnderDateShift) {
    const auto days = random_days(21, 40);
    auto shifted = days;
    const auto new_dates = weekday_calendar(parse_date("2015-02-02"), days.size());
    for (std::size_t t = 0; t < days.size(); ++t) shifted[t].date = new_dates[t];
    const auto u = u_series(days, UVariant::by_volume);
    const auto v = u_series(shifted, UVariant::by_volume);
    EXPECT_EQ(constancy_check(u, Rubles{100}).stddev.value, constancy_check(v, Rubles{100}).stddev.value);
    EXPECT_EQ(break_analysis(u, u.dates()[20]).ratio, break_analysis(v, v.dates()[20]).ratio);
    EXPECT_EQ(coverage_ratios(days).money_coverage, coverage_ratios(shifted).money_coverage);
}
