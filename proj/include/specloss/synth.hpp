#pragma once

#include <chrono>
#include <cmath>
#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "specloss/error.hpp"
#include "specloss/market_model.hpp"
#include "specloss/series.hpp"

namespace specloss {

/// Seeded Gaussian stream. The engine is std::mt19937_64 keyed through
/// std::seed_seq on (seed, stream id); both are fully specified by the C++
/// standard. Normals come from the Marsaglia polar method on 53-bit uniforms
/// rather than std::normal_distribution, whose algorithm is unspecified.
class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint32_t stream_id) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          stream_id, 0x9e3779b9u};
        engine_.seed(seq);
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = 0.0, v = 0.0, s = 0.0;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Substream ids. New variables get new ids; existing ones never change.
enum StreamId : std::uint32_t {
    kStreamWalk = 1,
    kStreamAr1 = 2,
    kStreamInvest = 10,
    kStreamRate = 11,
    kStreamVolume = 12,
    kStreamVolumeNoise = 13,
    kStreamDeposit = 14,
    kStreamPrice = 15,
    kStreamCointError = 20,
    kStreamCointRegressor = 21,  // 21, 22, ... one per regressor
};

/// Monday-to-Friday dates starting at `start` (advanced to a weekday).
inline std::vector<Date> weekday_calendar(Date start, std::size_t n) {
    using namespace std::chrono;
    std::vector<Date> out;
    out.reserve(n);
    sys_days day{start};
    while (out.size() < n) {
        const weekday wd{day};
        if (wd != Saturday && wd != Sunday) out.emplace_back(day);
        day += days{1};
    }
    return out;
}

inline const Date kDefaultSynthStart{std::chrono::year{2012}, std::chrono::January, std::chrono::day{3}};

/// y_0 = 0, y_t = y_{t-1} + drift + scale * e_t.
inline TimeSeries gen_random_walk(std::uint64_t seed, std::size_t n, double drift, double scale) {
    if (n < 2) throw InvalidArgument("random walk needs n >= 2");
    if (!(scale > 0.0)) throw InvalidArgument("random walk scale must be positive");
    NormalStream eps(seed, kStreamWalk);
    std::vector<double> v(n, 0.0);
    for (std::size_t t = 1; t < n; ++t) v[t] = v[t - 1] + drift + scale * eps();
    return {weekday_calendar(kDefaultSynthStart, n), std::move(v)};
}

/// Zero-mean AR(1) started from its stationary distribution.
inline TimeSeries gen_ar1(std::uint64_t seed, std::size_t n, double phi, double scale) {
    if (n < 1) throw InvalidArgument("AR(1) needs n >= 1");
    if (!(std::fabs(phi) < 1.0)) throw InvalidArgument("AR(1) needs |phi| < 1");
    if (!(scale > 0.0)) throw InvalidArgument("AR(1) scale must be positive");
    NormalStream eps(seed, kStreamAr1);
    std::vector<double> v(n);
    v[0] = scale / std::sqrt(1.0 - phi * phi) * eps();
    for (std::size_t t = 1; t < n; ++t) v[t] = phi * v[t - 1] + scale * eps();
    return {weekday_calendar(kDefaultSynthStart, n), std::move(v)};
}

/// A cointegrated system: `x` are independent random walks and
/// y = intercept + sum_j beta_j x_j + AR(1) error, so y is I(1) yet the
/// regression residual is stationary.
struct CointegratedSystem {
    NamedSeries y;
    std::vector<NamedSeries> x;
    std::vector<double> beta;
    double intercept = 0.0;
};

inline CointegratedSystem gen_cointegrated(std::uint64_t seed, std::size_t n, std::vector<double> beta,
                                           double intercept = 1.0, double error_phi = 0.3,
                                           double error_scale = 1.0) {
    if (n < 2) throw InvalidArgument("cointegrated system needs n >= 2");
    if (beta.empty()) throw InvalidArgument("cointegrated system needs at least one regressor");
    if (!(std::fabs(error_phi) < 1.0)) throw InvalidArgument("error AR coefficient needs |phi| < 1");
    if (!(error_scale > 0.0)) throw InvalidArgument("error scale must be positive");
    const auto dates = weekday_calendar(kDefaultSynthStart, n);
    CointegratedSystem sys;
    sys.beta = beta;
    sys.intercept = intercept;
    std::vector<double> y(n, intercept);
    for (std::size_t j = 0; j < beta.size(); ++j) {
        NormalStream eps(seed, kStreamCointRegressor + static_cast<std::uint32_t>(j));
        std::vector<double> x(n, 0.0);
        for (std::size_t t = 1; t < n; ++t) x[t] = x[t - 1] + eps();
        for (std::size_t t = 0; t < n; ++t) y[t] += beta[j] * x[t];
        sys.x.push_back({"X" + std::to_string(j + 1), TimeSeries(dates, std::move(x))});
    }
    NormalStream e(seed, kStreamCointError);
    const auto err = [&] {
        std::vector<double> v(n);
        v[0] = error_scale / std::sqrt(1.0 - error_phi * error_phi) * e();
        for (std::size_t t = 1; t < n; ++t) v[t] = error_phi * v[t - 1] + error_scale * e();
        return v;
    }();
    for (std::size_t t = 0; t < n; ++t) y[t] += err[t];
    sys.y = {"Y", TimeSeries(dates, std::move(y))};
    return sys;
}

/// Process parameters for a synthetic trading year. Defaults put u near
/// 50 kopecks by volume with roughly one stock in ten deposited being traded,
/// and double deposited money from the trading day of 2012-05-10 onward.
struct SynthConfig {
    std::uint64_t seed = 1;
    std::size_t n_days = 255;
    Date start_date = kDefaultSynthStart;

    // I: reflected random walk, million rubles.
    double invest_start = 15000.0;
    double invest_drift = 0.0;
    double invest_scale = 50.0;

    // R: AR(1) around a positive level, percent per annum.
    double rate_level = 5.5;
    double rate_phi = 0.7;
    double rate_scale = 0.3;

    // U_vol: level * exp(AR(1) + noise_scale * iid), pieces.
    double volume_level = 8.1e6;
    double volume_phi = 0.5;
    double volume_scale = 0.15;
    double noise_scale = 0.05;

    // U_dep = max(U_vol, reflected random walk), pieces.
    double deposit_start = 8.1e7;
    double deposit_scale = 4.0e5;

    // Mean stock price: level * exp(AR(1)), rubles.
    double price_level = 5320.0;
    double price_phi = 0.9;
    double price_scale = 0.01;

    /// I is multiplied by break_factor from this index on; >= n_days disables.
    std::size_t break_index = 92;
    double break_factor = 2.0;

    void validate() const {
        if (n_days < 30) throw InvalidArgument("synthetic sample needs at least 30 days");
        for (double s : {invest_scale, rate_scale, volume_scale, deposit_scale, price_scale,
                         invest_start, rate_level, volume_level, deposit_start, price_level,
                         break_factor})
            if (!(s > 0.0)) throw InvalidArgument("synthetic scales and levels must be positive");
        if (!(noise_scale >= 0.0)) throw InvalidArgument("noise_scale must be nonnegative");
        for (double phi : {rate_phi, volume_phi, price_phi})
            if (!(std::fabs(phi) < 1.0)) throw InvalidArgument("AR coefficients need |phi| < 1");
    }
};

namespace detail {

/// Random walk kept above `floor` by reflecting overshoots.
inline std::vector<double> reflected_walk(NormalStream& eps, std::size_t n, double start, double drift,
                                          double scale, double floor) {
    std::vector<double> v(n);
    v[0] = start;
    for (std::size_t t = 1; t < n; ++t) {
        double x = v[t - 1] + drift + scale * eps();
        while (x < floor) x = 2.0 * floor - x;
        v[t] = x;
    }
    return v;
}

inline std::vector<double> stationary_ar1(NormalStream& eps, std::size_t n, double phi, double scale) {
    std::vector<double> v(n);
    v[0] = scale / std::sqrt(1.0 - phi * phi) * eps();
    for (std::size_t t = 1; t < n; ++t) v[t] = phi * v[t - 1] + scale * eps();
    return v;
}

}  // namespace detail

/// Synthetic trading days: I integrated, R and U_vol stationary, U_dep
/// integrated and never below U_vol. Stock counts are whole pieces.
inline std::vector<MarketDay> gen_market_days(const SynthConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.n_days;
    const auto dates = weekday_calendar(cfg.start_date, n);

    NormalStream e_invest(cfg.seed, kStreamInvest);
    NormalStream e_rate(cfg.seed, kStreamRate);
    NormalStream e_volume(cfg.seed, kStreamVolume);
    NormalStream e_noise(cfg.seed, kStreamVolumeNoise);
    NormalStream e_deposit(cfg.seed, kStreamDeposit);
    NormalStream e_price(cfg.seed, kStreamPrice);

    const auto invest = detail::reflected_walk(e_invest, n, cfg.invest_start, cfg.invest_drift,
                                               cfg.invest_scale, 0.01 * cfg.invest_start);
    const auto rate = detail::stationary_ar1(e_rate, n, cfg.rate_phi, cfg.rate_scale);
    const auto volume = detail::stationary_ar1(e_volume, n, cfg.volume_phi, cfg.volume_scale);
    const auto deposit = detail::reflected_walk(e_deposit, n, cfg.deposit_start, 0.0,
                                                cfg.deposit_scale, 0.3 * cfg.deposit_start);
    const auto price = detail::stationary_ar1(e_price, n, cfg.price_phi, cfg.price_scale);

    std::vector<MarketDay> days(n);
    for (std::size_t t = 0; t < n; ++t) {
        auto& d = days[t];
        d.date = dates[t];
        d.invest_mrub = invest[t] * (t >= cfg.break_index ? cfg.break_factor : 1.0);
        d.rate_pct = std::fabs(cfg.rate_level + rate[t]);
        const double noise = e_noise();
        d.u_big_vol = std::max(1.0, std::round(cfg.volume_level *
                                               std::exp(volume[t] + cfg.noise_scale * noise)));
        d.u_big_dep = std::max(d.u_big_vol, std::round(deposit[t]));
        d.mean_price_rub = cfg.price_level * std::exp(price[t]);
    }
    return days;
}

}  // namespace specloss
