#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "specloss/distributions.hpp"
#include "specloss/error.hpp"
#include "specloss/series.hpp"

namespace specloss {

/// Dependent variable plus ordered regressors, all on one date vector.
struct RegressionSpec {
    NamedSeries dependent;
    std::vector<NamedSeries> regressors;
    bool include_constant = true;
    /// Placement of "C" among the reported rows.
    enum class ConstantPosition { first, last } constant_position = ConstantPosition::first;
};

struct CoefficientRow {
    std::string name;
    double coefficient = 0.0;
    double std_error = 0.0;
    double t_statistic = 0.0;
    double p_value = 0.0;
};

/// Least-squares estimates with the full diagnostic block of a package-style
/// regression table. NaN marks a statistic that is undefined for the fit
/// (F with a single parameter, Durbin-Watson on an exact fit).
struct OlsFit {
    std::string dependent_name;
    std::vector<CoefficientRow> rows;
    double r_squared = 0.0;
    double adj_r_squared = 0.0;
    double se_of_regression = 0.0;
    double sum_squared_resid = 0.0;
    double log_likelihood = 0.0;
    double aic = 0.0;
    double schwarz = 0.0;
    double hannan_quinn = 0.0;
    double f_statistic = 0.0;
    double f_prob = 0.0;
    double durbin_watson = 0.0;
    double mean_dep = 0.0;
    double sd_dep = 0.0;
    std::size_t n_obs = 0;
    bool has_constant = false;
    TimeSeries residuals;

    std::size_t n_params() const noexcept { return rows.size(); }

    const CoefficientRow& row(const std::string& name) const {
        for (const auto& r : rows)
            if (r.name == name) return r;
        throw InvalidArgument("no coefficient named '" + name + "'");
    }
};

/// Gaussian log likelihood and per-observation information criteria from
/// the residual sum of squares alone.
struct InformationCriteria {
    double log_likelihood;
    double aic;
    double schwarz;
    double hannan_quinn;
};

inline InformationCriteria information_criteria(double ssr, std::size_t n_obs, std::size_t n_params) {
    const double t = static_cast<double>(n_obs);
    const double k = static_cast<double>(n_params);
    const double ll = -0.5 * t * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(ssr / t));
    return {ll, (-2.0 * ll + 2.0 * k) / t, (-2.0 * ll + k * std::log(t)) / t,
            (-2.0 * ll + 2.0 * k * std::log(std::log(t))) / t};
}

inline double adjusted_r_squared(double r2, std::size_t n_obs, std::size_t n_params) {
    const double t = static_cast<double>(n_obs);
    return 1.0 - (1.0 - r2) * (t - 1.0) / (t - static_cast<double>(n_params));
}

/// Overall-significance F statistic; NaN when there is nothing to test (k = 1).
inline double f_statistic(double r2, std::size_t n_obs, std::size_t n_params) {
    if (n_params < 2) return std::numeric_limits<double>::quiet_NaN();
    const double k = static_cast<double>(n_params);
    const double t = static_cast<double>(n_obs);
    return (r2 / (k - 1.0)) / ((1.0 - r2) / (t - k));
}

inline double regression_standard_error(double ssr, std::size_t n_obs, std::size_t n_params) {
    return std::sqrt(ssr / static_cast<double>(n_obs - n_params));
}

inline double durbin_watson(std::span<const double> e) {
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < e.size(); ++t) {
        den += e[t] * e[t];
        if (t > 0) num += (e[t] - e[t - 1]) * (e[t] - e[t - 1]);
    }
    if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return num / den;
}

namespace detail {

/// Column-major dense matrix, just enough for least squares.
struct DesignMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<double>> cols;
    std::vector<std::string> names;
};

/// Householder QR of a column-equilibrated design. Columns are scaled to unit
/// norm first so that the rank test is independent of regressor units, which
/// may differ by many orders of magnitude.
class LeastSquaresQr {
public:
    static constexpr double kRankTolerance = 1e-10;

    explicit LeastSquaresQr(const DesignMatrix& x) : m_(x.rows), n_(x.cols.size()) {
        a_ = x.cols;
        scale_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            double norm = 0.0;
            for (double v : a_[j]) norm += v * v;
            norm = std::sqrt(norm);
            if (norm == 0.0)
                throw SingularityError(x.names[j], "regressor '" + x.names[j] + "' is identically zero");
            scale_[j] = norm;
            for (double& v : a_[j]) v /= norm;
        }
        tau_.assign(n_, 0.0);
        diag_.assign(n_, 0.0);
        for (std::size_t j = 0; j < n_; ++j) {
            auto& col = a_[j];
            double norm = 0.0;
            for (std::size_t i = j; i < m_; ++i) norm += col[i] * col[i];
            norm = std::sqrt(norm);
            if (norm <= kRankTolerance)
                throw SingularityError(x.names[j], "regressor '" + x.names[j] +
                                                       "' is linearly dependent on earlier columns");
            const double alpha = col[j] > 0 ? -norm : norm;
            // v = col[j..] - alpha e_1, stored in place; tau = 2 / v'v.
            col[j] -= alpha;
            double vtv = 0.0;
            for (std::size_t i = j; i < m_; ++i) vtv += col[i] * col[i];
            tau_[j] = 2.0 / vtv;
            diag_[j] = alpha;
            for (std::size_t c = j + 1; c < n_; ++c) apply_reflector(j, a_[c]);
        }
    }

    /// Coefficients of the original (unscaled) design.
    std::vector<double> solve(std::span<const double> y) const {
        std::vector<double> qty(y.begin(), y.end());
        for (std::size_t j = 0; j < n_; ++j) apply_reflector(j, qty);
        std::vector<double> b(n_);
        for (std::size_t jj = n_; jj-- > 0;) {
            double s = qty[jj];
            for (std::size_t c = jj + 1; c < n_; ++c) s -= r(jj, c) * b[c];
            b[jj] = s / diag_[jj];
        }
        for (std::size_t j = 0; j < n_; ++j) b[j] /= scale_[j];
        return b;
    }

    /// Diagonal of (X'X)^{-1} for the unscaled design.
    std::vector<double> inverse_gram_diagonal() const {
        // R^{-1} column by column; (X'X)^{-1} = S^{-1} R^{-1} R^{-T} S^{-1}.
        std::vector<std::vector<double>> rinv(n_, std::vector<double>(n_, 0.0));
        for (std::size_t c = 0; c < n_; ++c) {
            rinv[c][c] = 1.0 / diag_[c];
            for (std::size_t i = c; i-- > 0;) {
                double s = 0.0;
                for (std::size_t k = i + 1; k <= c; ++k) s += r(i, k) * rinv[k][c];
                rinv[i][c] = -s / diag_[i];
            }
        }
        std::vector<double> out(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = 0.0;
            for (std::size_t c = i; c < n_; ++c) s += rinv[i][c] * rinv[i][c];
            out[i] = s / (scale_[i] * scale_[i]);
        }
        return out;
    }

private:
    double r(std::size_t i, std::size_t j) const { return i == j ? diag_[i] : a_[j][i]; }

    void apply_reflector(std::size_t j, std::vector<double>& v) const {
        const auto& h = a_[j];
        double dot = 0.0;
        for (std::size_t i = j; i < m_; ++i) dot += h[i] * v[i];
        dot *= tau_[j];
        for (std::size_t i = j; i < m_; ++i) v[i] -= dot * h[i];
    }

    std::size_t m_, n_;
    std::vector<std::vector<double>> a_;
    std::vector<double> scale_, tau_, diag_;
};

inline DesignMatrix build_design(const RegressionSpec& spec) {
    const auto& y = spec.dependent.series;
    DesignMatrix x;
    x.rows = y.size();
    auto add_constant = [&] {
        x.cols.emplace_back(x.rows, 1.0);
        x.names.emplace_back("C");
    };
    if (spec.include_constant && spec.constant_position == RegressionSpec::ConstantPosition::first)
        add_constant();
    for (const auto& reg : spec.regressors) {
        if (!same_dates(reg.series, y))
            throw InvalidArgument("regressor '" + reg.name + "' is not aligned with '" +
                                  spec.dependent.name + "'");
        x.cols.emplace_back(reg.series.values().begin(), reg.series.values().end());
        x.names.push_back(reg.name);
    }
    if (spec.include_constant && spec.constant_position == RegressionSpec::ConstantPosition::last)
        add_constant();
    return x;
}

}  // namespace detail

/// Ordinary least squares with package-convention diagnostics.
///
/// The solve runs through a Householder QR on unit-norm columns; a column
/// whose remaining norm after projection falls below 1e-10 is reported as
/// singular by name. Tail probabilities use Student-t / F with T-k and
/// (k-1, T-k) degrees of freedom.
inline OlsFit fit(const RegressionSpec& spec) {
    const auto x = detail::build_design(spec);
    const std::size_t n = x.rows;
    const std::size_t k = x.cols.size();
    if (k == 0) throw InvalidArgument("regression has no regressors");
    if (n <= k)
        throw InsufficientData("regression of '" + spec.dependent.name + "' has " +
                               std::to_string(n) + " observations for " + std::to_string(k) +
                               " parameters");

    const detail::LeastSquaresQr qr(x);
    auto y = spec.dependent.series.values();
    const auto beta = qr.solve(y);

    std::vector<double> resid(n);
    for (std::size_t t = 0; t < n; ++t) {
        double fitted = 0.0;
        for (std::size_t j = 0; j < k; ++j) fitted += x.cols[j][t] * beta[j];
        resid[t] = y[t] - fitted;
    }

    OlsFit out;
    out.dependent_name = spec.dependent.name;
    out.n_obs = n;
    out.has_constant = spec.include_constant;
    out.mean_dep = mean(y);
    out.sd_dep = stddev(y);

    double ssr = 0.0;
    for (double e : resid) ssr += e * e;
    double tss = 0.0;
    for (double v : y) tss += (v - out.mean_dep) * (v - out.mean_dep);

    out.sum_squared_resid = ssr;
    out.r_squared = tss > 0.0 ? 1.0 - ssr / tss : std::numeric_limits<double>::quiet_NaN();
    out.adj_r_squared = adjusted_r_squared(out.r_squared, n, k);
    out.se_of_regression = regression_standard_error(ssr, n, k);
    const auto ic = information_criteria(ssr, n, k);
    out.log_likelihood = ic.log_likelihood;
    out.aic = ic.aic;
    out.schwarz = ic.schwarz;
    out.hannan_quinn = ic.hannan_quinn;
    out.f_statistic = f_statistic(out.r_squared, n, k);
    out.f_prob = std::isnan(out.f_statistic)
                     ? std::numeric_limits<double>::quiet_NaN()
                     : f_sf(std::max(out.f_statistic, 0.0), static_cast<int>(k - 1),
                            static_cast<int>(n - k));
    out.durbin_watson = durbin_watson(resid);

    const double sigma2 = ssr / static_cast<double>(n - k);
    const auto gram_diag = qr.inverse_gram_diagonal();
    const int df = static_cast<int>(n - k);
    out.rows.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        CoefficientRow row;
        row.name = x.names[j];
        row.coefficient = beta[j];
        row.std_error = std::sqrt(sigma2 * gram_diag[j]);
        row.t_statistic = row.coefficient / row.std_error;
        row.p_value = std::isnan(row.t_statistic) ? std::numeric_limits<double>::quiet_NaN()
                                                  : student_t_two_sided(row.t_statistic, df);
        out.rows.push_back(std::move(row));
    }

    const auto dates = spec.dependent.series.dates();
    out.residuals = TimeSeries(std::vector<Date>(dates.begin(), dates.end()), std::move(resid),
                               spec.dependent.series.unit_label());
    return out;
}

}  // namespace specloss
