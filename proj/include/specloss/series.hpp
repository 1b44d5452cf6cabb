#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specloss/error.hpp"

namespace specloss {

using Date = std::chrono::year_month_day;

/// Parses an ISO-8601 calendar date (YYYY-MM-DD).
inline Date parse_date(std::string_view text) {
    auto bad = [&] { return InvalidArgument("invalid ISO date '" + std::string(text) + "'"); };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') throw bad();
    int y = 0;
    unsigned m = 0, d = 0;
    auto field = [&](std::size_t pos, std::size_t len, auto& out) {
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, out);
        if (ec != std::errc{} || p != text.data() + pos + len) throw bad();
    };
    field(0, 4, y);
    field(5, 2, m);
    field(8, 2, d);
    Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!date.ok()) throw bad();
    return date;
}

inline std::string format_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

/// Date-indexed sequence of reals. Immutable once built.
///
/// Dates are strictly increasing and every value is finite; construction
/// rejects NaN, which is how upstream code flags a missing observation.
class TimeSeries {
public:
    TimeSeries() = default;

    TimeSeries(std::vector<Date> dates, std::vector<double> values, std::string unit_label = {})
        : dates_(std::move(dates)), values_(std::move(values)), unit_(std::move(unit_label)) {
        if (dates_.size() != values_.size())
            throw InvalidArgument("series has " + std::to_string(dates_.size()) + " dates but " +
                                  std::to_string(values_.size()) + " values");
        for (std::size_t i = 1; i < dates_.size(); ++i) {
            if (!(dates_[i - 1] < dates_[i]))
                throw InvalidArgument("series dates not strictly increasing at " +
                                      format_date(dates_[i]));
        }
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i]))
                throw InvalidArgument("missing or non-finite value at " + format_date(dates_[i]));
        }
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const double> values() const noexcept { return values_; }
    std::span<const Date> dates() const noexcept { return dates_; }
    const std::string& unit_label() const noexcept { return unit_; }
    double operator[](std::size_t i) const { return values_[i]; }

    /// Copy of the trailing `n` observations.
    TimeSeries tail(std::size_t n) const {
        if (n > size()) throw InvalidArgument("tail longer than series");
        std::size_t off = size() - n;
        return {std::vector<Date>(dates_.begin() + off, dates_.end()),
                std::vector<double>(values_.begin() + off, values_.end()), unit_};
    }

    /// Same dates, values mapped through `f`.
    template <class F>
    TimeSeries transform(F&& f, std::string unit_label) const {
        std::vector<double> out(values_.size());
        std::transform(values_.begin(), values_.end(), out.begin(), std::forward<F>(f));
        return {dates_, std::move(out), std::move(unit_label)};
    }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::vector<Date> dates_;
    std::vector<double> values_;
    std::string unit_;
};

/// A series with the variable name used in reports ("U_BIG_VOL", "D(I)").
struct NamedSeries {
    std::string name;
    TimeSeries series;
};

/// result[t] = s[t] - s[t-order], on the last size()-order dates.
inline TimeSeries diff(const TimeSeries& s, std::size_t order = 1) {
    if (order == 0) throw InvalidArgument("difference order must be positive");
    if (order >= s.size())
        throw InvalidArgument("difference order " + std::to_string(order) +
                              " needs more than " + std::to_string(s.size()) + " observations");
    auto v = s.values();
    std::vector<double> out(v.size() - order);
    for (std::size_t t = order; t < v.size(); ++t) out[t - order] = v[t] - v[t - order];
    auto d = s.dates();
    return {std::vector<Date>(d.begin() + static_cast<std::ptrdiff_t>(order), d.end()),
            std::move(out), s.unit_label()};
}

/// result[t] = s[t-k], on the last size()-k dates. k = 0 is the identity.
inline TimeSeries lag(const TimeSeries& s, std::size_t k) {
    if (k == 0) return s;
    if (k >= s.size())
        throw InvalidArgument("lag " + std::to_string(k) + " needs more than " +
                              std::to_string(s.size()) + " observations");
    auto v = s.values();
    auto d = s.dates();
    return {std::vector<Date>(d.begin() + static_cast<std::ptrdiff_t>(k), d.end()),
            std::vector<double>(v.begin(), v.end() - static_cast<std::ptrdiff_t>(k)),
            s.unit_label()};
}

inline double mean(std::span<const double> v) {
    if (v.empty()) throw InvalidArgument("mean of an empty series");
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

/// Sample standard deviation (divisor n-1); a single observation gives 0.
inline double stddev(std::span<const double> v) {
    double m = mean(v);
    if (v.size() == 1) return 0.0;
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

inline double mean(const TimeSeries& s) { return mean(s.values()); }
inline double stddev(const TimeSeries& s) { return stddev(s.values()); }

/// Restricts every input to the dates all of them share, preserving order.
inline std::vector<TimeSeries> align(std::span<const TimeSeries> inputs) {
    if (inputs.empty()) throw InvalidArgument("nothing to align");
    std::vector<Date> common(inputs[0].dates().begin(), inputs[0].dates().end());
    for (std::size_t i = 1; i < inputs.size(); ++i) {
        std::vector<Date> next;
        auto d = inputs[i].dates();
        std::set_intersection(common.begin(), common.end(), d.begin(), d.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    if (common.empty()) throw AlignmentError("series share no common dates");

    std::vector<TimeSeries> out;
    out.reserve(inputs.size());
    for (const auto& s : inputs) {
        if (s.size() == common.size()) {
            out.push_back(s);
            continue;
        }
        std::vector<double> vals;
        vals.reserve(common.size());
        auto d = s.dates();
        std::size_t j = 0;
        for (const auto& date : common) {
            while (d[j] < date) ++j;
            vals.push_back(s[j]);
        }
        out.emplace_back(common, std::move(vals), s.unit_label());
    }
    return out;
}

inline std::vector<TimeSeries> align(const TimeSeries& a, const TimeSeries& b) {
    const TimeSeries both[] = {a, b};
    return align(std::span<const TimeSeries>(both));
}

inline bool same_dates(const TimeSeries& a, const TimeSeries& b) {
    return std::ranges::equal(a.dates(), b.dates());
}

}  // namespace specloss
