#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "specloss/error.hpp"
#include "specloss/market_model.hpp"
#include "specloss/series.hpp"
#include "specloss/synth.hpp"
#include "specloss/unit_root.hpp"

namespace specloss {

/// Shortest text that reads back to the same double, without an exponent
/// for magnitudes in [1e-4, 1e15).
inline std::string format_shortest(double v) {
    char buf[512];
    const double a = std::fabs(v);
    const bool plain = a == 0.0 || (a >= 1e-4 && a < 1e15);
    auto [p, ec] = plain ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed)
                         : std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw InvalidArgument("cannot format number");
    return {buf, p};
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = line.find(',');
        out.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return out;
}

inline double parse_number(std::string_view tok, std::size_t line, std::string_view column) {
    double v = 0.0;
    // from_chars rejects a leading '+'; allow it for hand-written files.
    std::string_view body = !tok.empty() && tok.front() == '+' ? tok.substr(1) : tok;
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (body.empty() || ec != std::errc{} || p != body.data() + body.size())
        throw ParseError(line, "column '" + std::string(column) + "': not a number: '" +
                                   std::string(tok) + "'");
    return v;
}

inline std::string lower(std::string_view s) {
    std::string out(s);
    std::ranges::transform(out, out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    return in;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    return out;
}

/// Header plus numeric rows keyed by a leading date column.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<Date> dates;
    std::vector<std::size_t> line_numbers;
    std::vector<std::vector<std::optional<double>>> rows;
};

inline CsvTable read_dated_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (!have_header) {
            for (auto f : fields) table.header.push_back(lower(f));
            if (table.header.empty() || table.header.front() != "date")
                throw SchemaError("first column must be 'date'");
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size())
            throw ParseError(line_no, "expected " + std::to_string(table.header.size()) +
                                          " fields, found " + std::to_string(fields.size()));
        Date date;
        try {
            date = parse_date(fields[0]);
        } catch (const InvalidArgument& e) {
            throw ParseError(line_no, e.what());
        }
        std::vector<std::optional<double>> row;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (fields[i].empty()) {
                row.emplace_back();
            } else {
                row.emplace_back(parse_number(fields[i], line_no, table.header[i]));
            }
        }
        table.dates.push_back(date);
        table.line_numbers.push_back(line_no);
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw SchemaError("missing header row");
    return table;
}

}  // namespace detail

inline constexpr std::string_view kMarketColumns[] = {"i_mrub", "r_pct", "u_big_vol", "u_big_dep"};
inline constexpr std::string_view kMeanPriceColumn = "mean_price_rub";

/// Reads `date,i_mrub,r_pct,u_big_vol,u_big_dep[,mean_price_rub]`. Columns are
/// matched by header name; the result is validated and sorted by date.
inline std::vector<MarketDay> read_market_csv(std::istream& in) {
    auto table = detail::read_dated_csv(in);
    auto column = [&](std::string_view name) -> std::optional<std::size_t> {
        auto it = std::ranges::find(table.header, name);
        if (it == table.header.end()) return std::nullopt;
        return static_cast<std::size_t>(it - table.header.begin()) - 1;
    };
    std::size_t idx[4];
    for (std::size_t i = 0; i < 4; ++i) {
        auto c = column(kMarketColumns[i]);
        if (!c) throw SchemaError("missing column '" + std::string(kMarketColumns[i]) + "'");
        idx[i] = *c;
    }
    const auto price_idx = column(kMeanPriceColumn);

    std::vector<MarketDay> days;
    days.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        auto required = [&](std::size_t i) {
            if (!row[idx[i]])
                throw ParseError(table.line_numbers[r],
                                 "column '" + std::string(kMarketColumns[i]) + "' is empty");
            return *row[idx[i]];
        };
        MarketDay d;
        d.date = table.dates[r];
        d.invest_mrub = required(0);
        d.rate_pct = required(1);
        d.u_big_vol = required(2);
        d.u_big_dep = required(3);
        if (price_idx) d.mean_price_rub = row[*price_idx];
        d.validate();
        days.push_back(d);
    }
    std::ranges::stable_sort(days, {}, &MarketDay::date);
    for (std::size_t i = 1; i < days.size(); ++i)
        if (days[i].date == days[i - 1].date)
            throw ValidationError("duplicate date " + format_date(days[i].date));
    return days;
}

inline std::vector<MarketDay> load_market_csv(const std::string& path) {
    auto in = detail::open_input(path);
    return read_market_csv(in);
}

inline void write_market_csv(std::ostream& out, std::span<const MarketDay> days) {
    const bool with_price =
        !days.empty() && std::ranges::all_of(days, [](const auto& d) { return d.mean_price_rub.has_value(); });
    out << "date,i_mrub,r_pct,u_big_vol,u_big_dep" << (with_price ? ",mean_price_rub" : "") << '\n';
    for (const auto& d : days) {
        out << format_date(d.date) << ',' << format_shortest(d.invest_mrub) << ','
            << format_shortest(d.rate_pct) << ',' << format_shortest(d.u_big_vol) << ','
            << format_shortest(d.u_big_dep);
        if (with_price) out << ',' << format_shortest(*d.mean_price_rub);
        out << '\n';
    }
}

inline void write_market_csv(const std::string& path, std::span<const MarketDay> days) {
    auto out = detail::open_output(path);
    write_market_csv(out, days);
}

/// One date column plus one column per series; all series must share dates.
inline void write_series_csv(std::ostream& out, std::span<const NamedSeries> series) {
    if (series.empty()) throw InvalidArgument("no series to write");
    for (const auto& s : series)
        if (!same_dates(s.series, series.front().series))
            throw InvalidArgument("series '" + s.name + "' is not aligned with '" + series.front().name + "'");
    out << "date";
    for (const auto& s : series) out << ',' << s.name;
    out << '\n';
    const auto dates = series.front().series.dates();
    for (std::size_t t = 0; t < dates.size(); ++t) {
        out << format_date(dates[t]);
        for (const auto& s : series) out << ',' << format_shortest(s.series[t]);
        out << '\n';
    }
}

inline void write_series_csv(const std::string& path, std::span<const NamedSeries> series) {
    auto out = detail::open_output(path);
    write_series_csv(out, series);
}

/// Every numeric column of a dated CSV as a series; header names are kept
/// lower-cased. Rows are sorted by date.
inline std::vector<NamedSeries> read_series_csv(std::istream& in) {
    auto table = detail::read_dated_csv(in);
    std::vector<std::size_t> order(table.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::ranges::stable_sort(order, [&](auto a, auto b) { return table.dates[a] < table.dates[b]; });

    std::vector<Date> dates;
    for (auto i : order) {
        if (!dates.empty() && dates.back() == table.dates[i])
            throw ValidationError("duplicate date " + format_date(table.dates[i]));
        dates.push_back(table.dates[i]);
    }
    std::vector<NamedSeries> out;
    for (std::size_t c = 1; c < table.header.size(); ++c) {
        std::vector<double> vals;
        vals.reserve(order.size());
        for (auto i : order) {
            const auto& cell = table.rows[i][c - 1];
            if (!cell)
                throw ParseError(table.line_numbers[i], "column '" + table.header[c] + "' is empty");
            vals.push_back(*cell);
        }
        out.push_back({table.header[c], TimeSeries(dates, std::move(vals))});
    }
    return out;
}

inline std::vector<NamedSeries> load_series_csv(const std::string& path) {
    auto in = detail::open_input(path);
    return read_series_csv(in);
}

// ---------------------------------------------------------------------------
// Run configuration

enum class OutputFormat { text, csv };

struct RunConfig {
    std::optional<std::string> input_path;
    std::optional<std::uint64_t> synth_seed;
    std::size_t synth_days = 255;
    /// Multipliers applied to I and R before they enter a regression.
    double i_scale = 1.0;
    double r_scale = 1.0;
    /// Multiplier taking u from kopecks to the regression unit (rubles by default).
    double u_scale = 0.01;
    Date break_date{std::chrono::year{2012}, std::chrono::May, std::chrono::day{10}};
    int max_lag = 5;
    LagCriterion criterion = LagCriterion::schwarz;
    OutputFormat format = OutputFormat::text;

    void validate() const {
        if (input_path.has_value() == synth_seed.has_value())
            throw InvalidArgument("exactly one of an input file or a synthetic seed is required");
        if (!(i_scale > 0.0) || !(r_scale > 0.0) || !(u_scale > 0.0))
            throw InvalidArgument("unit scalings must be positive");
        if (max_lag < 0) throw InvalidArgument("max_lag must be nonnegative");
        if (criterion == LagCriterion::fixed) throw InvalidArgument("analysis needs an automatic lag criterion");
        if (synth_days < 30) throw InvalidArgument("synthetic sample needs at least 30 days");
    }
};

/// `key = value` lines; '#' starts a comment. Later keys override earlier ones.
inline std::map<std::string, std::string> parse_key_values(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = detail::trim(body);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        auto key = detail::trim(body.substr(0, eq));
        auto value = detail::trim(body.substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, "empty key");
        out[detail::lower(key)] = std::string(value);
    }
    return out;
}

inline std::map<std::string, std::string> load_key_values(const std::string& path) {
    auto in = detail::open_input(path);
    return parse_key_values(in);
}

inline LagCriterion parse_criterion(std::string_view text) {
    const auto s = detail::lower(text);
    if (s == "schwarz" || s == "sic") return LagCriterion::schwarz;
    if (s == "akaike" || s == "aic") return LagCriterion::akaike;
    if (s == "hannan_quinn" || s == "hq") return LagCriterion::hannan_quinn;
    throw InvalidArgument("unknown lag criterion '" + std::string(text) + "'");
}

inline OutputFormat parse_format(std::string_view text) {
    const auto s = detail::lower(text);
    if (s == "text") return OutputFormat::text;
    if (s == "csv") return OutputFormat::csv;
    throw InvalidArgument("unknown output format '" + std::string(text) + "'");
}

/// Applies the analysis keys of a key-value map onto `cfg`; unknown keys are
/// left for the caller.
inline void apply_run_config(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
    auto number = [](const std::string& key, const std::string& v) {
        return detail::parse_number(v, 0, key);
    };
    auto count = [&](const std::string& key, const std::string& v) {
        const double x = number(key, v);
        if (x < 0 || x != std::floor(x)) throw InvalidArgument(key + " must be a nonnegative integer");
        return x;
    };
    for (const auto& [key, value] : kv) {
        if (key == "input") cfg.input_path = value;
        else if (key == "synth_seed") cfg.synth_seed = static_cast<std::uint64_t>(count(key, value));
        else if (key == "synth_days") cfg.synth_days = static_cast<std::size_t>(count(key, value));
        else if (key == "i_scale") cfg.i_scale = number(key, value);
        else if (key == "r_scale") cfg.r_scale = number(key, value);
        else if (key == "u_scale") cfg.u_scale = number(key, value);
        else if (key == "break_date") cfg.break_date = parse_date(value);
        else if (key == "maxlag") cfg.max_lag = static_cast<int>(count(key, value));
        else if (key == "lag_criterion") cfg.criterion = parse_criterion(value);
        else if (key == "format") cfg.format = parse_format(value);
    }
}

}  // namespace specloss
