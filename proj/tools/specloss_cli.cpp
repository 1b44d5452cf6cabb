// Command-line front end: full analysis plus single-step subcommands.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "specloss/specloss.hpp"

namespace {

using namespace specloss;

enum ExitCode { kOk = 0, kDataError = 1, kNumericalError = 2, kUsageError = 3 };

/// Config-file values for keys the command line did not set.
struct Settings {
    std::map<std::string, std::string> file;

    std::string get(const std::string& key, const CLI::Option* opt, const std::string& flag_value) const {
        if (opt && opt->count() > 0) return flag_value;
        if (auto it = file.find(key); it != file.end()) return it->second;
        return flag_value;
    }
};

/// Variables addressable by name: the six model variables plus raw columns
/// for a market file, or every column of a plain dated CSV.
std::vector<NamedSeries> load_variables(const std::string& path, const RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::istringstream market_in(text);
    try {
        const auto days = read_market_csv(market_in);
        auto vars = model_variables(days, cfg);
        std::istringstream raw_in(text);
        for (auto& raw : read_series_csv(raw_in)) vars.push_back(std::move(raw));
        return vars;
    } catch (const SchemaError&) {
        std::istringstream plain_in(text);
        return read_series_csv(plain_in);
    }
}

std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

RegressionSpec regression_from(const std::vector<NamedSeries>& vars, const std::string& dep,
                               const std::string& regressors, bool constant) {
    RegressionSpec spec;
    spec.dependent = find_variable(vars, dep);
    for (const auto& name : split_names(regressors)) spec.regressors.push_back(find_variable(vars, name));
    if (spec.regressors.empty() && !constant) throw InvalidArgument("no regressors given");
    spec.include_constant = constant;
    return spec;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + out_path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace specloss;
    CLI::App app{"Speculative loss analysis: unit roots, cointegration and OLS diagnostics"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key = value configuration file; flags take precedence");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Run the full analysis");
    std::string a_input, a_break, a_format = "text", a_out, a_criterion = "schwarz";
    std::uint64_t a_seed = 0;
    int a_maxlag = 5;
    auto* a_input_opt = analyze->add_option("--input", a_input, "Market data CSV");
    auto* a_seed_opt = analyze->add_option("--synth-seed", a_seed, "Analyse a synthetic dataset with this seed");
    auto* a_break_opt = analyze->add_option("--break-date", a_break, "Break date for the u comparison (YYYY-MM-DD)");
    auto* a_maxlag_opt = analyze->add_option("--maxlag", a_maxlag, "Maximum ADF lag")->check(CLI::NonNegativeNumber);
    auto* a_format_opt = analyze->add_option("--format", a_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    auto* a_crit_opt = analyze->add_option("--criterion", a_criterion, "schwarz, akaike or hannan_quinn");
    analyze->add_option("--out", a_out, "Write the report here instead of stdout");
    a_input_opt->excludes(a_seed_opt);

    // adf
    auto* adf = app.add_subcommand("adf", "ADF unit-root test on one column");
    std::string d_input, d_column, d_format = "text";
    int d_maxlag = 5;
    auto* d_input_opt = adf->add_option("--input", d_input, "CSV file");
    auto* d_column_opt = adf->add_option("--column", d_column, "Column or model variable name");
    auto* d_maxlag_opt = adf->add_option("--maxlag", d_maxlag, "Maximum lag")->check(CLI::NonNegativeNumber);
    auto* d_format_opt = adf->add_option("--format", d_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    // ols / coint
    std::string o_input, o_dep, o_regs, o_format = "text";
    bool o_no_const = false;
    int c_maxlag = 5;
    auto* ols = app.add_subcommand("ols", "Least-squares regression table");
    auto* coint = app.add_subcommand("coint", "Engle-Granger cointegration test");
    struct RegressionOptions {
        const CLI::Option *input, *dep, *regressors, *format;
    } reg_opts[2];
    for (int i = 0; i < 2; ++i) {
        auto* sub = i == 0 ? ols : coint;
        reg_opts[i].input = sub->add_option("--input", o_input, "CSV file");
        reg_opts[i].dep = sub->add_option("--dep", o_dep, "Dependent variable");
        reg_opts[i].regressors = sub->add_option("--regressors", o_regs, "Comma-separated regressors");
        reg_opts[i].format = sub->add_option("--format", o_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
        sub->add_flag("--no-constant", o_no_const, "Omit the intercept");
    }
    const CLI::Option* c_maxlag_opt = coint->add_option("--maxlag", c_maxlag, "Maximum lag of the residual test")
                       ->check(CLI::NonNegativeNumber);

    // synth
    auto* synth = app.add_subcommand("synth", "Write a synthetic market dataset");
    std::uint64_t s_seed = 1;
    std::size_t s_days = 255;
    std::string s_out;
    auto* s_seed_opt = synth->add_option("--seed", s_seed, "Generator seed");
    auto* s_days_opt = synth->add_option("--days", s_days, "Number of trading days");
    auto* s_out_opt = synth->add_option("--out", s_out, "Output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        Settings settings;
        if (!config_path.empty()) settings.file = load_key_values(config_path);
        auto require = [](const std::string& v, const char* what) {
            if (v.empty()) throw CLI::RequiredError(what);
            return v;
        };

        if (analyze->parsed()) {
            RunConfig cfg;
            apply_run_config(cfg, settings.file);
            if (a_input_opt->count()) {
                cfg.input_path = a_input;
                cfg.synth_seed.reset();
            }
            if (a_seed_opt->count()) {
                cfg.synth_seed = a_seed;
                cfg.input_path.reset();
            }
            if (a_break_opt->count()) cfg.break_date = parse_date(a_break);
            if (a_maxlag_opt->count()) cfg.max_lag = a_maxlag;
            if (a_format_opt->count()) cfg.format = parse_format(a_format);
            if (a_crit_opt->count()) cfg.criterion = parse_criterion(a_criterion);
            if (!cfg.input_path && !cfg.synth_seed) throw CLI::RequiredError("--input or --synth-seed");
            write_output(render(specloss::analyze(cfg), cfg.format), a_out);
        } else if (adf->parsed()) {
            RunConfig cfg;
            apply_run_config(cfg, settings.file);
            const auto input = require(settings.get("input", d_input_opt, d_input), "--input");
            const auto column = require(settings.get("column", d_column_opt, d_column), "--column");
            AdfSpec spec;
            spec.max_lag = std::stoi(settings.get("maxlag", d_maxlag_opt, std::to_string(d_maxlag)));
            spec.criterion = cfg.criterion;
            const auto vars = load_variables(input, cfg);
            const auto& var = find_variable(vars, column);
            const auto result = adf_test(var.series, spec, var.name);
            std::ostringstream out;
            if (parse_format(settings.get("format", d_format_opt, d_format)) == OutputFormat::csv) {
                TripleWriter w(out);
                emit_adf(w, "adf:" + var.name, result);
            } else {
                render_adf(out, result);
            }
            std::cout << out.str();
        } else if (ols->parsed() || coint->parsed()) {
            RunConfig cfg;
            apply_run_config(cfg, settings.file);
            const auto& opts = reg_opts[ols->parsed() ? 0 : 1];
            const auto input = require(settings.get("input", opts.input, o_input), "--input");
            const auto dep = require(settings.get("dep", opts.dep, o_dep), "--dep");
            const auto regs = settings.get("regressors", opts.regressors, o_regs);
            const auto vars = load_variables(input, cfg);
            const auto spec = regression_from(vars, dep, regs, !o_no_const);
            const bool csv = parse_format(settings.get("format", opts.format, o_format)) == OutputFormat::csv;
            std::ostringstream out;
            if (ols->parsed()) {
                const auto f = fit(spec);
                if (csv) {
                    TripleWriter w(out);
                    emit_ols(w, "ols", f);
                } else {
                    render_ols(out, f);
                }
            } else {
                AdfSpec adf_spec;
                adf_spec.max_lag = std::stoi(settings.get("maxlag", c_maxlag_opt, std::to_string(c_maxlag)));
                adf_spec.criterion = cfg.criterion;
                const auto c = engle_granger(spec, adf_spec);
                if (csv) {
                    TripleWriter w(out);
                    emit_coint(w, "regression", c);
                } else {
                    render_coint(out, c);
                }
            }
            std::cout << out.str();
        } else if (synth->parsed()) {
            SynthConfig sc;
            sc.seed = std::stoull(settings.get("seed", s_seed_opt, std::to_string(s_seed)));
            sc.n_days = std::stoull(settings.get("days", s_days_opt, std::to_string(s_days)));
            const auto out = require(settings.get("out", s_out_opt, s_out), "--out");
            write_market_csv(out, gen_market_days(sc));
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const SingularityError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad number: " << e.what() << '\n';
        return kUsageError;
    }
    return kOk;
}
