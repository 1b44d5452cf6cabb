// Computes u for a synthetic year and tests the first regression for cointegration.

#include <iostream>

#include "specloss/specloss.hpp"

int main() {
    using namespace specloss;

    SynthConfig cfg;
    cfg.seed = 7;
    const auto days = gen_market_days(cfg);

    const auto u = u_series(days, UVariant::by_volume);
    std::cout << "mean u = " << format_stat(mean(u)) << " kopecks, volatility "
              << format_stat(stddev(u)) << " kopecks\n";

    const auto brk = break_analysis(u, parse_date("2012-05-10"));
    std::cout << "u after/before 2012-05-10: " << format_stat(brk.ratio) << "\n\n";

    RunConfig run;
    const auto vars = model_variables(days, run);
    const auto result = engle_granger(model_regression(vars, UVariant::by_volume));
    render_coint(std::cout, result);
}
