#pragma once

#include <string>

#include "specloss/critical_values.hpp"
#include "specloss/ols.hpp"
#include "specloss/unit_root.hpp"

namespace specloss {

enum class CointVerdict { cointegrated_at_1, cointegrated_at_5, cointegrated_at_10, not_cointegrated };

inline CointVerdict to_coint_verdict(AdfVerdict v) {
    switch (v) {
        case AdfVerdict::reject_at_1: return CointVerdict::cointegrated_at_1;
        case AdfVerdict::reject_at_5: return CointVerdict::cointegrated_at_5;
        case AdfVerdict::reject_at_10: return CointVerdict::cointegrated_at_10;
        case AdfVerdict::no_reject: return CointVerdict::not_cointegrated;
    }
    return CointVerdict::not_cointegrated;
}

/// Engle-Granger outcome. `residual_test.p_value` comes from the plain
/// unit-root surface and is informational; the verdict uses `critical_values_dm`.
struct CointResult {
    OlsFit stage1;
    AdfResult residual_test;
    CriticalValues critical_values_dm;
    CointVerdict verdict = CointVerdict::not_cointegrated;
};

/// Dependent plus every non-constant regressor.
inline int cointegration_variable_count(const RegressionSpec& spec) {
    return 1 + static_cast<int>(spec.regressors.size());
}

/// Two-step residual-based cointegration test: OLS in levels, then an ADF
/// test (constant, automatic lag) on the residuals judged against the
/// Davidson-MacKinnon asymptotic constants for the variable count.
inline CointResult engle_granger(const RegressionSpec& spec, const AdfSpec& residual_spec = {},
                                 const std::string& residual_name = "RESID") {
    const int n_vars = cointegration_variable_count(spec);
    CointResult out;
    out.critical_values_dm = dm_critical_values(n_vars);
    out.stage1 = fit(spec);
    out.residual_test = adf_test(out.stage1.residuals, residual_spec, residual_name);
    out.verdict = to_coint_verdict(classify(out.residual_test.t_statistic, out.critical_values_dm));
    return out;
}

}  // namespace specloss
