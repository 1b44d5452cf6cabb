#pragma once

// Generated from data/*.txt by tools/embed_tables.py; keep byte-identical.

#include <string_view>

namespace specloss::tables {

inline constexpr std::string_view kTauCriticalTable = R"TABLE(# format: specloss-table v1
# Finite-sample Dickey-Fuller tau critical values, response surface
#   cv(T) = beta_inf + beta_1/T + beta_2/T^2 + beta_3/T^3
# Source: J.G. MacKinnon (2010), "Critical Values for Cointegration Tests",
#   Queen's Economics Department Working Paper No. 1227, constant-only case.
# n_variables = 1 is the plain unit-root test.
# columns: case n_variables level beta_inf beta_1 beta_2 beta_3
c 1 0.01 -3.43035 -6.5393 -16.786 -79.433
c 1 0.05 -2.86154 -2.8903 -4.234 -40.040
c 1 0.10 -2.56677 -1.5384 -2.809 0
c 2 0.01 -3.89644 -10.9519 -33.527 0
c 2 0.05 -3.33613 -6.1101 -6.823 0
c 2 0.10 -3.04445 -4.2412 -2.720 0
c 3 0.01 -4.29374 -14.4354 -33.195 47.433
c 3 0.05 -3.74066 -8.5632 -10.852 27.982
c 3 0.10 -3.45218 -6.2143 -3.718 0
c 4 0.01 -4.64332 -18.1031 -37.972 0
c 4 0.05 -4.09600 -11.2349 -11.175 0
c 4 0.10 -3.81020 -8.3931 -4.137 0
c 5 0.01 -4.95756 -21.8883 -45.142 0
c 5 0.05 -4.41519 -14.0405 -12.575 0
c 5 0.10 -4.13157 -10.7417 -3.784 0
c 6 0.01 -5.24568 -25.6688 -57.737 88.639
c 6 0.05 -4.70693 -16.9178 -17.492 60.007
c 6 0.10 -4.42501 -13.1875 -5.104 27.877
)TABLE";

inline constexpr std::string_view kTauPvalueTable = R"TABLE(# format: specloss-table v1
# Asymptotic p-value response surfaces for Dickey-Fuller tau statistics,
#   p(t) = Phi(g0 + g1*t + g2*t^2 [+ g3*t^3])
# with the small-p polynomial used for t <= tau_star and the large-p
# polynomial above it; p = 0 below tau_min and p = 1 above tau_max.
# Source: J.G. MacKinnon (1994), "Approximate Asymptotic Distribution
#   Functions for Unit-Root and Cointegration Tests", Journal of Business
#   and Economic Statistics 12(2), 167-176; constant-only case.
# columns: case n_variables tau_min tau_star tau_max s0 s1 s2 l0 l1 l2 l3
c 1 -18.83 -1.61 2.74 2.1659 1.4412 0.038269 1.7339 0.93202 -0.12745 -0.010368
c 2 -18.86 -2.62 0.92 2.92 1.5012 0.039796 2.1945 0.64695 -0.29198 -0.042377
c 3 -23.48 -3.13 0.55 3.4699 1.4856 0.03164 2.5893 0.45168 -0.36529 -0.050074
c 4 -28.07 -3.47 0.61 3.9673 1.4777 0.026315 3.0387 0.45452 -0.33666 -0.041921
c 5 -25.96 -3.78 0.79 4.5509 1.5338 0.029545 3.5049 0.52098 -0.29158 -0.033468
c 6 -23.27 -3.93 1.00 5.1399 1.6036 0.034445 3.9489 0.58933 -0.25359 -0.02721
)TABLE";

inline constexpr std::string_view kCointCriticalTable = R"TABLE(# format: specloss-table v1
# Asymptotic critical values for residual-based (Engle-Granger) cointegration
# tests, regression with a constant term.
# Source: R. Davidson and J.G. MacKinnon (1993), "Estimation and Inference in
#   Econometrics", Oxford University Press, Table 20.2; reproduced in
#   M. Verbeek (2004), "A Guide to Modern Econometrics", 2nd ed., p. 316.
# n_variables counts the dependent variable and every non-constant regressor.
# columns: case n_variables cv_0.01 cv_0.05 cv_0.10
c 2 -3.90 -3.34 -3.04
c 3 -4.29 -3.74 -3.45
c 4 -4.64 -4.10 -3.81
c 5 -4.96 -4.42 -4.13
c 6 -5.25 -4.71 -4.42
)TABLE";

}  // namespace specloss::tables
