#pragma once

// Umbrella header.
#include "specloss/analysis.hpp"
#include "specloss/cointegration.hpp"
#include "specloss/critical_values.hpp"
#include "specloss/dataio.hpp"
#include "specloss/distributions.hpp"
#include "specloss/error.hpp"
#include "specloss/market_model.hpp"
#include "specloss/ols.hpp"
#include "specloss/report.hpp"
#include "specloss/series.hpp"
#include "specloss/synth.hpp"
#include "specloss/unit_root.hpp"
