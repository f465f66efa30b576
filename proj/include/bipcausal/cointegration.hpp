#pragma once

#include <string>
#include <vector>

#include "bipcausal/stats.hpp"
#include "bipcausal/timeseries.hpp"

namespace bipcausal::coint {

struct CointegrationResult {
    std::string feature_label;
    std::string bucket_label;
    stats::RegressionFit step1_fit;  // y on x with intercept
    stats::AdfResult adf;            // on step-1 residuals
    bool cointegrated_at_5pct = false;
    bool degenerate = false;         // residuals identically ~0 (e.g. y == x)
    std::size_t shared_months = 0;
};

/// Engle-Granger two-step test: OLS of y on x (with intercept) over the
/// months both series share, then an ADF (constant-only regression,
/// cointegration-residual critical values) on the residuals. Requires at
/// least 30 shared months. An exact linear relationship short-circuits to
/// cointegrated with the degenerate flag set.
CointegrationResult engle_granger(const TimeSeries& x, const TimeSeries& y,
                                  std::size_t adf_max_lag = 10);

/// Full feature x bucket cross product. Per-pair failures are converted to
/// warnings and recorded in `errors`; the matrix keeps its full shape with
/// row-major ordering (feature index, then bucket index).
struct CointegrationMatrix {
    std::vector<std::string> feature_labels;
    std::vector<std::string> bucket_labels;
    std::vector<CointegrationResult> cells; // feature-major
    std::vector<std::string> errors;        // per-pair error messages

    const CointegrationResult& at(std::size_t feature, std::size_t bucket) const {
        return cells[feature * bucket_labels.size() + bucket];
    }
};

CointegrationMatrix screen_all_pairs(const std::vector<TimeSeries>& features,
                                     const std::vector<TimeSeries>& buckets,
                                     std::size_t adf_max_lag = 10);

} // namespace bipcausal::coint
