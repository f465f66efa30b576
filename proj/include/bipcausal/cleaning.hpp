#pragma once

#include <string>
#include <vector>

#include "bipcausal/stats.hpp"
#include "bipcausal/timeseries.hpp"

namespace bipcausal::cleaning {

/// One removal event inside the significance filter. The intercept is
/// logged under the name "(intercept)".
struct Elimination {
    std::size_t iteration = 0;
    std::string term;
    double p_value = 1.0;
};

struct FilteredModel {
    std::string bucket;
    std::vector<std::string> surviving_features; // input order preserved
    bool intercept_survived = false;
    stats::RegressionFit fit;                    // final refit; empty survivor set leaves it blank
    std::size_t iterations = 0;
    std::vector<Elimination> elimination_log;

    bool empty() const { return surviving_features.empty() && !intercept_survived; }
};

struct CleanedSeries {
    std::string bucket;
    std::vector<Date> months;
    std::vector<double> values; // residual per month
};

/// OLS of the panel's dependent on every feature, intercept included.
stats::RegressionFit fit_global_model(const Panel& panel);

/// Repeatedly fits and drops every regressor (intercept included) whose
/// p-value is >= level, until all remaining regressors are significant or
/// none remain. The empty outcome is valid: the bucket then cleans to
/// itself.
enum class RemovalMode { AllAtOnce, OneAtATime };

FilteredModel iterative_filter(const Panel& panel, double level = 0.05,
                               RemovalMode mode = RemovalMode::AllAtOnce);

/// Residuals of the filtered model on this panel: y minus the surviving
/// terms' predictions. An empty model returns the dependent unchanged.
CleanedSeries extract_cleaned(const FilteredModel& model, const Panel& panel);

} // namespace bipcausal::cleaning
