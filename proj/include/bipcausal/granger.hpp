#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipcausal/cleaning.hpp"
#include "bipcausal/stats.hpp"

namespace bipcausal::granger {

enum class FailureReason {
    A, // every candidate X order had a non-finite information criterion
    B, // every X lag was filtered out by the t-test
    C, // the F-test found no added explanatory power
};

char failure_code(FailureReason r);

enum class Variant { Simple, Full };

struct GrangerVerdict {
    Variant variant = Variant::Full;
    bool accepted = false;
    std::optional<std::size_t> longest_significant_lag; // set iff accepted
    std::optional<FailureReason> failure_reason;        // set iff not accepted

    // diagnostics
    std::size_t ar_order = 0;
    std::optional<std::size_t> x_order;       // order picked by the information criterion
    std::vector<std::size_t> surviving_x_lags;
    std::optional<stats::RegressionFit> nested_fit;
    std::optional<stats::RegressionFit> parent_fit;
    std::optional<stats::FTestResult> f_result;

    /// `T (x)` / `F (a|b|c)` cell token, exactly as reported.
    std::string token() const;
};

enum class InfoCriterion { Aic, Bic };

struct GrangerConfig {
    std::size_t pacf_max_lag = 10;
    double pacf_critical = 0.10; // two-sided band level for the AR order
    std::size_t x_max_lag = 10;
    double t_level = 0.05;
    double f_level = 0.05;
    bool simple_intercept = true;
    InfoCriterion ic = InfoCriterion::Bic;
    double ic_margin = 2.0; // smallest X order within this many IC units of the minimum

    GrangerConfig with_max_lag(std::size_t lag) const {
        GrangerConfig c = *this;
        c.pacf_max_lag = lag;
        c.x_max_lag = lag;
        return c;
    }
};

/// AR order of y: the largest lag k <= pacf_max_lag whose partial
/// autocorrelation exceeds the two-sided normal band z/sqrt(n) at the
/// configured level; 0 when none does.
std::size_t select_ar_order(const std::vector<double>& y, const GrangerConfig& cfg);

/// X lag order minimizing the information criterion over orders 1..x_max_lag,
/// all candidates on the common sample implied by max(ar_order, x_max_lag).
/// Parsimony: the smallest order within cfg.ic_margin of the minimum wins
/// (exact ties therefore also resolve to the smallest). Returns nullopt when
/// every candidate is unfittable or has a non-finite criterion (failure A).
std::optional<std::size_t> select_x_order(const std::vector<double>& y,
                                          const std::vector<double>& x, std::size_t ar_order,
                                          const GrangerConfig& cfg);

/// Drops X lags with p >= t_level, refits, repeats; y-lags and the
/// intercept are never dropped. Empty result means failure B.
std::vector<std::size_t> filter_x_lags(const std::vector<double>& y, const std::vector<double>& x,
                                       std::size_t ar_order, std::size_t x_order,
                                       const GrangerConfig& cfg);

/// Four-step test: AR order from the PACF, X order from the information
/// criterion, t-filtering of X lags, then the nested-vs-parent F-test with
/// both models refitted on the identical common sample.
GrangerVerdict full_granger(const std::vector<double>& x, const std::vector<double>& y,
                            const GrangerConfig& cfg);

/// Single-max-order variant: nested = y lags 1..max_lag, parent adds
/// x lags 1..max_lag, straight to the F-test. An accepted verdict always
/// reports max_lag. No t-filtering, so failure B cannot occur here.
GrangerVerdict simple_granger(const std::vector<double>& x, const std::vector<double>& y,
                              std::size_t max_lag, double f_level, bool intercept = true);

// ---------------------------------------------------------------------------
// Verdict matrices
// ---------------------------------------------------------------------------

struct NamedSignal {
    std::string name;
    std::vector<double> values; // aligned to the buckets' month grid
};

struct MatrixCell {
    std::optional<GrangerVerdict> verdict;
    std::optional<std::string> error; // cell-level failure, matrix still produced
};

/// Verdicts for every (bucket, variant, signal) combination at one lag
/// configuration. Columns iterate variants first (Simple block then Full
/// block), signals within each block.
struct CausalityMatrix {
    std::size_t max_lag = 0;
    std::vector<std::string> bucket_labels;
    std::vector<std::string> signal_labels;
    std::vector<MatrixCell> cells; // bucket-major, then variant, then signal

    std::size_t columns() const { return 2 * signal_labels.size(); }
    const MatrixCell& at(std::size_t bucket, Variant variant, std::size_t signal) const {
        const std::size_t v = variant == Variant::Simple ? 0 : 1;
        return cells[(bucket * 2 + v) * signal_labels.size() + signal];
    }
};

/// Runs both variants for every (signal, bucket) pair at the given lag.
/// Cells run independently on a bounded worker pool; ordering of the result
/// is fixed regardless of scheduling.
CausalityMatrix run_causality_matrix(const std::vector<NamedSignal>& signals,
                                     const std::vector<cleaning::CleanedSeries>& buckets,
                                     const GrangerConfig& cfg, std::size_t workers = 0);

} // namespace bipcausal::granger
