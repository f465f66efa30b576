#include "bipcausal/granger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bipcausal/errors.hpp"
#include "bipcausal/parallel.hpp"

namespace bipcausal::granger {

namespace {

// Lagged design over rows L..n-1: intercept, y lags 1..ar_order, then the
// given x lags. Returns the truncated dependent alongside.
struct LaggedDesign {
    stats::Matrix cols;
    std::vector<double> y;
};

LaggedDesign lagged_design(const std::vector<double>& y, const std::vector<double>& x,
                           std::size_t ar_order, const std::vector<std::size_t>& x_lags,
                           std::size_t start) {
    const std::size_t rows = y.size() - start;
    LaggedDesign d;
    d.y.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) d.y[i] = y[start + i];
    for (std::size_t lag = 1; lag <= ar_order; ++lag) {
        std::vector<double> col(rows);
        for (std::size_t i = 0; i < rows; ++i) col[i] = y[start + i - lag];
        d.cols.push_back(std::move(col));
    }
    for (std::size_t lag : x_lags) {
        std::vector<double> col(rows);
        for (std::size_t i = 0; i < rows; ++i) col[i] = x[start + i - lag];
        d.cols.push_back(std::move(col));
    }
    return d;
}

double scale_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::fabs(x));
    return std::max(1.0, s);
}

double criterion(const GrangerConfig& cfg, double rss, std::size_t n, std::size_t k) {
    return cfg.ic == InfoCriterion::Aic ? stats::aic(rss, n, k) : stats::bic(rss, n, k);
}

} // namespace

char failure_code(FailureReason r) {
    switch (r) {
        case FailureReason::A: return 'a';
        case FailureReason::B: return 'b';
        case FailureReason::C: return 'c';
    }
    return '?';
}

std::string GrangerVerdict::token() const {
    if (accepted) return "T (" + std::to_string(*longest_significant_lag) + ")";
    return std::string("F (") + failure_code(*failure_reason) + ")";
}

std::size_t select_ar_order(const std::vector<double>& y, const GrangerConfig& cfg) {
    const std::vector<double> pac = stats::pacf(y, cfg.pacf_max_lag);
    const double z = stats::normal_quantile(1.0 - cfg.pacf_critical / 2.0);
    const double crit = z / std::sqrt(static_cast<double>(y.size()));
    for (std::size_t k = cfg.pacf_max_lag; k >= 1; --k)
        if (std::fabs(pac[k - 1]) > crit) return k;
    return 0;
}

std::optional<std::size_t> select_x_order(const std::vector<double>& y,
                                          const std::vector<double>& x, std::size_t ar_order,
                                          const GrangerConfig& cfg) {
    if (x.size() != y.size())
        throw AlignmentError("select_x_order: series lengths differ");
    const std::size_t start = std::max(ar_order, cfg.x_max_lag);
    std::vector<std::pair<std::size_t, double>> candidates;
    std::vector<std::size_t> lags;
    for (std::size_t q = 1; q <= cfg.x_max_lag; ++q) {
        lags.push_back(q);
        LaggedDesign d = lagged_design(y, x, ar_order, lags, start);
        stats::RegressionFit fit;
        try {
            fit = stats::ols_fit(d.cols, d.y, true);
        } catch (const Error&) {
            continue; // rank-deficient candidates are skipped
        }
        const double ic = criterion(cfg, fit.rss, d.y.size(), d.cols.size() + 1);
        if (std::isfinite(ic) || ic == -std::numeric_limits<double>::infinity())
            candidates.emplace_back(q, ic);
    }
    if (candidates.empty()) return std::nullopt;
    double best = candidates.front().second;
    for (const auto& [q, ic] : candidates) best = std::min(best, ic);
    for (const auto& [q, ic] : candidates)
        if (ic <= best + cfg.ic_margin) return q; // candidates are in increasing q
    return std::nullopt;
}

std::vector<std::size_t> filter_x_lags(const std::vector<double>& y, const std::vector<double>& x,
                                       std::size_t ar_order, std::size_t x_order,
                                       const GrangerConfig& cfg) {
    if (x_order == 0) throw DomainError("filter_x_lags: x_order must be >= 1");
    const std::size_t start = std::max(ar_order, cfg.x_max_lag);
    std::vector<std::size_t> surviving;
    for (std::size_t q = 1; q <= x_order; ++q) surviving.push_back(q);

    while (!surviving.empty()) {
        LaggedDesign d = lagged_design(y, x, ar_order, surviving, start);
        const stats::RegressionFit fit = stats::ols_fit(d.cols, d.y, true);
        const std::size_t off = 1 + ar_order;
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < surviving.size(); ++j)
            if (fit.p_values[off + j] < cfg.t_level) keep.push_back(surviving[j]);
        if (keep.size() == surviving.size()) break;
        surviving = std::move(keep);
    }
    return surviving;
}

GrangerVerdict full_granger(const std::vector<double>& x, const std::vector<double>& y,
                            const GrangerConfig& cfg) {
    if (x.size() != y.size())
        throw AlignmentError("full_granger: series lengths differ");
    if (y.size() <= cfg.pacf_max_lag + cfg.x_max_lag + 2)
        throw LengthError("full_granger: series of length " + std::to_string(y.size()) +
                          " too short for pacf_max_lag " + std::to_string(cfg.pacf_max_lag) +
                          " and x_max_lag " + std::to_string(cfg.x_max_lag));

    GrangerVerdict v;
    v.variant = Variant::Full;
    v.ar_order = select_ar_order(y, cfg);
    const std::size_t start = std::max(v.ar_order, cfg.x_max_lag);

    const auto x_order = select_x_order(y, x, v.ar_order, cfg);
    if (!x_order) {
        v.failure_reason = FailureReason::A;
        return v;
    }
    v.x_order = *x_order;

    std::vector<std::size_t> surviving;
    try {
        surviving = filter_x_lags(y, x, v.ar_order, *x_order, cfg);
    } catch (const SingularityError&) {
        v.failure_reason = FailureReason::A;
        return v;
    }
    if (surviving.empty()) {
        v.failure_reason = FailureReason::B;
        return v;
    }
    v.surviving_x_lags = surviving;

    LaggedDesign dn = lagged_design(y, x, v.ar_order, {}, start);
    LaggedDesign dp = lagged_design(y, x, v.ar_order, surviving, start);
    const stats::RegressionFit nested = stats::ols_fit(dn.cols, dn.y, true);
    const stats::RegressionFit parent = stats::ols_fit(dp.cols, dp.y, true);
    v.nested_fit = nested;
    v.parent_fit = parent;

    if (parent.rss <= 1e-14 * scale_of(dp.y)) {
        // exact parent fit: infinite F, unambiguous acceptance
        v.accepted = true;
        v.longest_significant_lag = *std::max_element(surviving.begin(), surviving.end());
        return v;
    }
    const stats::FTestResult f = stats::f_test_nested(nested, parent);
    v.f_result = f;
    if (f.p_value < cfg.f_level) {
        v.accepted = true;
        v.longest_significant_lag = *std::max_element(surviving.begin(), surviving.end());
    } else {
        v.failure_reason = FailureReason::C;
    }
    return v;
}

GrangerVerdict simple_granger(const std::vector<double>& x, const std::vector<double>& y,
                              std::size_t max_lag, double f_level, bool intercept) {
    if (x.size() != y.size())
        throw AlignmentError("simple_granger: series lengths differ");
    if (max_lag == 0) throw DomainError("simple_granger: max_lag must be >= 1");
    if (y.size() <= 2 * max_lag + 2)
        throw LengthError("simple_granger: series of length " + std::to_string(y.size()) +
                          " too short for max_lag " + std::to_string(max_lag));

    GrangerVerdict v;
    v.variant = Variant::Simple;
    v.ar_order = max_lag;

    std::vector<std::size_t> all_lags;
    for (std::size_t q = 1; q <= max_lag; ++q) all_lags.push_back(q);

    LaggedDesign dn = lagged_design(y, x, max_lag, {}, max_lag);
    LaggedDesign dp = lagged_design(y, x, max_lag, all_lags, max_lag);

    stats::RegressionFit nested, parent;
    try {
        nested = stats::ols_fit(dn.cols, dn.y, intercept);
        parent = stats::ols_fit(dp.cols, dp.y, intercept);
    } catch (const SingularityError&) {
        // an exact-copy x duplicates the y-lag columns; the verdict is still
        // unambiguous when the combined column space predicts y perfectly
        if (stats::projection_rss(dp.cols, dp.y, intercept) <= 1e-14 * scale_of(dp.y)) {
            v.accepted = true;
            v.longest_significant_lag = max_lag;
            v.surviving_x_lags = all_lags;
            return v;
        }
        v.failure_reason = FailureReason::A; // parent unfittable
        return v;
    } catch (const Error&) {
        v.failure_reason = FailureReason::A;
        return v;
    }
    v.nested_fit = nested;
    v.parent_fit = parent;
    v.x_order = max_lag;

    if (parent.rss <= 1e-14 * scale_of(dp.y)) {
        v.accepted = true;
        v.longest_significant_lag = max_lag;
        v.surviving_x_lags = all_lags;
        return v;
    }
    const stats::FTestResult f = stats::f_test_nested(nested, parent);
    v.f_result = f;
    if (f.p_value < f_level) {
        v.accepted = true;
        v.longest_significant_lag = max_lag; // by construction for this variant
        v.surviving_x_lags = all_lags;
    } else {
        v.failure_reason = FailureReason::C;
    }
    return v;
}

CausalityMatrix run_causality_matrix(const std::vector<NamedSignal>& signals,
                                     const std::vector<cleaning::CleanedSeries>& buckets,
                                     const GrangerConfig& cfg, std::size_t workers) {
    CausalityMatrix m;
    m.max_lag = cfg.x_max_lag;
    for (const auto& b : buckets) m.bucket_labels.push_back(b.bucket);
    for (const auto& s : signals) m.signal_labels.push_back(s.name);
    m.cells.resize(buckets.size() * 2 * signals.size());

    parallel_for(m.cells.size(), workers, [&](std::size_t idx) {
        const std::size_t signal = idx % signals.size();
        const std::size_t v = (idx / signals.size()) % 2;
        const std::size_t bucket = idx / (2 * signals.size());
        MatrixCell& cell = m.cells[idx];
        try {
            if (signals[signal].values.size() != buckets[bucket].values.size())
                throw AlignmentError("causality cell: signal '" + signals[signal].name +
                                     "' and bucket '" + buckets[bucket].bucket +
                                     "' grids differ");
            if (v == 0)
                cell.verdict = simple_granger(signals[signal].values, buckets[bucket].values,
                                              cfg.x_max_lag, cfg.f_level, cfg.simple_intercept);
            else
                cell.verdict = full_granger(signals[signal].values, buckets[bucket].values, cfg);
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    });
    return m;
}

} // namespace bipcausal::granger
