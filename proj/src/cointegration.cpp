#include "bipcausal/cointegration.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bipcausal/errors.hpp"
#include "bipcausal/log.hpp"

namespace bipcausal::coint {

CointegrationResult engle_granger(const TimeSeries& x, const TimeSeries& y,
                                  std::size_t adf_max_lag) {
    std::map<Date, double> xs;
    for (const auto& p : x.points()) xs[p.date.month_key()] = p.value;

    std::vector<double> xv, yv;
    for (const auto& p : y.points()) {
        auto it = xs.find(p.date.month_key());
        if (it == xs.end()) continue;
        xv.push_back(it->second);
        yv.push_back(p.value);
    }
    if (xv.size() < 30)
        throw AlignmentError("engle_granger: '" + x.label() + "' and '" + y.label() +
                             "' share only " + std::to_string(xv.size()) +
                             " months, need at least 30");

    CointegrationResult r;
    r.feature_label = x.label();
    r.bucket_label = y.label();
    r.shared_months = xv.size();
    r.step1_fit = stats::ols_fit({xv}, yv, true);

    double scale = 0.0;
    for (double v : yv) scale = std::max(scale, std::fabs(v));
    double max_resid = 0.0;
    for (double e : r.step1_fit.residuals) max_resid = std::max(max_resid, std::fabs(e));
    if (max_resid <= 1e-12 * std::max(1.0, scale)) {
        // exact linear relationship: nothing left to test
        r.degenerate = true;
        r.cointegrated_at_5pct = true;
        return r;
    }

    const std::size_t lag = std::min(adf_max_lag, r.step1_fit.residuals.size() / 3);
    r.adf = stats::adf_test(r.step1_fit.residuals, lag, stats::AdfVariant::CointResidual);
    r.cointegrated_at_5pct = r.adf.reject_unit_root;
    return r;
}

CointegrationMatrix screen_all_pairs(const std::vector<TimeSeries>& features,
                                     const std::vector<TimeSeries>& buckets,
                                     std::size_t adf_max_lag) {
    CointegrationMatrix m;
    for (const auto& f : features) m.feature_labels.push_back(f.label());
    for (const auto& b : buckets) m.bucket_labels.push_back(b.label());
    m.cells.resize(features.size() * buckets.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        for (std::size_t j = 0; j < buckets.size(); ++j) {
            auto& cell = m.cells[i * buckets.size() + j];
            try {
                cell = engle_granger(features[i], buckets[j], adf_max_lag);
                if (!cell.cointegrated_at_5pct)
                    log::warn("cointegration: pair ('" + features[i].label() + "', '" +
                              buckets[j].label() + "') not cointegrated at 5%");
            } catch (const Error& e) {
                cell.feature_label = features[i].label();
                cell.bucket_label = buckets[j].label();
                m.errors.push_back(e.what());
                log::warn(std::string("cointegration: ") + e.what());
            }
        }
    }
    return m;
}

} // namespace bipcausal::coint
