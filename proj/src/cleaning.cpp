#include "bipcausal/cleaning.hpp"

#include <algorithm>

#include "bipcausal/errors.hpp"

namespace bipcausal::cleaning {

namespace {

stats::RegressionFit fit_subset(const Panel& panel, const std::vector<std::size_t>& active,
                                bool intercept) {
    stats::Matrix cols;
    std::vector<std::string> names;
    cols.reserve(active.size());
    for (std::size_t idx : active) {
        cols.push_back(panel.features[idx].values);
        names.push_back(panel.features[idx].name);
    }
    return stats::ols_fit(cols, panel.dependent.values, intercept, &names);
}

} // namespace

stats::RegressionFit fit_global_model(const Panel& panel) {
    if (panel.rows() <= panel.feature_count() + 1)
        throw InsufficientDataError("fit_global_model: " + std::to_string(panel.rows()) +
                                    " rows for " + std::to_string(panel.feature_count()) +
                                    " features");
    std::vector<std::size_t> all(panel.feature_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return fit_subset(panel, all, true);
}

FilteredModel iterative_filter(const Panel& panel, double level, RemovalMode mode) {
    FilteredModel out;
    out.bucket = panel.dependent.name;

    std::vector<std::size_t> active(panel.feature_count());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
    bool intercept = true;

    while (true) {
        if (active.empty() && !intercept) break;
        ++out.iterations;
        const stats::RegressionFit fit = fit_subset(panel, active, intercept);
        const std::size_t off = intercept ? 1 : 0;

        struct Candidate {
            bool is_intercept;
            std::size_t pos; // position in `active`
            double p;
        };
        std::vector<Candidate> doomed;
        if (intercept && fit.p_values[0] >= level) doomed.push_back({true, 0, fit.p_values[0]});
        for (std::size_t j = 0; j < active.size(); ++j)
            if (fit.p_values[off + j] >= level) doomed.push_back({false, j, fit.p_values[off + j]});

        if (doomed.empty()) {
            out.fit = fit;
            break;
        }
        if (mode == RemovalMode::OneAtATime) {
            auto worst = std::max_element(doomed.begin(), doomed.end(),
                                          [](const Candidate& a, const Candidate& b) {
                                              return a.p < b.p;
                                          });
            doomed = {*worst};
        }
        std::vector<std::size_t> dropped_positions;
        for (const Candidate& c : doomed) {
            if (c.is_intercept) {
                intercept = false;
                out.elimination_log.push_back({out.iterations, "(intercept)", c.p});
            } else {
                dropped_positions.push_back(c.pos);
                out.elimination_log.push_back(
                    {out.iterations, panel.features[active[c.pos]].name, c.p});
            }
        }
        std::sort(dropped_positions.rbegin(), dropped_positions.rend());
        for (std::size_t pos : dropped_positions)
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
    }

    out.intercept_survived = intercept && !(active.empty() && !intercept);
    if (active.empty() && !intercept) out.intercept_survived = false;
    for (std::size_t idx : active) out.surviving_features.push_back(panel.features[idx].name);
    return out;
}

CleanedSeries extract_cleaned(const FilteredModel& model, const Panel& panel) {
    if (model.bucket != panel.dependent.name)
        throw ConfigError("extract_cleaned: model for '" + model.bucket +
                          "' applied to panel of '" + panel.dependent.name + "'");

    CleanedSeries out;
    out.bucket = model.bucket;
    out.months = panel.months;

    if (model.empty()) {
        out.values = panel.dependent.values;
        return out;
    }

    std::vector<const std::vector<double>*> cols;
    for (const std::string& name : model.surviving_features) {
        auto it = std::find_if(panel.features.begin(), panel.features.end(),
                               [&](const PanelColumn& c) { return c.name == name; });
        if (it == panel.features.end())
            throw ConfigError("extract_cleaned: panel lacks surviving feature '" + name + "'");
        cols.push_back(&it->values);
    }

    const std::size_t off = model.intercept_survived ? 1 : 0;
    out.values.resize(panel.rows());
    for (std::size_t i = 0; i < panel.rows(); ++i) {
        double pred = model.intercept_survived ? model.fit.coefficients[0] : 0.0;
        for (std::size_t j = 0; j < cols.size(); ++j)
            pred += model.fit.coefficients[off + j] * (*cols[j])[i];
        out.values[i] = panel.dependent.values[i] - pred;
    }
    return out;
}

} // namespace bipcausal::cleaning
