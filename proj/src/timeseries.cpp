#include "bipcausal/timeseries.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "bipcausal/errors.hpp"

namespace bipcausal {

std::string to_string(Frequency f) {
    switch (f) {
        case Frequency::Daily: return "daily";
        case Frequency::Weekly: return "weekly";
        case Frequency::Monthly: return "monthly";
    }
    return "?";
}

Frequency frequency_from_string(const std::string& s) {
    if (s == "daily") return Frequency::Daily;
    if (s == "weekly") return Frequency::Weekly;
    if (s == "monthly") return Frequency::Monthly;
    throw ConfigError("unknown frequency '" + s + "' (expected daily|weekly|monthly)");
}

TimeSeries::TimeSeries(std::string label, Frequency freq, std::vector<DatedValue> points)
    : label_(std::move(label)), frequency_(freq), points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].value))
            throw DomainError("series '" + label_ + "': non-finite value at " +
                              points_[i].date.to_string());
        if (i > 0 && points_[i].date <= points_[i - 1].date)
            throw DomainError("series '" + label_ + "': dates not strictly increasing at " +
                              points_[i].date.to_string());
    }
}

std::vector<double> TimeSeries::values() const {
    std::vector<double> v;
    v.reserve(points_.size());
    for (const auto& p : points_) v.push_back(p.value);
    return v;
}

std::vector<Date> TimeSeries::dates() const {
    std::vector<Date> v;
    v.reserve(points_.size());
    for (const auto& p : points_) v.push_back(p.date);
    return v;
}

TimeSeries TimeSeries::with_label(std::string label) const {
    return TimeSeries(std::move(label), frequency_, points_);
}

TimeSeries diff_transform(const TimeSeries& ts) {
    if (ts.size() < 2)
        throw LengthError("diff_transform: series '" + ts.label() + "' has " +
                          std::to_string(ts.size()) + " points, need at least 2");
    std::vector<DatedValue> out;
    out.reserve(ts.size() - 1);
    for (std::size_t i = 1; i < ts.size(); ++i)
        out.push_back({ts[i].date, ts[i].value - ts[i - 1].value});
    return TimeSeries(ts.label(), ts.frequency(), std::move(out));
}

TimeSeries log_change_transform(const TimeSeries& ts) {
    if (ts.size() < 2)
        throw LengthError("log_change_transform: series '" + ts.label() + "' has " +
                          std::to_string(ts.size()) + " points, need at least 2");
    for (const auto& p : ts.points())
        if (p.value <= 0.0)
            throw DomainError("log_change_transform: series '" + ts.label() +
                              "' has non-positive value at " + p.date.to_string());
    std::vector<DatedValue> out;
    out.reserve(ts.size() - 1);
    for (std::size_t i = 1; i < ts.size(); ++i)
        out.push_back({ts[i].date, std::log(ts[i].value) - std::log(ts[i - 1].value)});
    return TimeSeries(ts.label(), ts.frequency(), std::move(out));
}

TimeSeries downsample_monthly(const TimeSeries& ts) {
    if (ts.empty())
        throw LengthError("downsample_monthly: series '" + ts.label() + "' is empty");
    std::vector<DatedValue> out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const Date key = ts[i].date.month_key();
        // points are date-ordered, so the last observation in each month wins
        if (!out.empty() && out.back().date == key)
            out.back().value = ts[i].value;
        else
            out.push_back({key, ts[i].value});
    }
    return TimeSeries(ts.label(), Frequency::Monthly, std::move(out));
}

Panel build_panel(const TimeSeries& dependent, const std::vector<TimeSeries>& features) {
    // month -> how many series carry it; all series are monthly keyed
    std::map<Date, std::size_t> counts;
    for (const auto& p : dependent.points()) counts[p.date.month_key()]++;
    for (const auto& f : features)
        for (const auto& p : f.points()) counts[p.date.month_key()]++;

    const std::size_t needed = 1 + features.size();
    std::vector<Date> months;
    for (const auto& [month, n] : counts)
        if (n == needed) months.push_back(month);
    if (months.empty())
        throw EmptyPanelError("build_panel: no month shared by '" + dependent.label() +
                              "' and all " + std::to_string(features.size()) + " features");

    auto pick = [&months](const TimeSeries& ts) {
        std::map<Date, double> by_month;
        for (const auto& p : ts.points()) by_month[p.date.month_key()] = p.value;
        std::vector<double> v;
        v.reserve(months.size());
        for (const Date& m : months) v.push_back(by_month.at(m));
        return v;
    };

    Panel panel;
    panel.months = months;
    panel.dependent = {dependent.label(), pick(dependent)};
    panel.features.reserve(features.size());
    for (const auto& f : features) panel.features.push_back({f.label(), pick(f)});
    return panel;
}

} // namespace bipcausal
