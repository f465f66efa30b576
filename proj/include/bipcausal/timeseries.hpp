#pragma once

#include <string>
#include <vector>

#include "bipcausal/date.hpp"

namespace bipcausal {

enum class Frequency { Daily, Weekly, Monthly };

std::string to_string(Frequency f);
Frequency frequency_from_string(const std::string& s);

struct DatedValue {
    Date date;
    double value = 0.0;
};

/// Timestamped numeric observations at a declared frequency. Dates are
/// strictly increasing and values finite; both are enforced on construction.
class TimeSeries {
public:
    TimeSeries() = default;
    TimeSeries(std::string label, Frequency freq, std::vector<DatedValue> points);

    const std::string& label() const { return label_; }
    Frequency frequency() const { return frequency_; }
    const std::vector<DatedValue>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const DatedValue& operator[](std::size_t i) const { return points_[i]; }

    std::vector<double> values() const;
    std::vector<Date> dates() const;

    TimeSeries with_label(std::string label) const;

private:
    std::string label_;
    Frequency frequency_ = Frequency::Daily;
    std::vector<DatedValue> points_;
};

/// First-order differences: out[i] = in[i+1] - in[i], dated at the later
/// point of each pair. Output is one element shorter than the input.
TimeSeries diff_transform(const TimeSeries& ts);

/// Log changes: out[i] = ln(in[i+1]) - ln(in[i]). Requires strictly
/// positive values; a violation names the offending date.
TimeSeries log_change_transform(const TimeSeries& ts);

/// One observation per calendar month present in the input: the last
/// observation within the month, re-dated to the first day of the month.
/// Idempotent.
TimeSeries downsample_monthly(const TimeSeries& ts);

/// Joined monthly dataset: one named column per series over the months
/// where every column has a value.
struct PanelColumn {
    std::string name;
    std::vector<double> values;
};

struct Panel {
    std::vector<Date> months;       // month keys, strictly increasing
    PanelColumn dependent;          // the Y column
    std::vector<PanelColumn> features;

    std::size_t rows() const { return months.size(); }
    std::size_t feature_count() const { return features.size(); }
};

/// Inner join on month keys of the dependent and every feature series.
/// All inputs must already be monthly (dated at month keys). Column order
/// follows input order. Throws EmptyPanelError when no month is shared.
Panel build_panel(const TimeSeries& dependent, const std::vector<TimeSeries>& features);

} // namespace bipcausal
