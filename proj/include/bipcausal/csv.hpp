#pragma once

#include <string>
#include <vector>

#include "bipcausal/timeseries.hpp"

namespace bipcausal::csv {

struct LoadResult {
    TimeSeries series;
    std::vector<std::string> warnings;
};

/// Reads a two-column `date,value` CSV (header required, ISO dates, rows in
/// any order). Rows are sorted on load; duplicate dates keep the last row
/// in file order with a warning. Unparseable rows and empty files raise
/// ParseError with the file and line.
LoadResult load_series(const std::string& path, const std::string& label, Frequency freq);

/// Writes `date,value` (dates ISO, values with 12 significant digits).
void write_series(const std::string& path, const TimeSeries& ts);

/// Writes `month,value` pairs for month-gridded data such as cleaned series
/// and event signals.
void write_monthly(const std::string& path, const std::vector<Date>& months,
                   const std::vector<double>& values);

/// Fixed-precision value formatting used by every emitted file, so that
/// identical runs serialize byte-identically.
std::string format_value(double v);

} // namespace bipcausal::csv
