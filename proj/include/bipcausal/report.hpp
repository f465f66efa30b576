#pragma once

#include <string>
#include <vector>

#include "bipcausal/cointegration.hpp"
#include "bipcausal/granger.hpp"

namespace bipcausal::report {

struct Table {
    std::string text; // human-readable aligned table
    std::string csv;  // same cells, comma-separated
};

/// p-value grid with features as rows and buckets as columns. Cells carry
/// the p-value rounded to 5 decimals, with a trailing asterisk when the
/// value is strictly below `level` (e.g. `0.01864*`).
Table pvalue_table(const std::vector<std::string>& feature_labels,
                   const std::vector<std::string>& bucket_labels,
                   const std::vector<std::vector<double>>& pvalues, double level);

/// Verdict grid with buckets as rows; one column per (variant, signal),
/// Simple block first. Cells are the exact `T (x)` / `F (a|b|c)` tokens;
/// errored cells render as `ERR`. Includes the verdict legend. Failure
/// code b cannot occur in the Simple block (no t-filtering there).
Table causality_table(const granger::CausalityMatrix& matrix);

/// Cointegration screen: features as rows, buckets as columns, cells
/// `yes`/`no` (`yes*` for degenerate exact fits, `ERR` for failed pairs).
Table cointegration_table(const coint::CointegrationMatrix& matrix);

/// One cell of the p-value table: fixed 5 decimals plus the asterisk mark.
std::string format_pvalue(double p, double level);

/// Aligned text rendering of arbitrary cells (first header entry is the
/// row-label column).
std::string render_text_table(const std::vector<std::string>& header,
                              const std::vector<std::vector<std::string>>& rows);

/// Legend appended under every causality table.
extern const char* kCausalityLegend;

} // namespace bipcausal::report
