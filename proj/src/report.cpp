#include "bipcausal/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "bipcausal/errors.hpp"

namespace bipcausal::report {

namespace {

std::string render_text(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows);

} // namespace

std::string render_text_table(const std::vector<std::string>& header,
                              const std::vector<std::vector<std::string>>& rows) {
    return render_text(header, rows);
}

namespace {

std::string render_text(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c == 0 ? "" : "  ");
            out << row[c];
            out << std::string(widths[c] - row[c].size(), ' ');
        }
        out << "\n";
    };
    emit_row(header);
    std::size_t total = 0;
    for (std::size_t c = 0; c < widths.size(); ++c) total += widths[c] + (c == 0 ? 0 : 2);
    out << std::string(total, '-') << "\n";
    for (const auto& row : rows) emit_row(row);
    return out.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c == 0 ? "" : ",") << csv_escape(row[c]);
        out << "\n";
    };
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
    return out.str();
}

} // namespace

std::string format_pvalue(double p, double level) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%.5f", p);
    std::string s = buf;
    if (p < level) s += "*";
    return s;
}

Table pvalue_table(const std::vector<std::string>& feature_labels,
                   const std::vector<std::string>& bucket_labels,
                   const std::vector<std::vector<double>>& pvalues, double level) {
    if (pvalues.size() != feature_labels.size())
        throw AlignmentError("pvalue_table: row count does not match feature labels");
    std::vector<std::string> header = {""};
    header.insert(header.end(), bucket_labels.begin(), bucket_labels.end());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t f = 0; f < feature_labels.size(); ++f) {
        if (pvalues[f].size() != bucket_labels.size())
            throw AlignmentError("pvalue_table: column count does not match bucket labels");
        std::vector<std::string> row = {feature_labels[f]};
        for (double p : pvalues[f]) row.push_back(format_pvalue(p, level));
        rows.push_back(std::move(row));
    }
    return {render_text(header, rows), render_csv(header, rows)};
}

Table causality_table(const granger::CausalityMatrix& matrix) {
    std::vector<std::string> header = {""};
    for (const char* variant : {"Simple Test", "Full Test"})
        for (const auto& s : matrix.signal_labels)
            header.push_back(std::string(variant) + ", " + s);

    std::vector<std::vector<std::string>> rows;
    for (std::size_t b = 0; b < matrix.bucket_labels.size(); ++b) {
        std::vector<std::string> row = {matrix.bucket_labels[b]};
        for (auto variant : {granger::Variant::Simple, granger::Variant::Full}) {
            for (std::size_t s = 0; s < matrix.signal_labels.size(); ++s) {
                const auto& cell = matrix.at(b, variant, s);
                row.push_back(cell.verdict ? cell.verdict->token() : "ERR");
            }
        }
        rows.push_back(std::move(row));
    }

    Table t{render_text(header, rows), render_csv(header, rows)};
    t.text += kCausalityLegend;
    return t;
}

const char* kCausalityLegend =
    "\n"
    "T (x): causality accepted; x is the longest significant lag (months) of the\n"
    "       independent variable in the parent model. The Simple test reports its\n"
    "       configured maximum lag by construction.\n"
    "F (a): no model with lagged terms of the independent variable could be\n"
    "       selected; every candidate had a non-finite information criterion.\n"
    "F (b): every lagged term of the independent variable was filtered out as\n"
    "       insignificant by the t-test (Full test only; the Simple test performs\n"
    "       no t-filtering, so code b cannot occur in its columns).\n"
    "F (c): the lagged terms of the independent variable add no explanatory power\n"
    "       according to the F-test.\n";

Table cointegration_table(const coint::CointegrationMatrix& matrix) {
    std::vector<std::string> header = {""};
    header.insert(header.end(), matrix.bucket_labels.begin(), matrix.bucket_labels.end());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t f = 0; f < matrix.feature_labels.size(); ++f) {
        std::vector<std::string> row = {matrix.feature_labels[f]};
        for (std::size_t b = 0; b < matrix.bucket_labels.size(); ++b) {
            const auto& cell = matrix.at(f, b);
            if (cell.shared_months == 0)
                row.push_back("ERR");
            else if (cell.degenerate)
                row.push_back("yes*");
            else
                row.push_back(cell.cointegrated_at_5pct ? "yes" : "no");
        }
        rows.push_back(std::move(row));
    }
    return {render_text(header, rows), render_csv(header, rows)};
}

} // namespace bipcausal::report
