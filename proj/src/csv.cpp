#include "bipcausal/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "bipcausal/errors.hpp"

namespace bipcausal::csv {

LoadResult load_series(const std::string& path, const std::string& label, Frequency freq) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");

    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<Date, double>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (line != "date,value")
                throw ParseError("'" + path + "' line 1: expected header 'date,value', got '" +
                                 line + "'");
            continue;
        }
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("'" + path + "' line " + std::to_string(lineno) + ": missing comma");
        Date d;
        try {
            d = Date::parse(line.substr(0, comma));
        } catch (const ParseError& e) {
            throw ParseError("'" + path + "' line " + std::to_string(lineno) + ": " + e.what());
        }
        const std::string vs = line.substr(comma + 1);
        char* end = nullptr;
        const double v = std::strtod(vs.c_str(), &end);
        if (end == vs.c_str() || *end != '\0' || !std::isfinite(v))
            throw ParseError("'" + path + "' line " + std::to_string(lineno) + ": bad value '" +
                             vs + "'");
        rows.emplace_back(d, v);
    }
    if (rows.empty()) throw ParseError("'" + path + "': no data rows");

    LoadResult out;
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<DatedValue> points;
    points.reserve(rows.size());
    for (const auto& [d, v] : rows) {
        if (!points.empty() && points.back().date == d) {
            out.warnings.push_back("'" + path + "': duplicate date " + d.to_string() +
                                   ", keeping the last row");
            points.back().value = v; // last write wins (stable sort keeps file order)
        } else {
            points.push_back({d, v});
        }
    }
    out.series = TimeSeries(label, freq, std::move(points));
    return out;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_series(const std::string& path, const TimeSeries& ts) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream outf(path);
    if (!outf) throw ParseError("cannot write '" + path + "'");
    outf << "date,value\n";
    for (const auto& p : ts.points()) outf << p.date.to_string() << "," << format_value(p.value) << "\n";
}

void write_monthly(const std::string& path, const std::vector<Date>& months,
                   const std::vector<double>& values) {
    if (months.size() != values.size())
        throw AlignmentError("write_monthly: month and value counts differ");
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream outf(path);
    if (!outf) throw ParseError("cannot write '" + path + "'");
    outf << "month,value\n";
    for (std::size_t i = 0; i < months.size(); ++i)
        outf << months[i].to_string() << "," << format_value(values[i]) << "\n";
}

} // namespace bipcausal::csv
