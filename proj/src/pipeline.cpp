#include "bipcausal/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bipcausal/csv.hpp"
#include "bipcausal/errors.hpp"
#include "bipcausal/log.hpp"
#include "bipcausal/parallel.hpp"

namespace bipcausal::pipeline {

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

void write_text(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << content;
}

std::vector<Date> common_months(const std::vector<BucketModel>& models) {
    std::map<Date, std::size_t> counts;
    for (const auto& m : models)
        for (const Date& d : m.cleaned.months) counts[d]++;
    std::vector<Date> grid;
    for (const auto& [d, c] : counts)
        if (c == models.size()) grid.push_back(d);
    return grid;
}

std::vector<double> restrict_to(const cleaning::CleanedSeries& s, const std::vector<Date>& grid) {
    std::map<Date, double> by_month;
    for (std::size_t i = 0; i < s.months.size(); ++i) by_month[s.months[i]] = s.values[i];
    std::vector<double> out;
    out.reserve(grid.size());
    for (const Date& d : grid) out.push_back(by_month.at(d));
    return out;
}

std::string timestamp_utc() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

std::string slug(const std::string& label) {
    std::string out;
    for (char c : label) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        else if (!out.empty() && out.back() != '_')
            out += '_';
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

IngestResult ingest(const PipelineConfig& cfg) {
    IngestResult r;
    for (const auto& spec : cfg.features) {
        auto loaded = csv::load_series(spec.path, spec.label, spec.frequency);
        r.features.push_back(std::move(loaded.series));
        for (auto& w : loaded.warnings) r.warnings.push_back(std::move(w));
    }
    for (const auto& spec : cfg.buckets) {
        auto loaded = csv::load_series(spec.path, spec.label, spec.frequency);
        r.buckets.push_back(std::move(loaded.series));
        for (auto& w : loaded.warnings) r.warnings.push_back(std::move(w));
    }
    for (const auto& w : r.warnings) log::warn(w);
    return r;
}

TimeSeries apply_transform(const TimeSeries& raw, const SeriesSpec& spec) {
    auto transform = [&](const TimeSeries& ts) {
        return spec.transform == Transform::Diff ? diff_transform(ts) : log_change_transform(ts);
    };
    if (spec.order == TransformOrder::DownsampleThenTransform)
        return transform(downsample_monthly(raw));
    return downsample_monthly(transform(raw));
}

namespace {

struct StageWriter {
    const PipelineConfig& cfg;
    fs::path out;

    explicit StageWriter(const PipelineConfig& c) : cfg(c), out(c.output_dir) {
        fs::create_directories(out);
    }

    void config_used(const PipelineConfig& c) const {
        write_text(out / "config_used.json", to_canonical_json(c) + "\n");
    }

    void transformed(const PipelineReport& rep) const {
        for (const auto& ts : rep.transformed_features)
            csv::write_series((out / "transformed" / (slug(ts.label()) + ".csv")).string(), ts);
        for (const auto& ts : rep.transformed_buckets)
            csv::write_series((out / "transformed" / (slug(ts.label()) + ".csv")).string(), ts);
        if (!rep.ingest_warnings.empty()) {
            std::string w;
            for (const auto& s : rep.ingest_warnings) w += s + "\n";
            write_text(out / "ingest_warnings.txt", w);
        }
    }

    void cointegration(const coint::CointegrationMatrix& m) const {
        const report::Table t = report::cointegration_table(m);
        write_text(out / "cointegration.txt", t.text);
        write_text(out / "cointegration.csv", t.csv);
    }

    void models(const PipelineReport& rep) const {
        // per-bucket panel intermediates
        for (const auto& bm : rep.bucket_models) {
            std::ostringstream p;
            p << "month," << bm.panel.dependent.name;
            for (const auto& f : bm.panel.features) p << "," << f.name;
            p << "\n";
            for (std::size_t i = 0; i < bm.panel.rows(); ++i) {
                p << bm.panel.months[i].to_string() << ","
                  << csv::format_value(bm.panel.dependent.values[i]);
                for (const auto& f : bm.panel.features) p << "," << csv::format_value(f.values[i]);
                p << "\n";
            }
            write_text(out / "panels" / (slug(bm.panel.dependent.name) + ".csv"), p.str());
        }

        // global-model p-value table (features x buckets)
        std::vector<std::string> feature_labels, bucket_labels;
        for (const auto& f : cfg.features) feature_labels.push_back(f.label);
        std::vector<std::vector<double>> pvals(feature_labels.size());
        for (const auto& bm : rep.bucket_models) {
            bucket_labels.push_back(bm.panel.dependent.name);
            for (std::size_t f = 0; f < feature_labels.size(); ++f)
                pvals[f].push_back(bm.global_fit.p_values[1 + f]); // skip intercept
        }
        const report::Table t = report::pvalue_table(feature_labels, bucket_labels, pvals, cfg.t_level);
        write_text(out / "global_pvalues.txt", t.text);
        write_text(out / "global_pvalues.csv", t.csv);

        // VIF per (feature, bucket panel)
        std::ostringstream v;
        v << "feature";
        for (const auto& b : bucket_labels) v << "," << b;
        v << "\n";
        for (std::size_t f = 0; f < feature_labels.size(); ++f) {
            v << feature_labels[f];
            for (const auto& bm : rep.bucket_models)
                v << ","
                  << (std::isinf(bm.vif[f]) ? std::string("inf") : csv::format_value(bm.vif[f]));
            v << "\n";
        }
        write_text(out / "vif.csv", v.str());

        // filtered model summaries
        std::ostringstream txt, csvrows;
        csvrows << "bucket,term,coefficient,std_error,t_statistic,p_value\n";
        for (const auto& bm : rep.bucket_models) {
            const auto& m = bm.model;
            txt << m.bucket << "\n";
            txt << "  iterations: " << m.iterations << "\n";
            if (m.empty()) {
                txt << "  no surviving regressors; cleaned series equals the transformed bucket\n";
            } else {
                std::size_t idx = 0;
                if (m.intercept_survived) {
                    txt << "  (intercept): coef " << csv::format_value(m.fit.coefficients[0])
                        << ", p " << csv::format_value(m.fit.p_values[0]) << "\n";
                    csvrows << m.bucket << ",(intercept)," << csv::format_value(m.fit.coefficients[0])
                            << "," << csv::format_value(m.fit.standard_errors[0]) << ","
                            << csv::format_value(m.fit.t_statistics[0]) << ","
                            << csv::format_value(m.fit.p_values[0]) << "\n";
                    idx = 1;
                }
                for (std::size_t j = 0; j < m.surviving_features.size(); ++j) {
                    const std::size_t c = idx + j;
                    txt << "  " << m.surviving_features[j] << ": coef "
                        << csv::format_value(m.fit.coefficients[c]) << ", p "
                        << csv::format_value(m.fit.p_values[c]) << "\n";
                    csvrows << m.bucket << "," << m.surviving_features[j] << ","
                            << csv::format_value(m.fit.coefficients[c]) << ","
                            << csv::format_value(m.fit.standard_errors[c]) << ","
                            << csv::format_value(m.fit.t_statistics[c]) << ","
                            << csv::format_value(m.fit.p_values[c]) << "\n";
                }
            }
            if (!m.elimination_log.empty()) {
                txt << "  removed:";
                for (const auto& e : m.elimination_log)
                    txt << " [" << e.iteration << "] " << e.term << " (p "
                        << report::format_pvalue(e.p_value, 0.0) << ")";
                txt << "\n";
            }
            txt << "\n";
        }
        write_text(out / "models.txt", txt.str());
        write_text(out / "models.csv", csvrows.str());

        for (const auto& bm : rep.bucket_models)
            csv::write_monthly((out / "cleaned" / (slug(bm.cleaned.bucket) + ".csv")).string(),
                               bm.cleaned.months, bm.cleaned.values);
    }

    void causality(const PipelineReport& rep) const {
        for (const auto& sig : rep.core_signals)
            csv::write_monthly((out / "signals" / (slug(sig.name) + ".csv")).string(), sig.months,
                               sig.values);
        for (const auto& sig : rep.taxonomy_signals)
            csv::write_monthly((out / "signals" / (slug(sig.name) + ".csv")).string(), sig.months,
                               sig.values);
        for (const auto& m : rep.core_matrices) {
            const report::Table t = report::causality_table(m);
            const std::string base = "causality_lag" + std::to_string(m.max_lag);
            write_text(out / (base + ".txt"), t.text);
            write_text(out / (base + ".csv"), t.csv);
        }
        if (rep.taxonomy_matrix) {
            const report::Table t = report::causality_table(*rep.taxonomy_matrix);
            const std::string base = "taxonomy_lag" + std::to_string(rep.taxonomy_matrix->max_lag);
            write_text(out / (base + ".txt"), t.text);
            write_text(out / (base + ".csv"), t.csv);
        }

        // plot-ready series: cleaned bucket next to the all-proposals event marker
        const events::EventSignal* all = nullptr;
        for (const auto& s : rep.core_signals)
            if (s.name == "All BIPs") all = &s;
        for (const auto& bm : rep.bucket_models) {
            std::ostringstream p;
            p << "month,cleaned" << (all ? ",bip_event" : "") << "\n";
            const std::vector<double> vals = restrict_to(bm.cleaned, rep.month_grid);
            for (std::size_t i = 0; i < rep.month_grid.size(); ++i) {
                p << rep.month_grid[i].to_string() << "," << csv::format_value(vals[i]);
                if (all) p << "," << (all->values[i] != 0.0 ? "1" : "0");
                p << "\n";
            }
            write_text(out / "plot" / (slug(bm.cleaned.bucket) + ".csv"), p.str());
        }
    }

    void run_info(const PipelineReport& rep) const {
        nlohmann::json j;
        j["version"] = kVersion;
        j["config_hash"] = rep.config_hash;
        j["timestamp"] = timestamp_utc();
        write_text(out / "run_info.json", j.dump(2) + "\n");
    }
};

} // namespace

PipelineReport run(const PipelineConfig& cfg, Stage until,
                   std::optional<std::size_t> max_lag_override) {
    PipelineReport rep;
    rep.config_hash = config_hash(cfg);
    StageWriter writer(cfg);
    writer.config_used(cfg);

    // ---- transform ----
    try {
        IngestResult in = ingest(cfg);
        rep.ingest_warnings = in.warnings;
        for (std::size_t i = 0; i < cfg.features.size(); ++i)
            rep.transformed_features.push_back(apply_transform(in.features[i], cfg.features[i]));
        for (std::size_t i = 0; i < cfg.buckets.size(); ++i)
            rep.transformed_buckets.push_back(apply_transform(in.buckets[i], cfg.buckets[i]));
        writer.transformed(rep);
    } catch (const Error& e) {
        throw ConfigError("[stage:transform] " + std::string(e.what()));
    }
    if (until == Stage::Transform) return rep;

    // ---- cointegration screen (a gate, not a filter: downstream numbers
    // are identical whether or not it runs) ----
    if (cfg.cointegration_enabled) {
        try {
            if (cfg.cointegration_on_levels) {
                IngestResult in = ingest(cfg);
                std::vector<TimeSeries> lf, lb;
                for (const auto& f : in.features) lf.push_back(downsample_monthly(f));
                for (const auto& b : in.buckets) lb.push_back(downsample_monthly(b));
                rep.cointegration = coint::screen_all_pairs(lf, lb, cfg.granger.x_max_lag);
            } else {
                rep.cointegration = coint::screen_all_pairs(rep.transformed_features,
                                                            rep.transformed_buckets,
                                                            cfg.granger.x_max_lag);
            }
            writer.cointegration(*rep.cointegration);
        } catch (const Error& e) {
            throw ConfigError("[stage:cointegrate] " + std::string(e.what()));
        }
    }
    if (until == Stage::Cointegrate) return rep;

    // ---- per-bucket global regression, filtering, cleaning ----
    try {
        rep.bucket_models.resize(rep.transformed_buckets.size());
        std::vector<std::string> errors(rep.transformed_buckets.size());
        parallel_for(rep.transformed_buckets.size(), cfg.workers, [&](std::size_t i) {
            try {
                BucketModel& bm = rep.bucket_models[i];
                bm.panel = build_panel(rep.transformed_buckets[i], rep.transformed_features);
                bm.global_fit = cleaning::fit_global_model(bm.panel);
                if (bm.panel.feature_count() >= 2) {
                    stats::Matrix cols;
                    for (const auto& f : bm.panel.features) cols.push_back(f.values);
                    bm.vif = stats::vif(cols);
                } else {
                    bm.vif.assign(bm.panel.feature_count(), 1.0); // nothing to inflate against
                }
                bm.model = cleaning::iterative_filter(bm.panel, cfg.t_level);
                bm.cleaned = cleaning::extract_cleaned(bm.model, bm.panel);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        });
        for (std::size_t i = 0; i < errors.size(); ++i)
            if (!errors[i].empty())
                throw ConfigError("bucket '" + rep.transformed_buckets[i].label() +
                                  "': " + errors[i]);
        writer.models(rep);
    } catch (const Error& e) {
        throw ConfigError("[stage:clean] " + std::string(e.what()));
    }
    if (until == Stage::Clean) return rep;

    // ---- event signals and causality matrices ----
    try {
        rep.month_grid = common_months(rep.bucket_models);
        if (rep.month_grid.empty())
            throw AlignmentError("no month shared by every cleaned bucket");

        const events::BipRegistry registry = events::load_registry(cfg.registry_path);
        auto make_signals = [&](const std::vector<std::string>& names) {
            std::vector<events::EventSignal> sigs;
            for (const auto& name : names) {
                events::EventSignal s =
                    events::build_signal(registry, events::builtin_set(registry, name), rep.month_grid);
                if (s.ignored_outside_grid > 0)
                    log::info("signal '" + name + "': " + std::to_string(s.ignored_outside_grid) +
                              " proposals dated outside the month grid");
                sigs.push_back(std::move(s));
            }
            return sigs;
        };
        rep.core_signals = make_signals(cfg.signal_sets);
        rep.taxonomy_signals = make_signals(cfg.taxonomy_sets);

        std::vector<cleaning::CleanedSeries> grid_buckets;
        for (const auto& bm : rep.bucket_models)
            grid_buckets.push_back({bm.cleaned.bucket, rep.month_grid,
                                    restrict_to(bm.cleaned, rep.month_grid)});

        auto to_named = [](const std::vector<events::EventSignal>& sigs) {
            std::vector<granger::NamedSignal> out;
            for (const auto& s : sigs) out.push_back({s.name, s.values});
            return out;
        };

        std::vector<std::size_t> lags;
        if (max_lag_override) {
            lags = {*max_lag_override};
        } else {
            lags = {cfg.granger.x_max_lag};
            for (std::size_t l : cfg.sensitivity_lags)
                if (l != cfg.granger.x_max_lag) lags.push_back(l);
        }
        for (std::size_t lag : lags)
            rep.core_matrices.push_back(granger::run_causality_matrix(
                to_named(rep.core_signals), grid_buckets, cfg.granger.with_max_lag(lag),
                cfg.workers));
        if (!rep.taxonomy_signals.empty()) {
            const std::size_t lag = max_lag_override.value_or(cfg.granger.x_max_lag);
            rep.taxonomy_matrix = granger::run_causality_matrix(
                to_named(rep.taxonomy_signals), grid_buckets, cfg.granger.with_max_lag(lag),
                cfg.workers);
        }
        writer.causality(rep);
    } catch (const Error& e) {
        throw ConfigError("[stage:causality] " + std::string(e.what()));
    }
    if (until == Stage::Causality) return rep;

    writer.run_info(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Report rebuild / audit
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> parse_csv_table(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> row;
        std::string cur;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (quoted) {
                if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    cur += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                row.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        row.push_back(cur);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::vector<std::string> rebuild_report(const std::string& output_dir, bool audit) {
    std::vector<std::string> findings;
    const fs::path out(output_dir);
    if (!fs::exists(out)) throw ConfigError("output dir '" + output_dir + "' does not exist");

    // re-render every text table from its CSV cells
    for (const auto& entry : fs::directory_iterator(out)) {
        const std::string name = entry.path().filename().string();
        if (entry.path().extension() != ".csv") continue;
        const bool is_verdicts =
            name.rfind("causality_lag", 0) == 0 || name.rfind("taxonomy_lag", 0) == 0;
        const bool is_table = is_verdicts || name == "global_pvalues.csv" ||
                              name == "cointegration.csv";
        if (!is_table) continue;
        const auto rows = parse_csv_table(entry.path());
        if (rows.empty()) continue;
        if (is_verdicts) {
            for (std::size_t r = 1; r < rows.size(); ++r)
                for (std::size_t c = 1; c < rows[r].size(); ++c) {
                    const std::string& cell = rows[r][c];
                    const bool token_ok =
                        cell == "ERR" ||
                        (cell.size() >= 5 && (cell[0] == 'T' || cell[0] == 'F') && cell[1] == ' ' &&
                         cell[2] == '(' && cell.back() == ')');
                    if (!token_ok)
                        findings.push_back(name + ": malformed verdict token '" + cell + "'");
                }
        }
        std::string text = report::render_text_table(
            rows.front(), {rows.begin() + 1, rows.end()});
        if (is_verdicts) text += report::kCausalityLegend;
        write_text(entry.path().parent_path() / (entry.path().stem().string() + ".txt"), text);
    }

    if (!audit) return findings;

    // effective settings of the audited run
    granger::GrangerConfig audit_gcfg;
    double audit_t_level = 0.05;
    const fs::path cfg_used = out / "config_used.json";
    if (fs::exists(cfg_used)) {
        std::ifstream in(cfg_used);
        const auto j = nlohmann::json::parse(in, nullptr, true, true);
        audit_t_level = j.at("levels").at("t").get<double>();
        audit_gcfg.t_level = audit_t_level;
        audit_gcfg.f_level = j.at("levels").at("f").get<double>();
        audit_gcfg.pacf_critical = j.at("levels").at("pacf").get<double>();
        audit_gcfg.simple_intercept = j.at("granger").at("simple_intercept").get<bool>();
        audit_gcfg.ic_margin = j.at("granger").at("ic_margin").get<double>();
        audit_gcfg.ic = j.at("granger").at("ic").get<std::string>() == "aic"
                            ? granger::InfoCriterion::Aic
                            : granger::InfoCriterion::Bic;
    }

    // re-derive the global p-value table from the stored panels
    const fs::path pvals_csv = out / "global_pvalues.csv";
    if (fs::exists(pvals_csv) && fs::exists(out / "panels")) {
        const auto table = parse_csv_table(pvals_csv);
        for (std::size_t col = 1; col < table.at(0).size(); ++col) {
            const std::string bucket = table[0][col];
            const fs::path panel_path = out / "panels" / (slug(bucket) + ".csv");
            if (!fs::exists(panel_path)) {
                findings.push_back("missing panel intermediate for '" + bucket + "'");
                continue;
            }
            const auto panel_rows = parse_csv_table(panel_path);
            Panel panel;
            const auto& header = panel_rows.at(0);
            panel.dependent.name = header.at(1);
            for (std::size_t c = 2; c < header.size(); ++c) panel.features.push_back({header[c], {}});
            for (std::size_t r = 1; r < panel_rows.size(); ++r) {
                panel.months.push_back(Date::parse(panel_rows[r].at(0)));
                panel.dependent.values.push_back(std::stod(panel_rows[r].at(1)));
                for (std::size_t c = 2; c < header.size(); ++c)
                    panel.features[c - 2].values.push_back(std::stod(panel_rows[r][c]));
            }
            const stats::RegressionFit fit = cleaning::fit_global_model(panel);
            for (std::size_t r = 1; r < table.size(); ++r) {
                const std::string& feature = table[r][0];
                auto it = std::find_if(panel.features.begin(), panel.features.end(),
                                       [&](const PanelColumn& p) { return p.name == feature; });
                if (it == panel.features.end()) {
                    findings.push_back("panel for '" + bucket + "' lacks feature '" + feature + "'");
                    continue;
                }
                const std::size_t fi =
                    1 + static_cast<std::size_t>(std::distance(panel.features.begin(), it));
                const std::string expect = report::format_pvalue(fit.p_values[fi], audit_t_level);
                if (table[r][col] != expect)
                    findings.push_back("global_pvalues: cell (" + feature + ", " + bucket +
                                       ") is '" + table[r][col] + "', re-derived '" + expect + "'");
            }
        }
    }

    // re-run causality from stored cleaned series and signals
    for (const auto& entry : fs::directory_iterator(out)) {
        const std::string name = entry.path().filename().string();
        if (entry.path().extension() != ".csv") continue;
        const bool core = name.rfind("causality_lag", 0) == 0;
        const bool taxo = name.rfind("taxonomy_lag", 0) == 0;
        if (!core && !taxo) continue;
        const std::size_t lag = static_cast<std::size_t>(
            std::stoul(name.substr(name.find("lag") + 3,
                                   name.size() - name.find("lag") - 3 - 4)));
        const auto table = parse_csv_table(entry.path());
        if (table.size() < 2) continue;

        // columns: "Simple Test, <signal>"... then "Full Test, <signal>"...
        std::vector<std::string> signal_names;
        for (std::size_t c = 1; c < table[0].size(); ++c) {
            const std::string& h = table[0][c];
            const std::string prefix = "Simple Test, ";
            if (h.rfind(prefix, 0) == 0) signal_names.push_back(h.substr(prefix.size()));
        }

        std::vector<cleaning::CleanedSeries> buckets;
        for (std::size_t r = 1; r < table.size(); ++r) {
            const fs::path cleaned = out / "cleaned" / (slug(table[r][0]) + ".csv");
            if (!fs::exists(cleaned)) {
                findings.push_back("missing cleaned series for '" + table[r][0] + "'");
                continue;
            }
            cleaning::CleanedSeries s;
            s.bucket = table[r][0];
            for (const auto& row : parse_csv_table(cleaned)) {
                if (row.at(0) == "month") continue;
                s.months.push_back(Date::parse(row.at(0)));
                s.values.push_back(std::stod(row.at(1)));
            }
            buckets.push_back(std::move(s));
        }
        // restrict to the common grid (stored cleaned series may be longer)
        std::map<Date, std::size_t> counts;
        for (const auto& b : buckets)
            for (const Date& d : b.months) counts[d]++;
        std::vector<Date> grid;
        for (const auto& [d, c] : counts)
            if (c == buckets.size()) grid.push_back(d);
        for (auto& b : buckets) {
            b.values = restrict_to(b, grid);
            b.months = grid;
        }

        std::vector<granger::NamedSignal> signals;
        bool missing_signal = false;
        for (const auto& sn : signal_names) {
            const fs::path sig_path = out / "signals" / (slug(sn) + ".csv");
            if (!fs::exists(sig_path)) {
                findings.push_back("missing signal series '" + sn + "'");
                missing_signal = true;
                break;
            }
            granger::NamedSignal sig;
            sig.name = sn;
            std::map<Date, double> by_month;
            for (const auto& row : parse_csv_table(sig_path)) {
                if (row.at(0) == "month") continue;
                by_month[Date::parse(row.at(0))] = std::stod(row.at(1));
            }
            for (const Date& d : grid) sig.values.push_back(by_month.at(d));
            signals.push_back(std::move(sig));
        }
        if (missing_signal) continue;

        const granger::CausalityMatrix m =
            granger::run_causality_matrix(signals, buckets, audit_gcfg.with_max_lag(lag));
        const report::Table t = report::causality_table(m);
        const std::string stored = read_file(entry.path());
        if (t.csv != stored)
            findings.push_back(name + ": re-derived verdict table differs from stored table");
    }
    return findings;
}

} // namespace bipcausal::pipeline
