#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bipcausal/config.hpp"
#include "bipcausal/errors.hpp"
#include "bipcausal/fixture.hpp"
#include "bipcausal/pipeline.hpp"
#include "bipcausal/report.hpp"

using namespace bipcausal;
namespace fs = std::filesystem;

namespace {

std::string tmp_dir(const std::string& name) {
    const fs::path p = fs::path(TEST_TMP_DIR) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p.string();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("p-value table formatting") {
    const auto t = report::pvalue_table({"Federal Funds Rate", "Bitcoin (Close Price)"},
                                        {"From 0 to 0.001"},
                                        {{0.018640001}, {0.955524}}, 0.05);
    CHECK(t.csv.find("0.01864*") != std::string::npos);
    CHECK(t.csv.find("0.95552") != std::string::npos);
    CHECK(t.csv.find("0.95552*") == std::string::npos);
    CHECK(t.text.find("0.01864*") != std::string::npos);

    SUBCASE("the boundary value takes no asterisk") {
        const auto b = report::pvalue_table({"f"}, {"b"}, {{0.05}}, 0.05);
        CHECK(b.csv.find("0.05000*") == std::string::npos);
        CHECK(b.csv.find("0.05000") != std::string::npos);
    }
    SUBCASE("cell values are rounded to five decimals") {
        CHECK(report::format_pvalue(0.123456789, 0.5) == "0.12346*");
        CHECK(report::format_pvalue(1.0, 0.5) == "1.00000");
    }
}

TEST_CASE("causality table tokens") {
    granger::CausalityMatrix m;
    m.max_lag = 10;
    m.bucket_labels = {"From 0 to 0.001"};
    m.signal_labels = {"All BIPs"};
    m.cells.resize(2);

    granger::GrangerVerdict t;
    t.accepted = true;
    t.longest_significant_lag = 3;
    m.cells[0].verdict = t; // simple slot

    granger::GrangerVerdict f;
    f.accepted = false;
    f.failure_reason = granger::FailureReason::C;
    m.cells[1].verdict = f; // full slot

    const auto table = report::causality_table(m);
    CHECK(table.csv.find("T (3)") != std::string::npos);
    CHECK(table.csv.find("F (c)") != std::string::npos);
    CHECK(table.text.find("T (3)") != std::string::npos);

    SUBCASE("all failure codes render") {
        granger::GrangerVerdict a, b;
        a.failure_reason = granger::FailureReason::A;
        b.failure_reason = granger::FailureReason::B;
        CHECK(a.token() == "F (a)");
        CHECK(b.token() == "F (b)");
        granger::GrangerVerdict t12;
        t12.accepted = true;
        t12.longest_significant_lag = 12;
        CHECK(t12.token() == "T (12)");
    }
    SUBCASE("empty matrix renders the header only") {
        granger::CausalityMatrix e;
        e.signal_labels = {"All BIPs"};
        const auto te = report::causality_table(e);
        CHECK(te.csv.find("Simple Test, All BIPs") != std::string::npos);
        CHECK(te.csv.find("T (") == std::string::npos);
    }
    SUBCASE("errored cells are visible") {
        granger::CausalityMatrix e = m;
        e.cells[1].verdict.reset();
        e.cells[1].error = "boom";
        CHECK(report::causality_table(e).csv.find("ERR") != std::string::npos);
    }
}

TEST_CASE("label slugs") {
    CHECK(pipeline::slug("Federal Funds Rate") == "federal_funds_rate");
    CHECK(pipeline::slug("From 0 to 0.001") == "from_0_to_0_001");
    CHECK(pipeline::slug("M2") == "m2");
    CHECK(pipeline::slug("All Economy-Related BIPs (Except the major ones)") ==
          "all_economy_related_bips_except_the_major_ones");
}

TEST_CASE("config loading and validation") {
    const std::string dir = tmp_dir("config_case");
    // minimal series files
    for (const char* name : {"f.csv", "b.csv"}) {
        std::ofstream f(fs::path(dir) / name);
        f << "date,value\n2020-01-01,1.0\n2020-02-01,2.0\n";
    }
    {
        std::ofstream r(fs::path(dir) / "reg.csv");
        r << "number,date,kind,status,categories,provenance\n";
        r << "1,2011-08-19,Process,Replaced,,external\n";
    }
    const fs::path cfg_path = fs::path(dir) / "cfg.json";
    {
        std::ofstream c(cfg_path);
        c << R"({
  // comments are allowed in config files
  "output_dir": "out",
  "registry": "reg.csv",
  "features": [{"label": "F", "path": "f.csv", "frequency": "monthly", "transform": "diff"}],
  "buckets": [{"label": "B", "path": "b.csv", "frequency": "monthly", "transform": "log_change"}],
  "levels": {"t": 0.05, "f": 0.05, "pacf": 0.10},
  "granger": {"pacf_max_lag": 10, "x_max_lag": 10, "sensitivity_lags": [6, 12]}
})";
    }
    const auto cfg = pipeline::load_config(cfg_path.string());
    CHECK(cfg.features.size() == 1);
    CHECK(cfg.features[0].transform == pipeline::Transform::Diff);
    CHECK(cfg.buckets[0].transform == pipeline::Transform::LogChange);
    CHECK(cfg.sensitivity_lags == std::vector<std::size_t>{6, 12});
    CHECK(cfg.granger.t_level == 0.05);

    SUBCASE("config hash is deterministic and sensitive") {
        const auto again = pipeline::load_config(cfg_path.string());
        CHECK(pipeline::config_hash(cfg) == pipeline::config_hash(again));
        auto tweaked = cfg;
        tweaked.t_level = 0.01;
        CHECK(pipeline::config_hash(tweaked) != pipeline::config_hash(cfg));
    }
    SUBCASE("missing path fails validation") {
        std::ofstream c(cfg_path);
        c << R"({"registry": "reg.csv",
                 "features": [{"label": "F", "path": "nope.csv", "transform": "diff"}],
                 "buckets": [{"label": "B", "path": "b.csv", "transform": "log_change"}]})";
        c.close();
        CHECK_THROWS_AS((void)pipeline::load_config(cfg_path.string()), ConfigError);
    }
    SUBCASE("missing transform assignment fails validation") {
        std::ofstream c(cfg_path);
        c << R"({"registry": "reg.csv",
                 "features": [{"label": "F", "path": "f.csv"}],
                 "buckets": [{"label": "B", "path": "b.csv", "transform": "log_change"}]})";
        c.close();
        CHECK_THROWS_WITH_AS((void)pipeline::load_config(cfg_path.string()),
                             doctest::Contains("transform"), ConfigError);
    }
    SUBCASE("empty sensitivity lag list is allowed to stay default") {
        CHECK(!cfg.sensitivity_lags.empty());
    }
}

TEST_CASE("transform order honors the per-series setting") {
    std::vector<DatedValue> pts;
    // two observations in each of three months
    int day = 0;
    for (int m = 1; m <= 3; ++m)
        for (int d : {5, 20}) pts.push_back({Date(2021, m, d), std::exp(0.1 * ++day)});
    const TimeSeries raw("s", Frequency::Daily, pts);

    pipeline::SeriesSpec spec;
    spec.label = "s";
    spec.transform = pipeline::Transform::LogChange;

    spec.order = pipeline::TransformOrder::DownsampleThenTransform;
    const TimeSeries a = pipeline::apply_transform(raw, spec);
    // month-over-month change of the last observations: both steps are 0.2
    REQUIRE(a.size() == 2);
    CHECK(a[0].value == doctest::Approx(0.2).epsilon(1e-12));

    spec.order = pipeline::TransformOrder::TransformThenDownsample;
    const TimeSeries b = pipeline::apply_transform(raw, spec);
    // intra-month change of the transformed series sampled at month end: 0.1
    REQUIRE(b.size() == 3);
    CHECK(b[1].value == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("fixture pipeline end to end") {
    const std::string dir = tmp_dir("mini_run");
    const auto fx = fixture::generate(dir, std::string(DATA_DIR) + "/bips.csv");
    const auto cfg = pipeline::load_config(fx.config_path);
    const auto rep = pipeline::run(cfg);

    CHECK(rep.transformed_features.size() == 12);
    CHECK(rep.transformed_buckets.size() == 10);
    REQUIRE(rep.cointegration.has_value());
    CHECK(rep.cointegration->cells.size() == 120);
    CHECK(rep.bucket_models.size() == 10);
    CHECK(rep.core_matrices.size() == 3); // lag 10 plus sensitivity 6 and 12
    CHECK(rep.core_matrices[0].cells.size() == 80);
    REQUIRE(rep.taxonomy_matrix.has_value());
    CHECK(rep.taxonomy_matrix->cells.size() == 60);

    const fs::path out(cfg.output_dir);
    for (const char* f :
         {"global_pvalues.txt", "global_pvalues.csv", "cointegration.txt", "models.txt",
          "causality_lag10.csv", "causality_lag6.csv", "causality_lag12.csv",
          "taxonomy_lag10.csv", "vif.csv", "run_info.json", "config_used.json"})
        CHECK(fs::exists(out / f));

    SUBCASE("panel rows correspond to the intersection of months") {
        for (const auto& bm : rep.bucket_models) {
            CHECK(bm.panel.rows() > 100);
            CHECK(bm.cleaned.months.size() == bm.panel.rows());
        }
    }
    SUBCASE("the planted rate effect survives the filter") {
        const auto& bm = rep.bucket_models[0]; // the first bucket carries it
        REQUIRE(bm.model.surviving_features.size() >= 1);
        CHECK(std::find(bm.model.surviving_features.begin(), bm.model.surviving_features.end(),
                        "Federal Funds Rate") != bm.model.surviving_features.end());
    }
    SUBCASE("skipping the cointegration screen changes no downstream number") {
        auto cfg2 = cfg;
        cfg2.cointegration_enabled = false;
        cfg2.output_dir = tmp_dir("mini_run_nocoint");
        const auto rep2 = pipeline::run(cfg2);
        CHECK(!rep2.cointegration.has_value());
        REQUIRE(rep2.core_matrices.size() == rep.core_matrices.size());
        for (std::size_t m = 0; m < rep.core_matrices.size(); ++m)
            for (std::size_t i = 0; i < rep.core_matrices[m].cells.size(); ++i)
                CHECK(rep.core_matrices[m].cells[i].verdict->token() ==
                      rep2.core_matrices[m].cells[i].verdict->token());
        CHECK(read_file(fs::path(cfg2.output_dir) / "global_pvalues.csv") ==
              read_file(out / "global_pvalues.csv"));
    }
    SUBCASE("single-lag override produces one matrix") {
        auto cfg3 = cfg;
        cfg3.output_dir = tmp_dir("mini_run_lag6");
        const auto rep3 = pipeline::run(cfg3, pipeline::Stage::Run, 6);
        CHECK(rep3.core_matrices.size() == 1);
        CHECK(rep3.core_matrices[0].max_lag == 6);
        CHECK(fs::exists(fs::path(cfg3.output_dir) / "causality_lag6.csv"));
    }
    SUBCASE("stage subcommand boundaries") {
        auto cfg4 = cfg;
        cfg4.output_dir = tmp_dir("mini_run_stage");
        (void)pipeline::run(cfg4, pipeline::Stage::Transform);
        CHECK(fs::exists(fs::path(cfg4.output_dir) / "transformed"));
        CHECK(!fs::exists(fs::path(cfg4.output_dir) / "global_pvalues.csv"));
        (void)pipeline::run(cfg4, pipeline::Stage::Clean);
        CHECK(fs::exists(fs::path(cfg4.output_dir) / "global_pvalues.csv"));
        CHECK(!fs::exists(fs::path(cfg4.output_dir) / "causality_lag10.csv"));
    }
    SUBCASE("report rebuild and audit pass on a fresh run") {
        const auto findings = pipeline::rebuild_report(cfg.output_dir, true);
        for (const auto& f : findings) MESSAGE(f);
        CHECK(findings.empty());
    }
    SUBCASE("verdict tokens in the emitted tables are well-formed") {
        const std::string csv = read_file(out / "causality_lag10.csv");
        CHECK(csv.find("Simple Test, All BIPs") != std::string::npos);
        CHECK(csv.find("Full Test, All BIPs") != std::string::npos);
        // every data cell matches the token grammar
        const auto lines_ok = pipeline::rebuild_report(cfg.output_dir, false);
        CHECK(lines_ok.empty());
    }
}

TEST_CASE("single feature and bucket make one-by-one tables") {
    const std::string dir = tmp_dir("tiny_run");
    fixture::Rng rng(5);
    {
        std::ofstream f(fs::path(dir) / "f.csv");
        f << "date,value\n";
        double v = 1.0;
        for (int i = 0; i < 70; ++i) {
            v += 0.1 * rng.gaussian();
            f << Date(2015 + i / 12, 1 + i % 12, 3).to_string() << "," << v << "\n";
        }
    }
    {
        std::ofstream f(fs::path(dir) / "b.csv");
        f << "date,value\n";
        double v = 100.0;
        for (int i = 0; i < 70; ++i) {
            v *= std::exp(0.01 * rng.gaussian());
            f << Date(2015 + i / 12, 1 + i % 12, 3).to_string() << "," << v << "\n";
        }
    }
    {
        std::ofstream c(fs::path(dir) / "cfg.json");
        c << R"({
  "output_dir": "out",
  "registry": ")" << std::string(DATA_DIR) << R"(/bips.csv",
  "features": [{"label": "F", "path": "f.csv", "frequency": "monthly", "transform": "diff"}],
  "buckets": [{"label": "B", "path": "b.csv", "frequency": "monthly", "transform": "log_change"}],
  "granger": {"pacf_max_lag": 6, "x_max_lag": 6, "sensitivity_lags": []},
  "signal_sets": ["Major Economy-Related BIPs"],
  "taxonomy_sets": []
})";
    }
    const auto cfg = pipeline::load_config((fs::path(dir) / "cfg.json").string());
    const auto rep = pipeline::run(cfg);
    CHECK(rep.bucket_models.size() == 1);
    CHECK(rep.cointegration->cells.size() == 1);
    CHECK(rep.core_matrices[0].cells.size() == 2); // one bucket, one signal, two variants
    CHECK(!rep.taxonomy_matrix.has_value());
}
