#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bipcausal/config.hpp"
#include "bipcausal/errors.hpp"
#include "bipcausal/fixture.hpp"
#include "bipcausal/pipeline.hpp"

namespace {

using bipcausal::pipeline::PipelineConfig;
using bipcausal::pipeline::Stage;

struct CommonOpts {
    std::string config_path;
    std::string output_dir;
    std::optional<std::size_t> max_lag;
    std::optional<double> t_level;
    std::optional<double> f_level;
    std::optional<double> pacf_level;
    bool skip_cointegration = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-c,--config", o.config_path, "pipeline configuration file")->required();
    cmd->add_option("-o,--output-dir", o.output_dir, "override the configured output directory");
    cmd->add_option("--max-lag", o.max_lag,
                    "run the causality stage at this single maximum lag (e.g. 6, 10 or 12) "
                    "instead of the default plus sensitivity lags");
    cmd->add_option("--t-level", o.t_level, "override the t-test significance level");
    cmd->add_option("--f-level", o.f_level, "override the F-test significance level");
    cmd->add_option("--pacf-level", o.pacf_level, "override the PACF band level");
    cmd->add_flag("--skip-cointegration", o.skip_cointegration,
                  "skip the cointegration screen (downstream numbers are unaffected)");
}

PipelineConfig make_config(const CommonOpts& o) {
    PipelineConfig cfg = bipcausal::pipeline::load_config(o.config_path);
    if (!o.output_dir.empty()) cfg.output_dir = o.output_dir;
    if (o.t_level) cfg.t_level = cfg.granger.t_level = *o.t_level;
    if (o.f_level) cfg.f_level = cfg.granger.f_level = *o.f_level;
    if (o.pacf_level) cfg.pacf_critical = cfg.granger.pacf_critical = *o.pacf_level;
    if (o.skip_cointegration) cfg.cointegration_enabled = false;
    return cfg;
}

int run_stage(const CommonOpts& o, Stage stage) {
    const PipelineConfig cfg = make_config(o);
    bipcausal::pipeline::run(cfg, stage, o.max_lag);
    std::cout << "outputs written to " << cfg.output_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"policy-impact time-series pipeline: stationarity transforms, cointegration "
                 "screening, regression cleaning, event signals and Granger-causality matrices"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* transform = app.add_subcommand("transform", "ingest and transform every series");
    auto* cointegrate = app.add_subcommand("cointegrate", "run the pairwise cointegration screen");
    auto* clean = app.add_subcommand("clean", "fit, filter and clean every bucket");
    auto* causality = app.add_subcommand("causality", "build signals and verdict matrices");
    auto* runall = app.add_subcommand("run", "full pipeline with report");
    for (auto* cmd : {transform, cointegrate, clean, causality, runall}) add_common(cmd, opts);

    std::string report_dir;
    bool audit = false;
    auto* report = app.add_subcommand("report", "re-render report tables from stored outputs");
    report->add_option("-d,--dir", report_dir, "output directory of a previous run")->required();
    report->add_flag("--audit", audit, "re-derive table numbers from stored intermediates and diff");

    std::string fixture_dir = "fixtures/synthetic";
    std::string fixture_registry = "data/bips.csv";
    std::uint64_t fixture_seed = 20110101ull;
    auto* fixture = app.add_subcommand("fixture", "write the bundled synthetic dataset");
    fixture->add_option("-d,--dir", fixture_dir, "destination directory");
    fixture->add_option("--registry", fixture_registry, "proposal registry to bundle");
    fixture->add_option("--seed", fixture_seed, "generator seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform->parsed()) return run_stage(opts, Stage::Transform);
        if (cointegrate->parsed()) return run_stage(opts, Stage::Cointegrate);
        if (clean->parsed()) return run_stage(opts, Stage::Clean);
        if (causality->parsed()) return run_stage(opts, Stage::Causality);
        if (runall->parsed()) return run_stage(opts, Stage::Run);
        if (report->parsed()) {
            const auto findings = bipcausal::pipeline::rebuild_report(report_dir, audit);
            for (const auto& f : findings) std::cerr << f << "\n";
            if (!findings.empty()) {
                std::cerr << findings.size() << " finding(s)\n";
                return 1;
            }
            std::cout << (audit ? "audit clean" : "report rebuilt") << "\n";
            return 0;
        }
        if (fixture->parsed()) {
            const auto r = bipcausal::fixture::generate(fixture_dir, fixture_registry, fixture_seed);
            std::cout << "fixture config at " << r.config_path << "\n";
            return 0;
        }
    } catch (const bipcausal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
