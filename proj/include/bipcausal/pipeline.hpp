#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipcausal/cleaning.hpp"
#include "bipcausal/cointegration.hpp"
#include "bipcausal/config.hpp"
#include "bipcausal/events.hpp"
#include "bipcausal/granger.hpp"
#include "bipcausal/report.hpp"
#include "bipcausal/timeseries.hpp"

namespace bipcausal::pipeline {

struct IngestResult {
    std::vector<TimeSeries> features;
    std::vector<TimeSeries> buckets;
    std::vector<std::string> warnings;
};

/// Loads every configured CSV, sorted and de-duplicated, labeled per config.
IngestResult ingest(const PipelineConfig& cfg);

/// Stationarity transform + monthly downsampling in the order the spec
/// assigns to this series.
TimeSeries apply_transform(const TimeSeries& raw, const SeriesSpec& spec);

/// Pipeline stages in execution order. Each stage implies its predecessors.
enum class Stage { Transform, Cointegrate, Clean, Causality, Run };

struct BucketModel {
    Panel panel;
    stats::RegressionFit global_fit;
    std::vector<double> vif; // one per panel feature
    cleaning::FilteredModel model;
    cleaning::CleanedSeries cleaned;
};

struct PipelineReport {
    std::vector<std::string> ingest_warnings;
    std::vector<TimeSeries> transformed_features;
    std::vector<TimeSeries> transformed_buckets;
    std::optional<coint::CointegrationMatrix> cointegration;
    std::vector<BucketModel> bucket_models;
    std::vector<Date> month_grid; // common months across all cleaned buckets
    std::vector<events::EventSignal> core_signals;
    std::vector<events::EventSignal> taxonomy_signals;
    std::vector<granger::CausalityMatrix> core_matrices; // default lag first, then sensitivity
    std::optional<granger::CausalityMatrix> taxonomy_matrix;
    std::string config_hash;
};

/// Deterministic end-to-end run up to `until`, writing each stage's outputs
/// into cfg.output_dir as soon as the stage completes (partial outputs
/// survive a later-stage failure). `max_lag_override` replaces the default
/// and sensitivity causality lags with a single value.
PipelineReport run(const PipelineConfig& cfg, Stage until = Stage::Run,
                   std::optional<std::size_t> max_lag_override = std::nullopt);

/// Re-renders the text tables in an output directory from their CSV
/// counterparts. With `audit`, also re-derives table numbers from stored
/// intermediates (panels, cleaned series, signals) and fails on any diff.
/// Returns a list of findings; empty means everything matched.
std::vector<std::string> rebuild_report(const std::string& output_dir, bool audit);

/// File-safe slug for a series/set label.
std::string slug(const std::string& label);

} // namespace bipcausal::pipeline
