#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bipcausal/granger.hpp"
#include "bipcausal/timeseries.hpp"

namespace bipcausal::pipeline {

enum class Transform { Diff, LogChange };
enum class TransformOrder { DownsampleThenTransform, TransformThenDownsample };

Transform transform_from_string(const std::string& s);
TransformOrder order_from_string(const std::string& s);

struct SeriesSpec {
    std::string label;
    std::string path;
    Frequency frequency = Frequency::Monthly;
    Transform transform = Transform::LogChange;
    TransformOrder order = TransformOrder::DownsampleThenTransform;
};

struct PipelineConfig {
    std::string output_dir = "out";
    std::string registry_path;
    std::vector<SeriesSpec> features;
    std::vector<SeriesSpec> buckets;

    double t_level = 0.05;
    double f_level = 0.05;
    double pacf_critical = 0.10;

    granger::GrangerConfig granger;
    std::vector<std::size_t> sensitivity_lags = {6, 12};

    bool cointegration_enabled = true;
    bool cointegration_on_levels = false;

    std::vector<std::string> signal_sets = {
        "All BIPs",
        "All Economy-Related BIPs",
        "Major Economy-Related BIPs",
        "All Economy-Related BIPs (Except the major ones)",
    };
    std::vector<std::string> taxonomy_sets = {
        "Fiscal-Like BIPs",
        "Monetary-Like BIPs",
        "Purely Tokenomic BIPs",
    };

    std::size_t workers = 0; // 0 = hardware concurrency
};

/// Parses and validates a JSON config (comments allowed). Every referenced
/// path must exist; every series must carry a transform assignment; the
/// sensitivity lag list must not be empty.
PipelineConfig load_config(const std::string& path);

/// Deterministic FNV-1a hash of the canonicalized config, hex-encoded.
std::string config_hash(const PipelineConfig& cfg);

/// Serializes back to canonical JSON (used by the hash and by run_info).
std::string to_canonical_json(const PipelineConfig& cfg);

} // namespace bipcausal::pipeline
