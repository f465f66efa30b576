#include "bipcausal/config.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "bipcausal/errors.hpp"

namespace bipcausal::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

Transform transform_from_string(const std::string& s) {
    if (s == "diff") return Transform::Diff;
    if (s == "log_change") return Transform::LogChange;
    throw ConfigError("unknown transform '" + s + "' (expected diff|log_change)");
}

TransformOrder order_from_string(const std::string& s) {
    if (s == "downsample_then_transform") return TransformOrder::DownsampleThenTransform;
    if (s == "transform_then_downsample") return TransformOrder::TransformThenDownsample;
    throw ConfigError("unknown order '" + s +
                      "' (expected downsample_then_transform|transform_then_downsample)");
}

namespace {

std::string transform_name(Transform t) {
    return t == Transform::Diff ? "diff" : "log_change";
}

std::string order_name(TransformOrder o) {
    return o == TransformOrder::DownsampleThenTransform ? "downsample_then_transform"
                                                        : "transform_then_downsample";
}

SeriesSpec parse_series(const json& j, const fs::path& base, const std::string& what) {
    SeriesSpec s;
    if (!j.contains("label") || !j.contains("path"))
        throw ConfigError(what + " entries need 'label' and 'path'");
    s.label = j.at("label").get<std::string>();
    fs::path p = j.at("path").get<std::string>();
    if (p.is_relative()) p = base / p;
    s.path = p.string();
    s.frequency = frequency_from_string(j.value("frequency", std::string("monthly")));
    if (!j.contains("transform"))
        throw ConfigError(what + " '" + s.label + "': transform assignment is required");
    s.transform = transform_from_string(j.at("transform").get<std::string>());
    s.order = order_from_string(j.value("order", std::string("downsample_then_transform")));
    if (!fs::exists(s.path))
        throw ConfigError(what + " '" + s.label + "': path '" + s.path + "' does not exist");
    return s;
}

} // namespace

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    json j;
    try {
        j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }

    const fs::path base = fs::path(path).parent_path();
    PipelineConfig cfg;
    cfg.output_dir = j.value("output_dir", std::string("out"));
    {
        fs::path out = cfg.output_dir;
        if (out.is_relative()) out = base / out;
        cfg.output_dir = out.string();
    }

    if (!j.contains("registry")) throw ConfigError("config: 'registry' path is required");
    {
        fs::path p = j.at("registry").get<std::string>();
        if (p.is_relative()) p = base / p;
        cfg.registry_path = p.string();
        if (!fs::exists(cfg.registry_path))
            throw ConfigError("config: registry '" + cfg.registry_path + "' does not exist");
    }

    if (!j.contains("features") || !j.at("features").is_array() || j.at("features").empty())
        throw ConfigError("config: non-empty 'features' array is required");
    if (!j.contains("buckets") || !j.at("buckets").is_array() || j.at("buckets").empty())
        throw ConfigError("config: non-empty 'buckets' array is required");
    for (const auto& e : j.at("features")) cfg.features.push_back(parse_series(e, base, "feature"));
    for (const auto& e : j.at("buckets")) cfg.buckets.push_back(parse_series(e, base, "bucket"));

    if (j.contains("levels")) {
        const auto& lv = j.at("levels");
        cfg.t_level = lv.value("t", cfg.t_level);
        cfg.f_level = lv.value("f", cfg.f_level);
        cfg.pacf_critical = lv.value("pacf", cfg.pacf_critical);
    }
    for (double l : {cfg.t_level, cfg.f_level, cfg.pacf_critical})
        if (!(l > 0.0 && l < 1.0)) throw ConfigError("config: significance levels must be in (0,1)");

    if (j.contains("granger")) {
        const auto& g = j.at("granger");
        cfg.granger.pacf_max_lag = g.value("pacf_max_lag", cfg.granger.pacf_max_lag);
        cfg.granger.x_max_lag = g.value("x_max_lag", cfg.granger.x_max_lag);
        cfg.granger.simple_intercept = g.value("simple_intercept", cfg.granger.simple_intercept);
        if (g.contains("ic")) {
            const std::string ic = g.at("ic").get<std::string>();
            if (ic == "aic")
                cfg.granger.ic = granger::InfoCriterion::Aic;
            else if (ic == "bic")
                cfg.granger.ic = granger::InfoCriterion::Bic;
            else
                throw ConfigError("config: granger.ic must be aic|bic");
        }
        cfg.granger.ic_margin = g.value("ic_margin", cfg.granger.ic_margin);
        if (g.contains("sensitivity_lags")) {
            cfg.sensitivity_lags.clear();
            for (const auto& l : g.at("sensitivity_lags"))
                cfg.sensitivity_lags.push_back(l.get<std::size_t>());
        }
    }
    if (cfg.granger.pacf_max_lag < 1 || cfg.granger.x_max_lag < 1)
        throw ConfigError("config: granger lags must be >= 1");
    cfg.granger.pacf_critical = cfg.pacf_critical;
    cfg.granger.t_level = cfg.t_level;
    cfg.granger.f_level = cfg.f_level;

    if (j.contains("cointegration")) {
        const auto& c = j.at("cointegration");
        cfg.cointegration_enabled = c.value("enabled", cfg.cointegration_enabled);
        cfg.cointegration_on_levels = c.value("on_levels", cfg.cointegration_on_levels);
    }

    if (j.contains("signal_sets")) {
        cfg.signal_sets.clear();
        for (const auto& s : j.at("signal_sets")) cfg.signal_sets.push_back(s.get<std::string>());
    }
    if (j.contains("taxonomy_sets")) {
        cfg.taxonomy_sets.clear();
        for (const auto& s : j.at("taxonomy_sets")) cfg.taxonomy_sets.push_back(s.get<std::string>());
    }
    cfg.workers = j.value("workers", cfg.workers);
    return cfg;
}

std::string to_canonical_json(const PipelineConfig& cfg) {
    json j;
    j["output_dir"] = cfg.output_dir;
    j["registry"] = cfg.registry_path;
    auto series = [](const SeriesSpec& s) {
        return json{{"label", s.label},
                    {"path", s.path},
                    {"frequency", to_string(s.frequency)},
                    {"transform", transform_name(s.transform)},
                    {"order", order_name(s.order)}};
    };
    j["features"] = json::array();
    for (const auto& s : cfg.features) j["features"].push_back(series(s));
    j["buckets"] = json::array();
    for (const auto& s : cfg.buckets) j["buckets"].push_back(series(s));
    j["levels"] = {{"t", cfg.t_level}, {"f", cfg.f_level}, {"pacf", cfg.pacf_critical}};
    j["granger"] = {{"pacf_max_lag", cfg.granger.pacf_max_lag},
                    {"x_max_lag", cfg.granger.x_max_lag},
                    {"simple_intercept", cfg.granger.simple_intercept},
                    {"ic", cfg.granger.ic == granger::InfoCriterion::Aic ? "aic" : "bic"},
                    {"ic_margin", cfg.granger.ic_margin},
                    {"sensitivity_lags", cfg.sensitivity_lags}};
    j["cointegration"] = {{"enabled", cfg.cointegration_enabled},
                          {"on_levels", cfg.cointegration_on_levels}};
    j["signal_sets"] = cfg.signal_sets;
    j["taxonomy_sets"] = cfg.taxonomy_sets;
    j["workers"] = cfg.workers;
    return j.dump(2);
}

std::string config_hash(const PipelineConfig& cfg) {
    const std::string s = to_canonical_json(cfg);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace bipcausal::pipeline
