#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bipcausal/cleaning.hpp"
#include "bipcausal/cointegration.hpp"
#include "bipcausal/config.hpp"
#include "bipcausal/errors.hpp"
#include "bipcausal/events.hpp"
#include "bipcausal/fixture.hpp"
#include "bipcausal/granger.hpp"
#include "bipcausal/pipeline.hpp"
#include "bipcausal/stats.hpp"
#include "bipcausal/timeseries.hpp"

namespace py = pybind11;
using namespace bipcausal;

namespace {

TimeSeries make_series(const std::string& label, const std::string& freq,
                       const std::vector<std::pair<std::string, double>>& points) {
    std::vector<DatedValue> pts;
    pts.reserve(points.size());
    for (const auto& [d, v] : points) pts.push_back({Date::parse(d), v});
    return TimeSeries(label, frequency_from_string(freq), std::move(pts));
}

std::vector<std::pair<std::string, double>> series_points(const TimeSeries& ts) {
    std::vector<std::pair<std::string, double>> out;
    out.reserve(ts.size());
    for (const auto& p : ts.points()) out.emplace_back(p.date.to_string(), p.value);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "native kernels: stationarity transforms, OLS, distribution tails, PACF, ADF, "
              "Engle-Granger screening, iterative filtering and Granger-causality tests";

    py::register_exception<Error>(m, "BipcausalError", PyExc_RuntimeError);

    // ---- time series ----
    py::class_<TimeSeries>(m, "TimeSeries")
        .def(py::init(&make_series), py::arg("label"), py::arg("frequency"), py::arg("points"))
        .def_property_readonly("label", &TimeSeries::label)
        .def_property_readonly("frequency",
                               [](const TimeSeries& ts) { return to_string(ts.frequency()); })
        .def_property_readonly("points", &series_points)
        .def("values", &TimeSeries::values)
        .def("dates",
             [](const TimeSeries& ts) {
                 std::vector<std::string> out;
                 for (const auto& d : ts.dates()) out.push_back(d.to_string());
                 return out;
             })
        .def("__len__", &TimeSeries::size);

    m.def("diff_transform", &diff_transform, py::arg("series"));
    m.def("log_change_transform", &log_change_transform, py::arg("series"));
    m.def("downsample_monthly", &downsample_monthly, py::arg("series"));

    // ---- statistics kernels ----
    m.def("student_t_two_sided_p", &stats::student_t_two_sided_p, py::arg("t"), py::arg("df"));
    m.def("f_upper_tail_p", &stats::f_upper_tail_p, py::arg("f"), py::arg("df1"), py::arg("df2"));
    m.def("regularized_incomplete_beta", &stats::regularized_incomplete_beta, py::arg("a"),
          py::arg("b"), py::arg("x"));
    m.def("aic", &stats::aic, py::arg("rss"), py::arg("n"), py::arg("k"));
    m.def("bic", &stats::bic, py::arg("rss"), py::arg("n"), py::arg("k"));
    m.def("pacf", &stats::pacf, py::arg("series"), py::arg("max_lag"));
    m.def("vif", &stats::vif, py::arg("columns"));

    py::class_<stats::RegressionFit>(m, "RegressionFit")
        .def_readonly("coefficients", &stats::RegressionFit::coefficients)
        .def_readonly("standard_errors", &stats::RegressionFit::standard_errors)
        .def_readonly("t_statistics", &stats::RegressionFit::t_statistics)
        .def_readonly("p_values", &stats::RegressionFit::p_values)
        .def_readonly("residuals", &stats::RegressionFit::residuals)
        .def_readonly("rss", &stats::RegressionFit::rss)
        .def_readonly("n_observations", &stats::RegressionFit::n_observations)
        .def_readonly("has_intercept", &stats::RegressionFit::has_intercept);

    m.def("ols_fit",
          [](const stats::Matrix& columns, const std::vector<double>& y, bool intercept) {
              return stats::ols_fit(columns, y, intercept);
          },
          py::arg("columns"), py::arg("y"), py::arg("intercept") = true);

    py::class_<stats::AdfResult>(m, "AdfResult")
        .def_readonly("test_statistic", &stats::AdfResult::test_statistic)
        .def_readonly("critical_value_5pct", &stats::AdfResult::critical_value_5pct)
        .def_readonly("lag_used", &stats::AdfResult::lag_used)
        .def_readonly("reject_unit_root", &stats::AdfResult::reject_unit_root);

    m.def("adf_test",
          [](const std::vector<double>& ts, std::size_t max_lag, bool coint_residual) {
              return stats::adf_test(ts, max_lag,
                                     coint_residual ? stats::AdfVariant::CointResidual
                                                    : stats::AdfVariant::UnitRoot);
          },
          py::arg("series"), py::arg("max_lag") = 10, py::arg("coint_residual") = false);

    // ---- cointegration ----
    py::class_<coint::CointegrationResult>(m, "CointegrationResult")
        .def_readonly("feature_label", &coint::CointegrationResult::feature_label)
        .def_readonly("bucket_label", &coint::CointegrationResult::bucket_label)
        .def_readonly("adf", &coint::CointegrationResult::adf)
        .def_readonly("cointegrated_at_5pct", &coint::CointegrationResult::cointegrated_at_5pct)
        .def_readonly("degenerate", &coint::CointegrationResult::degenerate)
        .def_readonly("shared_months", &coint::CointegrationResult::shared_months);

    m.def("engle_granger", &coint::engle_granger, py::arg("x"), py::arg("y"),
          py::arg("adf_max_lag") = 10);

    // ---- Granger causality ----
    py::class_<granger::GrangerConfig>(m, "GrangerConfig")
        .def(py::init<>())
        .def_readwrite("pacf_max_lag", &granger::GrangerConfig::pacf_max_lag)
        .def_readwrite("pacf_critical", &granger::GrangerConfig::pacf_critical)
        .def_readwrite("x_max_lag", &granger::GrangerConfig::x_max_lag)
        .def_readwrite("t_level", &granger::GrangerConfig::t_level)
        .def_readwrite("f_level", &granger::GrangerConfig::f_level)
        .def_readwrite("simple_intercept", &granger::GrangerConfig::simple_intercept)
        .def_readwrite("ic_margin", &granger::GrangerConfig::ic_margin);

    py::class_<granger::GrangerVerdict>(m, "GrangerVerdict")
        .def_readonly("accepted", &granger::GrangerVerdict::accepted)
        .def_property_readonly("longest_significant_lag",
                               [](const granger::GrangerVerdict& v) -> py::object {
                                   if (v.longest_significant_lag)
                                       return py::int_(*v.longest_significant_lag);
                                   return py::none();
                               })
        .def_property_readonly("failure_reason",
                               [](const granger::GrangerVerdict& v) -> py::object {
                                   if (v.failure_reason)
                                       return py::str(std::string(
                                           1, granger::failure_code(*v.failure_reason)));
                                   return py::none();
                               })
        .def_readonly("ar_order", &granger::GrangerVerdict::ar_order)
        .def_readonly("surviving_x_lags", &granger::GrangerVerdict::surviving_x_lags)
        .def("token", &granger::GrangerVerdict::token);

    m.def("full_granger",
          [](const std::vector<double>& x, const std::vector<double>& y,
             const granger::GrangerConfig& cfg) { return granger::full_granger(x, y, cfg); },
          py::arg("x"), py::arg("y"), py::arg("config") = granger::GrangerConfig{});
    m.def("simple_granger", &granger::simple_granger, py::arg("x"), py::arg("y"),
          py::arg("max_lag") = 10, py::arg("f_level") = 0.05, py::arg("intercept") = true);
    m.def("select_ar_order", &granger::select_ar_order, py::arg("y"), py::arg("config"));

    // ---- events ----
    m.def("load_registry_set_signal",
          [](const std::string& registry_path, const std::string& set_name,
             const std::vector<std::string>& grid) {
              const events::BipRegistry reg = events::load_registry(registry_path);
              std::vector<Date> months;
              for (const auto& d : grid) months.push_back(Date::parse(d));
              const events::EventSignal s =
                  events::build_signal(reg, events::builtin_set(reg, set_name), months);
              return std::make_pair(s.values, s.ignored_outside_grid);
          },
          py::arg("registry_path"), py::arg("set_name"), py::arg("grid"),
          "binary monthly signal for a built-in proposal set over an ISO month grid");
    m.def("builtin_set_members",
          [](const std::string& registry_path, const std::string& set_name) {
              const events::BipRegistry reg = events::load_registry(registry_path);
              const events::BipSet s = events::builtin_set(reg, set_name);
              return std::vector<int>(s.members.begin(), s.members.end());
          },
          py::arg("registry_path"), py::arg("set_name"));

    // ---- pipeline ----
    m.def("run_pipeline",
          [](const std::string& config_path) {
              const pipeline::PipelineConfig cfg = pipeline::load_config(config_path);
              const pipeline::PipelineReport rep = pipeline::run(cfg);
              return cfg.output_dir;
          },
          py::arg("config_path"), "full pipeline run; returns the output directory");
    m.def("generate_fixture",
          [](const std::string& dir, const std::string& registry, std::uint64_t seed) {
              return fixture::generate(dir, registry, seed).config_path;
          },
          py::arg("dir"), py::arg("registry"), py::arg("seed") = 20110101ull);
}
