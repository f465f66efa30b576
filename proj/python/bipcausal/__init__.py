"""Policy-impact time-series toolkit.

Thin wrapper around the native module: stationarity transforms,
OLS with significance filtering, Engle-Granger cointegration screening,
binary event signals from the improvement-proposal registry, and both
Granger-causality test variants.
"""

from bipcausal._core import (
    AdfResult,
    BipcausalError,
    CointegrationResult,
    GrangerConfig,
    GrangerVerdict,
    RegressionFit,
    TimeSeries,
    adf_test,
    aic,
    bic,
    builtin_set_members,
    diff_transform,
    downsample_monthly,
    engle_granger,
    f_upper_tail_p,
    full_granger,
    generate_fixture,
    load_registry_set_signal,
    log_change_transform,
    ols_fit,
    pacf,
    regularized_incomplete_beta,
    run_pipeline,
    select_ar_order,
    simple_granger,
    student_t_two_sided_p,
    vif,
)

__all__ = [
    "AdfResult",
    "BipcausalError",
    "CointegrationResult",
    "GrangerConfig",
    "GrangerVerdict",
    "RegressionFit",
    "TimeSeries",
    "adf_test",
    "aic",
    "bic",
    "builtin_set_members",
    "diff_transform",
    "downsample_monthly",
    "engle_granger",
    "f_upper_tail_p",
    "full_granger",
    "generate_fixture",
    "load_registry_set_signal",
    "log_change_transform",
    "ols_fit",
    "pacf",
    "regularized_incomplete_beta",
    "run_pipeline",
    "select_ar_order",
    "simple_granger",
    "student_t_two_sided_p",
    "vif",
]

__version__ = "0.1.0"
