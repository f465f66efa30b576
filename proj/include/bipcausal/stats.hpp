#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bipcausal::stats {

// ---------------------------------------------------------------------------
// Distribution tails
// ---------------------------------------------------------------------------

/// Regularized incomplete beta function I_x(a, b), continued-fraction
/// evaluation. Accurate to ~1e-14 over the parameter ranges used here.
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided Student-t tail probability 2*P(T_df >= |t|).
double student_t_two_sided_p(double t, std::size_t df);

/// Upper-tail F probability P(F_{df1,df2} >= f).
double f_upper_tail_p(double f, std::size_t df1, std::size_t df2);

/// Upper quantile of the standard normal: z with P(Z <= z) = p.
double normal_quantile(double p);

// ---------------------------------------------------------------------------
// Ordinary least squares
// ---------------------------------------------------------------------------

/// Column-major design matrix: columns[j][i] is observation i of regressor j.
using Matrix = std::vector<std::vector<double>>;

struct RegressionFit {
    std::vector<double> coefficients;    // intercept first when present
    std::vector<double> standard_errors;
    std::vector<double> t_statistics;
    std::vector<double> p_values;
    std::vector<double> residuals;
    double rss = 0.0;
    std::size_t n_observations = 0;
    bool has_intercept = false;

    std::size_t n_regressors() const { return coefficients.size(); }
    std::size_t df_residual() const { return n_observations - coefficients.size(); }
};

/// OLS with per-coefficient standard errors, t statistics and two-sided
/// p-values (df = n - k). When `intercept` is set a constant column is
/// prepended and reported first. Throws SingularityError on rank-deficient
/// designs (naming the dependent columns when `names` are supplied) and
/// InsufficientDataError when n <= k.
RegressionFit ols_fit(const Matrix& columns, const std::vector<double>& y, bool intercept,
                      const std::vector<std::string>* names = nullptr);

/// Variance inflation factors, one per column: VIF_j = 1/(1-R²_j) from the
/// auxiliary regression of column j on all the others (with intercept).
/// Perfect collinearity reports +inf for the affected columns.
std::vector<double> vif(const Matrix& columns);

/// Residual sum of squares of projecting y onto the column space, defined
/// for rank-deficient designs too (unlike ols_fit, which rejects them).
double projection_rss(const Matrix& columns, const std::vector<double>& y, bool intercept);

// ---------------------------------------------------------------------------
// Information criteria
// ---------------------------------------------------------------------------

/// n*ln(rss/n) + 2k (Gaussian likelihood up to constants).
/// rss == 0 maps to -inf, non-finite rss to +inf, so degenerate candidates
/// sort to the extremes instead of throwing.
double aic(double rss, std::size_t n, std::size_t k);

/// n*ln(rss/n) + k*ln(n); same sentinel behavior as aic().
double bic(double rss, std::size_t n, std::size_t k);

// ---------------------------------------------------------------------------
// Partial autocorrelation
// ---------------------------------------------------------------------------

/// Partial autocorrelations at lags 1..max_lag via the Durbin-Levinson
/// recursion on biased sample autocovariances. Throws LengthError when the
/// series is too short and DomainError on zero-variance input.
std::vector<double> pacf(const std::vector<double>& ts, std::size_t max_lag);

// ---------------------------------------------------------------------------
// F-test between nested models
// ---------------------------------------------------------------------------

struct FTestResult {
    double f_statistic = 0.0;
    double p_value = 1.0;
    std::size_t df_numerator = 0;
    std::size_t df_denominator = 0;
};

/// F = ((RSS_nested - RSS_parent)/dk) / (RSS_parent/(n - k_parent)).
/// Both fits must come from the same observation rows; a residual-count
/// mismatch raises AlignmentError and a zero parent RSS DegenerateFitError.
FTestResult f_test_nested(const RegressionFit& nested, const RegressionFit& parent);

// ---------------------------------------------------------------------------
// Augmented Dickey-Fuller unit-root test
// ---------------------------------------------------------------------------

/// Which MacKinnon 5% critical-value surface applies.
enum class AdfVariant {
    UnitRoot,            // plain ADF, constant-only regression
    CointResidual,       // Engle-Granger step-2 residuals, one regressor
};

struct AdfResult {
    double test_statistic = 0.0;
    double critical_value_5pct = 0.0;
    std::size_t lag_used = 0;
    bool reject_unit_root = false;
};

/// MacKinnon (2010) finite-sample 5% critical value for `nobs` regression
/// observations. The same constants ship as data/mackinnon_crit_5pct.csv.
double mackinnon_crit_5pct(AdfVariant variant, std::size_t nobs);

/// Regression dy_t = c + gamma*y_{t-1} + sum delta_i dy_{t-i}; augmentation
/// lag count picked by AIC over 0..max_lag on a common sample; the statistic
/// is t(gamma) compared against the 5% MacKinnon critical value.
AdfResult adf_test(const std::vector<double>& ts, std::size_t max_lag,
                   AdfVariant variant = AdfVariant::UnitRoot);

} // namespace bipcausal::stats
